#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsrlink/allocators.hpp"
#include "hsrlink/scenario.hpp"

namespace hsrlink {

// An instantaneous-speed realization over one cell crossing. Admissible
// profiles keep |v(t) - v0| <= delta_v everywhere and average exactly v0
// over the window, so the train still crosses [-L, L] in 2L/v0 seconds.
struct VelocityProfile {
    enum class Kind { Uniform, WorstCase, Sampled };
    Kind kind = Kind::Uniform;
    double v0 = 0.0;
    double delta_v = 0.0;
    // Piecewise-constant representation: boundaries has one more entry than
    // speeds; segment i spans [boundaries[i], boundaries[i+1]].
    std::vector<double> boundaries;
    std::vector<double> speeds;
};

VelocityProfile uniform_velocity(const Scenario& s);

// The power-maximizing admissible realization: fastest allowed speed while
// near the base station, slowest while far, switching at +-L/(2 v0).
VelocityProfile worst_case_velocity(const Scenario& s, double delta_v);

// Deterministic seeded piecewise-constant admissible profile; falls back to
// uniform if the mean constraint cannot be met after clipping iterations.
VelocityProfile sample_admissible_velocity(const Scenario& s, double delta_v,
                                           std::uint64_t seed, int segments = 16);

struct VelocityCheck {
    bool pass = false;
    double bound_excess = 0.0; // worst |v - v0| - delta_v, m/s
    double mean_error = 0.0;   // relative deviation of the time average from v0
    std::string diagnostics;
};

VelocityCheck validate_velocity(const Scenario& s, const VelocityProfile& vp);

// Signed along-track coordinate -L + integral of v from -L/v0 to t.
double position(const Scenario& s, const VelocityProfile& vp, double t);

// sqrt(d0^2 + h0^2 + position(t)^2).
double distance_profile(const Scenario& s, const VelocityProfile& vp, double t);

// Conditional capacity when the train follows the worst-case realization;
// evaluated on the symmetric half window and doubled.
double conditional_capacity_worst(const Scenario& s, double delta_v, double r_ds,
                                  double p0_mw);

// Hybrid-allocation region boundary under the worst-case realization.
struct NonuniformBoundaryPoint {
    double r_ds;
    double r_di;
};
std::vector<NonuniformBoundaryPoint> worst_case_region(const Scenario& s,
                                                       double delta_v,
                                                       double p0_mw, int n);

// Minimum average power supporting the demand when distance follows vp.
double min_power_profile(const Scenario& s, const VelocityProfile& vp,
                         RatePair demand);

// Worst-case minimum power normalized by the uniform-motion value, one entry
// per requested Delta v / v0 ratio.
struct MarginPoint {
    double ratio;
    double normalized_power;
    double db;
};
std::vector<MarginPoint> power_margin_curve(const Scenario& s, RatePair demand,
                                            const std::vector<double>& ratios);

// Path-loss sampling for a velocity profile; exposed so tests can drive the
// shared solvers directly.
SampledPathloss sample_profile_pathloss(const Scenario& s, const VelocityProfile& vp);

} // namespace hsrlink
