#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsrlink/channel.hpp"
#include "hsrlink/scenario.hpp"

namespace hsrlink {

enum class Strategy { FPA, CIA, WFA, HAA };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// A sampled transmit-power schedule over one cell crossing.
// avg_power is the quadrature time average of p; water_level carries the
// dual value B/lambda when a water-filling term is present.
struct PowerProfile {
    TimeGrid grid;
    std::vector<double> p;
    double avg_power = 0.0;
    std::optional<double> water_level;
};

struct AllocationResult {
    PowerProfile profile;
    RatePair achieved;
    Strategy strategy;
};

// Path loss d(t)^alpha sampled over a time window, with the quadrature
// weights and radio constants the solvers need. The allocation solvers are
// written against this view so that non-uniform motion reuses them with a
// different distance profile.
struct SampledPathloss {
    TimeGrid grid;
    std::vector<double> dalpha;
    std::vector<double> weights;     // Simpson weights over grid.span()
    std::vector<double> log2_dalpha; // cached log2 of dalpha
    double b = 0.0;
    double kappa = 0.0;
    double rate_tol = 0.0;
    double power_tol = 0.0;
    double mean_dalpha = 0.0;
    double min_dalpha = 0.0;
    double max_dalpha = 0.0;

    static SampledPathloss build(TimeGrid grid, std::vector<double> dalpha,
                                 const Scenario& s);

    double avg(const std::vector<double>& f) const;
    // Average of B log2(max(2^{r_ds/B}, kappa w / d^alpha)): the rate of the
    // hybrid profile with channel-inversion floor r_ds and water level w.
    double hybrid_rate_avg(double w, double r_ds) const;
    // Average of max(floor(r_ds), w - d^alpha/kappa): its power.
    double hybrid_power_avg(double w, double r_ds) const;
    // Average floor power d^alpha (2^{r_ds/B}-1)/kappa.
    double floor_avg(double r_ds) const;
};

// Uniform-motion sampling of the full window [-L/v0, L/v0].
SampledPathloss sample_uniform_pathloss(const Scenario& s);

// Largest delay-sensitive rate a budget P0 supports:
// B log2(1 + kappa P0 / mean_pathloss).
double rds_max(const Scenario& s, double p0_mw);
double rds_max_on(const SampledPathloss& pl, double p0_mw);

// Channel inversion: constant instantaneous rate r_ds.
AllocationResult cia_profile(const Scenario& s, double r_ds);

// Water filling at budget P0; achieved.r_di is the ergodic maximum.
AllocationResult wfa_profile(const Scenario& s, double p0_mw);

// Hybrid: pointwise max of the r_ds inversion floor and a water-filling
// term, water level solved so the average power meets P0.
AllocationResult haa_profile(const Scenario& s, double r_ds, double p0_mw);
AllocationResult haa_profile_on(const SampledPathloss& pl, double r_ds, double p0_mw);

// Average achievable delay-insensitive rate at (r_ds, P0).
double conditional_capacity(const Scenario& s, double r_ds, double p0_mw);

// Minimum-budget solvers per strategy.
AllocationResult min_power_haa(const Scenario& s, RatePair demand);
AllocationResult min_power_haa_on(const SampledPathloss& pl, RatePair demand);
double min_power_fpa(const Scenario& s, RatePair demand);
double min_power_wfa(const Scenario& s, RatePair demand);
double min_power_cia(const Scenario& s, RatePair demand);

struct MinPowerRow {
    RatePair demand;
    double fpa_mw;
    double wfa_mw;
    double cia_mw;
    double haa_mw;
    Strategy best;
};

std::vector<MinPowerRow> min_power_table(const Scenario& s,
                                         const std::vector<RatePair>& demands);

// The original fixed-factor dual update schedule, kept for comparison with
// the bisection solver. The multiplicative step sizes (shrink by 1/1.1,
// grow by 1.07) and the 0.001 Mbps stopping window are applied to the water
// level, the orientation in which the iteration contracts toward the target
// (the achieved rate increases with the water level). The asymmetric factors
// make the iterate orbit the target until it lands inside the window, so
// convergence can take thousands of steps; non-convergence within max_iters
// is reported, never masked.
struct FixedStepResult {
    double avg_power_mw = 0.0;
    double water_level = 0.0;
    int iterations = 0;
    bool converged = false;
};

FixedStepResult min_power_haa_fixed_step(const Scenario& s, RatePair demand,
                                          int max_iters = 50000);

} // namespace hsrlink
