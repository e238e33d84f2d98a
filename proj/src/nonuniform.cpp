#include "hsrlink/nonuniform.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <sstream>

#include "hsrlink/errors.hpp"
#include "hsrlink/numerics.hpp"

namespace hsrlink {

namespace {

double window_edge(const Scenario& s) { return s.l / s.v0; }

void check_delta(const Scenario& s, double delta_v) {
    if (!std::isfinite(delta_v) || delta_v < 0.0 || delta_v >= s.v0) {
        throw invalid_input("delta_v must lie in [0, v0)");
    }
}

// Structural sanity of the piecewise-constant representation. Admissibility
// (bounds and mean) is validate_velocity's job; this only guards indexing.
void check_structure(const Scenario& s, const VelocityProfile& vp) {
    const double T = window_edge(s);
    if (vp.boundaries.size() != vp.speeds.size() + 1 || vp.speeds.empty()) {
        throw invalid_input("velocity profile needs n+1 boundaries for n speeds");
    }
    if (!std::is_sorted(vp.boundaries.begin(), vp.boundaries.end())) {
        throw invalid_input("velocity profile boundaries must be sorted");
    }
    const double tol = 1e-9 * T;
    if (std::abs(vp.boundaries.front() + T) > tol ||
        std::abs(vp.boundaries.back() - T) > tol) {
        throw invalid_input("velocity profile must span the cell window");
    }
    for (double v : vp.speeds) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw invalid_input("velocity profile speeds must be positive");
        }
    }
}

// Worst-case along-track coordinate: fast branch through the middle of the
// window, slow branch outside, continuous at |t| = T/2.
double worst_position(const Scenario& s, double delta_v, double t) {
    const double T = window_edge(s);
    if (std::abs(t) <= T / 2.0) {
        return (s.v0 + delta_v) * t;
    }
    const double sign = t > 0.0 ? 1.0 : -1.0;
    return (s.v0 - delta_v) * t + sign * delta_v * T;
}

// Closed-form sampling of the worst-case path loss on [0, T]. The profile is
// even in t, so half-window averages equal full-window averages and the
// shared solvers apply unchanged.
SampledPathloss worst_half_pathloss(const Scenario& s, double delta_v) {
    const double T = window_edge(s);
    TimeGrid grid = make_time_grid(0.0, T, s.panels);
    const double sq = s.d0 * s.d0 + s.h0 * s.h0;
    std::vector<double> dalpha(grid.samples.size());
    for (std::size_t i = 0; i < grid.samples.size(); ++i) {
        const double x = worst_position(s, delta_v, grid.samples[i]);
        dalpha[i] = std::pow(sq + x * x, s.alpha / 2.0);
    }
    return SampledPathloss::build(std::move(grid), std::move(dalpha), s);
}

} // namespace

VelocityProfile uniform_velocity(const Scenario& s) {
    const double T = window_edge(s);
    VelocityProfile vp;
    vp.kind = VelocityProfile::Kind::Uniform;
    vp.v0 = s.v0;
    vp.delta_v = 0.0;
    vp.boundaries = {-T, T};
    vp.speeds = {s.v0};
    return vp;
}

VelocityProfile worst_case_velocity(const Scenario& s, double delta_v) {
    check_delta(s, delta_v);
    const double T = window_edge(s);
    VelocityProfile vp;
    vp.kind = VelocityProfile::Kind::WorstCase;
    vp.v0 = s.v0;
    vp.delta_v = delta_v;
    vp.boundaries = {-T, -T / 2.0, T / 2.0, T};
    vp.speeds = {s.v0 - delta_v, s.v0 + delta_v, s.v0 - delta_v};
    return vp;
}

VelocityProfile sample_admissible_velocity(const Scenario& s, double delta_v,
                                           std::uint64_t seed, int segments) {
    check_delta(s, delta_v);
    if (segments < 1) {
        throw invalid_input("segments must be positive");
    }
    const double T = window_edge(s);
    const double lo = s.v0 - delta_v;
    const double hi = s.v0 + delta_v;

    VelocityProfile vp;
    vp.kind = VelocityProfile::Kind::Sampled;
    vp.v0 = s.v0;
    vp.delta_v = delta_v;
    vp.boundaries.resize(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        vp.boundaries[static_cast<std::size_t>(i)] =
            -T + 2.0 * T * static_cast<double>(i) / static_cast<double>(segments);
    }
    vp.boundaries.back() = T;

    // Explicit bit mapping keeps the draw identical across standard library
    // implementations; uniform_real_distribution would not.
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    vp.speeds.resize(static_cast<std::size_t>(segments));
    for (double& v : vp.speeds) {
        v = lo + (hi - lo) * unit();
    }

    // Segments share one duration, so the time average is the plain mean.
    // Rescale toward mean v0 and clip back into the admissible band until
    // the mean constraint holds to 1e-9 relative.
    for (int iter = 0; iter < 1000; ++iter) {
        const double mean =
            std::accumulate(vp.speeds.begin(), vp.speeds.end(), 0.0) /
            static_cast<double>(segments);
        if (std::abs(mean - s.v0) <= 1e-9 * s.v0) {
            return vp;
        }
        const double scale = s.v0 / mean;
        for (double& v : vp.speeds) {
            v = std::clamp(v * scale, lo, hi);
        }
    }
    vp.speeds.assign(static_cast<std::size_t>(segments), s.v0);
    return vp;
}

VelocityCheck validate_velocity(const Scenario& s, const VelocityProfile& vp) {
    VelocityCheck out;
    std::ostringstream diag;
    try {
        check_structure(s, vp);
    } catch (const invalid_input& e) {
        out.pass = false;
        out.diagnostics = e.what();
        return out;
    }

    double excess = 0.0;
    for (double v : vp.speeds) {
        excess = std::max(excess, std::abs(v - vp.v0) - vp.delta_v);
    }
    out.bound_excess = excess;

    double travelled = 0.0;
    for (std::size_t i = 0; i < vp.speeds.size(); ++i) {
        travelled += vp.speeds[i] * (vp.boundaries[i + 1] - vp.boundaries[i]);
    }
    const double mean = travelled / (2.0 * window_edge(s));
    out.mean_error = (mean - s.v0) / s.v0;

    const bool bound_ok = excess <= 1e-9 * s.v0;
    const bool mean_ok = std::abs(out.mean_error) <= 1e-9;
    out.pass = bound_ok && mean_ok;
    if (!bound_ok) {
        diag << "speed bound exceeded by " << excess << " m/s; ";
    }
    if (!mean_ok) {
        diag << "time-average speed off v0 by relative " << out.mean_error << "; ";
    }
    if (out.pass) {
        diag << "ok";
    }
    out.diagnostics = diag.str();
    return out;
}

double position(const Scenario& s, const VelocityProfile& vp, double t) {
    const double T = window_edge(s);
    if (std::abs(t) > T * (1.0 + 1e-12)) {
        throw invalid_input("time lies outside the cell window");
    }
    t = std::clamp(t, -T, T);
    if (vp.kind == VelocityProfile::Kind::Uniform) {
        return vp.v0 * t;
    }
    if (vp.kind == VelocityProfile::Kind::WorstCase) {
        return worst_position(s, vp.delta_v, t);
    }
    check_structure(s, vp);
    double x = -s.l;
    for (std::size_t i = 0; i < vp.speeds.size(); ++i) {
        const double seg_lo = vp.boundaries[i];
        const double seg_hi = std::min(vp.boundaries[i + 1], t);
        if (seg_hi <= seg_lo) {
            break;
        }
        x += vp.speeds[i] * (seg_hi - seg_lo);
    }
    return x;
}

double distance_profile(const Scenario& s, const VelocityProfile& vp, double t) {
    const double x = position(s, vp, t);
    return std::sqrt(s.d0 * s.d0 + s.h0 * s.h0 + x * x);
}

SampledPathloss sample_profile_pathloss(const Scenario& s,
                                        const VelocityProfile& vp) {
    check_structure(s, vp);
    TimeGrid grid = make_time_grid(s);
    std::vector<double> dalpha(grid.samples.size());
    for (std::size_t i = 0; i < grid.samples.size(); ++i) {
        dalpha[i] = std::pow(distance_profile(s, vp, grid.samples[i]), s.alpha);
    }
    return SampledPathloss::build(std::move(grid), std::move(dalpha), s);
}

double conditional_capacity_worst(const Scenario& s, double delta_v, double r_ds,
                                  double p0_mw) {
    check_delta(s, delta_v);
    const SampledPathloss pl = worst_half_pathloss(s, delta_v);
    return haa_profile_on(pl, r_ds, p0_mw).achieved.r_di;
}

std::vector<NonuniformBoundaryPoint> worst_case_region(const Scenario& s,
                                                       double delta_v,
                                                       double p0_mw, int n) {
    check_delta(s, delta_v);
    if (n < 2) {
        throw invalid_input("region needs at least 2 points");
    }
    const SampledPathloss pl = worst_half_pathloss(s, delta_v);
    const double top = rds_max_on(pl, p0_mw);
    std::vector<NonuniformBoundaryPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double r_ds =
            top * static_cast<double>(i) / static_cast<double>(n - 1);
        const auto res = haa_profile_on(pl, r_ds, p0_mw);
        out.push_back({r_ds, res.achieved.r_di});
    }
    return out;
}

double min_power_profile(const Scenario& s, const VelocityProfile& vp,
                         RatePair demand) {
    switch (vp.kind) {
        case VelocityProfile::Kind::Uniform:
            return min_power_haa(s, demand).profile.avg_power;
        case VelocityProfile::Kind::WorstCase: {
            check_delta(s, vp.delta_v);
            const SampledPathloss pl = worst_half_pathloss(s, vp.delta_v);
            return min_power_haa_on(pl, demand).profile.avg_power;
        }
        case VelocityProfile::Kind::Sampled: {
            const SampledPathloss pl = sample_profile_pathloss(s, vp);
            return min_power_haa_on(pl, demand).profile.avg_power;
        }
    }
    throw invalid_input("unknown velocity profile kind");
}

std::vector<MarginPoint> power_margin_curve(const Scenario& s, RatePair demand,
                                            const std::vector<double>& ratios) {
    for (double r : ratios) {
        if (!std::isfinite(r) || r < 0.0 || r >= 1.0) {
            throw invalid_input("velocity shift ratios must lie in [0, 1)");
        }
    }
    const double p_uniform = min_power_haa(s, demand).profile.avg_power;
    std::vector<MarginPoint> out;
    out.reserve(ratios.size());
    for (double r : ratios) {
        const VelocityProfile worst = worst_case_velocity(s, r * s.v0);
        const double p_worst = min_power_profile(s, worst, demand);
        const double normalized = p_worst / p_uniform;
        out.push_back({r, normalized, 10.0 * std::log10(normalized)});
    }
    return out;
}

} // namespace hsrlink
