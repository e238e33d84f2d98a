#include "hsrlink/region.hpp"

#include <algorithm>
#include <cmath>

#include "hsrlink/errors.hpp"

namespace hsrlink {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = (i == n - 1) ? b : a + (b - a) * i / (n - 1);
    return v;
}

} // namespace

RateRegionBoundary sweep_region(const Scenario& s, double p0_mw, int n) {
    if (n < 2) throw invalid_input("sweep_region: need at least 2 points");
    const SampledPathloss pl = sample_uniform_pathloss(s);
    const double cap = rds_max_on(pl, p0_mw);
    RateRegionBoundary out;
    out.budget_mw = p0_mw;
    out.label = strategy_name(Strategy::HAA);
    out.points.reserve(n);
    for (double r_ds : linspace(0.0, cap, n)) {
        const AllocationResult a = haa_profile_on(pl, r_ds, p0_mw);
        out.points.push_back({r_ds, std::max(a.achieved.r_di, 0.0)});
    }
    return out;
}

RateRegionBoundary baseline_region(const Scenario& s, double p0_mw,
                                   Strategy strategy, int n) {
    if (n < 2) throw invalid_input("baseline_region: need at least 2 points");
    if (strategy == Strategy::HAA) return sweep_region(s, p0_mw, n);

    const SampledPathloss pl = sample_uniform_pathloss(s);
    const double cap = rds_max_on(pl, p0_mw);
    RateRegionBoundary out;
    out.budget_mw = p0_mw;
    out.label = strategy_name(strategy);
    out.points.reserve(n);

    // Each baseline keeps one fixed profile shape at the full budget; only
    // the r_ds/r_di split of the achieved rates varies along the boundary.
    double edge_rate = 0.0; // largest supportable r_ds
    double avg_rate = 0.0;  // total rate the shape delivers on average
    switch (strategy) {
        case Strategy::FPA: {
            const double d_edge = std::pow(pl.max_dalpha, 1.0 / s.alpha);
            edge_rate = inst_rate(s, p0_mw, d_edge);
            std::vector<double> r(pl.dalpha.size());
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] = s.b * std::log2(1.0 + s.kappa * p0_mw / pl.dalpha[i]);
            avg_rate = pl.avg(r);
            break;
        }
        case Strategy::CIA:
            edge_rate = cap;
            avg_rate = cap;
            break;
        case Strategy::WFA: {
            const AllocationResult w = haa_profile_on(pl, 0.0, p0_mw);
            avg_rate = w.achieved.r_di;
            const double lvl = w.profile.water_level.value_or(0.0);
            const double edge_arg = s.kappa * lvl / pl.max_dalpha;
            edge_rate = edge_arg > 1.0 ? s.b * std::log2(edge_arg) : 0.0;
            break;
        }
        case Strategy::HAA:
            break;
    }

    for (double r_ds : linspace(0.0, cap, n)) {
        double r_di = 0.0;
        if (r_ds <= edge_rate * (1.0 + s.rate_tol) || r_ds == 0.0)
            r_di = std::max(avg_rate - r_ds, 0.0);
        out.points.push_back({r_ds, r_di});
    }
    return out;
}

Scenario two_channel_aggregate(const Scenario& s) {
    Scenario agg = s;
    agg.b = 2.0 * s.b;
    agg.kappa = s.kappa / 2.0;
    return agg;
}

RateRegionBoundary separate_schedule_region(const Scenario& s, double p0_total_mw,
                                            int n_split) {
    if (n_split < 2) throw invalid_input("separate_schedule_region: need >= 2 splits");
    if (p0_total_mw < 0) throw invalid_input("negative total budget");
    const SampledPathloss pl = sample_uniform_pathloss(s);

    RateRegionBoundary out;
    out.budget_mw = p0_total_mw;
    out.label = "separate";
    out.points.reserve(n_split);
    for (double p_a : linspace(0.0, p0_total_mw, n_split)) {
        const double r_ds = rds_max_on(pl, p_a);
        const double p_b = p0_total_mw - p_a;
        double r_di = 0.0;
        if (p_b > 0.0)
            r_di = haa_profile_on(pl, 0.0, p_b).achieved.r_di;
        out.points.push_back({r_ds, r_di});
    }

    // Upper concave envelope over increasing r_ds (drops any point lying
    // under the chord of its neighbours).
    std::vector<RateRegionBoundary::Point> hull;
    for (const auto& pt : out.points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b.r_ds - a.r_ds) * (pt.r_di - a.r_di) -
                                 (b.r_di - a.r_di) * (pt.r_ds - a.r_ds);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    out.points = std::move(hull);
    return out;
}

RateRegionBoundary simultaneous_region_two_channels(const Scenario& s,
                                                    double p0_total_mw, int n) {
    RateRegionBoundary out = sweep_region(two_channel_aggregate(s), p0_total_mw, n);
    out.label = "simultaneous";
    return out;
}

} // namespace hsrlink
