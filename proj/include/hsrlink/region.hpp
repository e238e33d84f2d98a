#pragma once

#include <string>
#include <vector>

#include "hsrlink/allocators.hpp"
#include "hsrlink/scenario.hpp"

namespace hsrlink {

// Ordered boundary of an achievable rate region at a fixed budget:
// r_ds increases across points, r_di is non-increasing.
struct RateRegionBoundary {
    struct Point {
        double r_ds;
        double r_di;
    };
    std::vector<Point> points;
    double budget_mw = 0.0;
    std::string label;
};

// Hybrid-allocation boundary: conditional capacity at n evenly spaced r_ds
// in [0, rds_max]. Endpoints are the ergodic and inversion closed forms.
RateRegionBoundary sweep_region(const Scenario& s, double p0_mw, int n);

// Largest r_di each fixed-shape strategy supports per shared r_ds grid point
// at budget P0; 0 where the strategy cannot meet the r_ds floor.
RateRegionBoundary baseline_region(const Scenario& s, double p0_mw,
                                   Strategy strategy, int n);

// Two identical sub-channels of bandwidth B sharing a total power budget:
// sub-channel A carries the delay-sensitive stream under channel inversion,
// sub-channel B the delay-insensitive stream under water filling. Sweeps the
// power split and returns the upper concave envelope of the swept points.
RateRegionBoundary separate_schedule_region(const Scenario& s, double p0_total_mw,
                                            int n_split = 200);

// Both sub-channels driven jointly by the hybrid allocator: one aggregate
// channel of bandwidth 2B whose power is split evenly across the halves, so
// the per-channel SNR sees half the aggregate transmit power.
RateRegionBoundary simultaneous_region_two_channels(const Scenario& s,
                                                    double p0_total_mw, int n);

// The aggregate-resource scenario backing the simultaneous schedule.
Scenario two_channel_aggregate(const Scenario& s);

} // namespace hsrlink
