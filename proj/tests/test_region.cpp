#include <doctest.h>

#include <cmath>

#include "hsrlink/allocators.hpp"
#include "hsrlink/errors.hpp"
#include "hsrlink/region.hpp"
#include "hsrlink/scenario.hpp"

using namespace hsrlink;

namespace {

// Linear interpolation of a boundary's r_di at a given r_ds; boundaries are
// swept with r_ds increasing. Queries beyond the last point return 0.
double boundary_rdi_at(const RateRegionBoundary& b, double r_ds) {
    if (r_ds <= b.points.front().r_ds) return b.points.front().r_di;
    for (std::size_t i = 1; i < b.points.size(); ++i) {
        if (r_ds <= b.points[i].r_ds) {
            const auto& lo = b.points[i - 1];
            const auto& hi = b.points[i];
            const double f = (r_ds - lo.r_ds) / (hi.r_ds - lo.r_ds);
            return lo.r_di + f * (hi.r_di - lo.r_di);
        }
    }
    return 0.0;
}

} // namespace

TEST_CASE("hybrid sweep endpoints match the two closed-form corners") {
    const Scenario s = default_scenario();
    for (double p0 : {100.0, 1000.0, 10000.0}) {
        const RateRegionBoundary b = sweep_region(s, p0, 2);
        REQUIRE(b.points.size() == 2);
        CHECK(b.points.front().r_ds == 0.0);
        CHECK(b.points.front().r_di ==
              doctest::Approx(wfa_profile(s, p0).achieved.r_di).epsilon(1e-9));
        CHECK(b.points.back().r_ds ==
              doctest::Approx(rds_max(s, p0)).epsilon(1e-12));
        CHECK(b.points.back().r_di == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("hybrid sweep is monotone along the boundary") {
    const Scenario s = default_scenario();
    const RateRegionBoundary b = sweep_region(s, 1000.0, 40);
    for (std::size_t i = 1; i < b.points.size(); ++i) {
        CHECK(b.points[i].r_ds > b.points[i - 1].r_ds);
        CHECK(b.points[i].r_di <= b.points[i - 1].r_di * (1.0 + 1e-12));
    }
}

TEST_CASE("baselines share the hybrid grid and are dominated by it") {
    const Scenario s = default_scenario();
    const double p0 = 1000.0;
    const int n = 50;
    const RateRegionBoundary haa = sweep_region(s, p0, n);
    for (Strategy st : {Strategy::FPA, Strategy::CIA, Strategy::WFA}) {
        const RateRegionBoundary base = baseline_region(s, p0, st, n);
        REQUIRE(base.points.size() == haa.points.size());
        bool strict_interior = false;
        for (std::size_t i = 0; i < haa.points.size(); ++i) {
            REQUIRE(base.points[i].r_ds ==
                    doctest::Approx(haa.points[i].r_ds).epsilon(1e-15));
            CHECK(haa.points[i].r_di >=
                  base.points[i].r_di * (1.0 - 1e-9) - 1e-6);
            if (i > 0 && i + 1 < haa.points.size() &&
                haa.points[i].r_di > base.points[i].r_di + 1.0) {
                strict_interior = true;
            }
        }
        CHECK_MESSAGE(strict_interior, "no strict interior gap for ",
                      strategy_name(st));
    }
}

TEST_CASE("channel-inversion baseline is the straight total-rate line") {
    const Scenario s = default_scenario();
    const double p0 = 1000.0;
    const double cap = rds_max(s, p0);
    const RateRegionBoundary b = baseline_region(s, p0, Strategy::CIA, 11);
    for (const auto& pt : b.points) {
        CHECK(pt.r_di == doctest::Approx(cap - pt.r_ds).epsilon(1e-9));
    }
}

TEST_CASE("fixed-power baseline collapses once the edge rate is exceeded") {
    const Scenario s = default_scenario();
    const double p0 = 1000.0;
    // Constant power p0 at the cell edge supports ~1.13 Mbps; far below
    // rds_max ~ 3.27 Mbps, so the tail of the shared grid is infeasible.
    const RateRegionBoundary b = baseline_region(s, p0, Strategy::FPA, 50);
    CHECK(b.points.front().r_di > 0.0);
    CHECK(b.points.back().r_di == 0.0);
    bool seen_zero = false;
    for (const auto& pt : b.points) {
        if (pt.r_di == 0.0) seen_zero = true;
        // Once infeasible, stays infeasible.
        if (seen_zero && pt.r_ds > 1.2e6) CHECK(pt.r_di == 0.0);
    }
}

TEST_CASE("water-filling baseline starts at the ergodic corner") {
    const Scenario s = default_scenario();
    const double p0 = 1000.0;
    const RateRegionBoundary b = baseline_region(s, p0, Strategy::WFA, 25);
    CHECK(b.points.front().r_ds == 0.0);
    CHECK(b.points.front().r_di ==
          doctest::Approx(wfa_profile(s, p0).achieved.r_di).epsilon(1e-9));
}

TEST_CASE("region sweeps reject degenerate grids") {
    const Scenario s = default_scenario();
    CHECK_THROWS_AS(sweep_region(s, 1000.0, 1), invalid_input);
    CHECK_THROWS_AS(baseline_region(s, 1000.0, Strategy::FPA, 0), invalid_input);
}

TEST_CASE("the aggregate two-channel scenario doubles bandwidth, halves gain") {
    const Scenario s = default_scenario();
    const Scenario agg = two_channel_aggregate(s);
    CHECK(agg.b == 2.0 * s.b);
    CHECK(agg.kappa == 0.5 * s.kappa);
    CHECK(agg.d0 == s.d0);
    CHECK(agg.panels == s.panels);
}

TEST_CASE("simultaneous frontier matches the frozen aggregate corners") {
    const Scenario s = default_scenario();
    const RateRegionBoundary sim = simultaneous_region_two_channels(s, 1e4, 2);
    CHECK(sim.points.front().r_di ==
          doctest::Approx(73637012.48657784).epsilon(1e-8));
    CHECK(sim.points.back().r_ds ==
          doctest::Approx(27095896.310460687).epsilon(1e-10));
}

TEST_CASE("separate schedule sweeps the split and stays concave") {
    const Scenario s = default_scenario();
    const RateRegionBoundary sep = separate_schedule_region(s, 1e4);
    REQUIRE(sep.points.size() >= 3);
    CHECK(sep.points.front().r_ds == 0.0);
    // All power on the delay-insensitive channel recovers the single-channel
    // ergodic maximum.
    CHECK(sep.points.front().r_di ==
          doctest::Approx(46852254.76).epsilon(1e-8));
    CHECK(sep.points.back().r_di == doctest::Approx(0.0).epsilon(1e-9));
    // Upper concave envelope: slopes never increase left to right.
    for (std::size_t i = 2; i < sep.points.size(); ++i) {
        const auto& a = sep.points[i - 2];
        const auto& b = sep.points[i - 1];
        const auto& c = sep.points[i];
        const double s1 = (b.r_di - a.r_di) / (b.r_ds - a.r_ds);
        const double s2 = (c.r_di - b.r_di) / (c.r_ds - b.r_ds);
        CHECK(s2 <= s1 + 1e-9 * std::fabs(s1));
    }
}

TEST_CASE("simultaneous transmission dominates the separate schedule") {
    const Scenario s = default_scenario();
    const double p0 = 1e4;
    const RateRegionBoundary sim = simultaneous_region_two_channels(s, p0, 50);
    const RateRegionBoundary sep = separate_schedule_region(s, p0);
    for (const auto& pt : sim.points) {
        const double sep_rdi = boundary_rdi_at(sep, pt.r_ds);
        CHECK(pt.r_di >= sep_rdi * (1.0 - 1e-9) - 1e-6);
    }
    const double gain =
        sim.points.front().r_di / sep.points.front().r_di - 1.0;
    CHECK(gain == doctest::Approx(0.57169).epsilon(1e-3));
}

TEST_CASE("dominance of the joint schedule holds at a small budget too") {
    const Scenario s = default_scenario();
    const double p0 = 1.0; // 0 dBm
    const RateRegionBoundary sim = simultaneous_region_two_channels(s, p0, 20);
    const RateRegionBoundary sep = separate_schedule_region(s, p0, 60);
    REQUIRE(!sim.points.empty());
    REQUIRE(!sep.points.empty());
    for (const auto& pt : sim.points) {
        CHECK(pt.r_di >= boundary_rdi_at(sep, pt.r_ds) * (1.0 - 1e-9) - 1e-6);
    }
}
