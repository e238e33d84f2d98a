#include "hsrlink/allocators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsrlink/errors.hpp"
#include "hsrlink/numerics.hpp"

namespace hsrlink {

namespace {

constexpr double kBisectTol = 1e-13;
const double kLn2 = std::log(2.0);

void check_demand(const RatePair& demand) {
    if (!(std::isfinite(demand.r_di) && std::isfinite(demand.r_ds)))
        throw invalid_input("demand rates must be finite");
    if (demand.r_di < 0 || demand.r_ds < 0)
        throw invalid_input("demand rates must be non-negative");
}

// Grows hi geometrically until g(hi) >= 0; g must be monotone increasing.
template <class G>
double grow_upper(G&& g, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double v = g(hi);
        if (!std::isfinite(v))
            throw solver_failure("bracket growth hit a non-finite value");
        if (v >= 0) return hi;
        hi *= 2.0;
    }
    throw solver_failure("bracket growth failed to overshoot the target");
}

} // namespace

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::FPA: return "fpa";
        case Strategy::CIA: return "cia";
        case Strategy::WFA: return "wfa";
        case Strategy::HAA: return "haa";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "fpa") return Strategy::FPA;
    if (name == "cia") return Strategy::CIA;
    if (name == "wfa") return Strategy::WFA;
    if (name == "haa") return Strategy::HAA;
    throw invalid_input("unknown strategy '" + name + "' (expected fpa|cia|wfa|haa)");
}

SampledPathloss SampledPathloss::build(TimeGrid grid, std::vector<double> dalpha,
                                       const Scenario& s) {
    SampledPathloss pl;
    const int panels = static_cast<int>(dalpha.size()) - 1;
    pl.weights = simpson_weights(panels, grid.span());
    pl.grid = std::move(grid);
    pl.dalpha = std::move(dalpha);
    pl.log2_dalpha.resize(pl.dalpha.size());
    for (std::size_t i = 0; i < pl.dalpha.size(); ++i)
        pl.log2_dalpha[i] = std::log2(pl.dalpha[i]);
    pl.b = s.b;
    pl.kappa = s.kappa;
    pl.rate_tol = s.rate_tol;
    pl.power_tol = s.power_tol;
    pl.mean_dalpha = pl.avg(pl.dalpha);
    pl.min_dalpha = *std::min_element(pl.dalpha.begin(), pl.dalpha.end());
    pl.max_dalpha = *std::max_element(pl.dalpha.begin(), pl.dalpha.end());
    return pl;
}

double SampledPathloss::avg(const std::vector<double>& f) const {
    return weighted_sum(weights, f) / grid.span();
}

double SampledPathloss::hybrid_rate_avg(double w, double r_ds) const {
    const double floor_exp = r_ds / b;
    const double l2kw = std::log2(kappa * w);
    double acc = 0.0;
    for (std::size_t i = 0; i < dalpha.size(); ++i)
        acc += weights[i] * std::max(floor_exp, l2kw - log2_dalpha[i]);
    return b * acc / grid.span();
}

double SampledPathloss::hybrid_power_avg(double w, double r_ds) const {
    const double floor_fac = std::expm1(r_ds / b * kLn2) / kappa;
    double acc = 0.0;
    for (std::size_t i = 0; i < dalpha.size(); ++i)
        acc += weights[i] * std::max(dalpha[i] * floor_fac, w - dalpha[i] / kappa);
    return acc / grid.span();
}

double SampledPathloss::floor_avg(double r_ds) const {
    return mean_dalpha * std::expm1(r_ds / b * kLn2) / kappa;
}

SampledPathloss sample_uniform_pathloss(const Scenario& s) {
    validate_scenario(s);
    TimeGrid grid = make_time_grid(s);
    std::vector<double> dal(grid.samples.size());
    const double sq = s.d0 * s.d0 + s.h0 * s.h0;
    const double half = s.alpha / 2.0;
    for (std::size_t i = 0; i < grid.samples.size(); ++i) {
        const double x = s.v0 * grid.samples[i];
        dal[i] = std::pow(sq + x * x, half);
    }
    return SampledPathloss::build(std::move(grid), std::move(dal), s);
}

double rds_max_on(const SampledPathloss& pl, double p0_mw) {
    if (p0_mw < 0) throw invalid_input("rds_max: negative budget");
    return pl.b * std::log1p(pl.kappa * p0_mw / pl.mean_dalpha) / kLn2;
}

double rds_max(const Scenario& s, double p0_mw) {
    return rds_max_on(sample_uniform_pathloss(s), p0_mw);
}

namespace {

// Shared profile assembly: p(t) = max(floor(r_ds), w - d^alpha/kappa), or the
// pure floor when w is absent.
AllocationResult assemble(const SampledPathloss& pl, double r_ds,
                          std::optional<double> w, Strategy strategy) {
    PowerProfile prof;
    prof.grid = pl.grid;
    prof.p.resize(pl.dalpha.size());
    const double floor_fac = std::expm1(r_ds / pl.b * kLn2) / pl.kappa;
    for (std::size_t i = 0; i < pl.dalpha.size(); ++i) {
        const double floor = pl.dalpha[i] * floor_fac;
        prof.p[i] = w ? std::max(floor, *w - pl.dalpha[i] / pl.kappa) : floor;
    }
    prof.avg_power = pl.avg(prof.p);
    prof.water_level = w;
    const double r_avg = w ? pl.hybrid_rate_avg(*w, r_ds) : r_ds;
    return AllocationResult{std::move(prof), RatePair{r_avg - r_ds, r_ds}, strategy};
}

AllocationResult budget_solve(const SampledPathloss& pl, double r_ds, double p0_mw,
                              Strategy strategy) {
    if (r_ds < 0) throw invalid_input("r_ds must be non-negative");
    if (p0_mw < 0) throw invalid_input("budget must be non-negative");
    const double cap = rds_max_on(pl, p0_mw);
    if (r_ds > cap * (1.0 + pl.rate_tol))
        throw infeasible_demand("r_ds exceeds rds_max at this budget (" +
                                std::to_string(r_ds) + " > " + std::to_string(cap) + " bit/s)");
    const double cia_avg = pl.floor_avg(r_ds);
    if (cia_avg > p0_mw * (1.0 + pl.power_tol) + std::numeric_limits<double>::min())
        throw infeasible_demand("budget below the channel-inversion floor");
    if (cia_avg >= p0_mw * (1.0 - pl.power_tol))
        return assemble(pl, r_ds, std::nullopt, strategy);

    // Water level where the water term first rises above the floor anywhere.
    const double pow2 = std::exp2(r_ds / pl.b);
    const double floor_fac = (pow2 - 1.0) / pl.kappa;
    const double w_lo = pl.min_dalpha * (floor_fac + 1.0 / pl.kappa);
    auto g = [&](double w) { return pl.hybrid_power_avg(w, r_ds) - p0_mw; };
    const double w_hi = grow_upper(g, std::max(2.0 * w_lo, p0_mw));
    const double w = solve_monotone(g, w_lo, w_hi, kBisectTol);
    return assemble(pl, r_ds, w, strategy);
}

} // namespace

AllocationResult cia_profile(const Scenario& s, double r_ds) {
    if (r_ds < 0) throw invalid_input("r_ds must be non-negative");
    const SampledPathloss pl = sample_uniform_pathloss(s);
    return assemble(pl, r_ds, std::nullopt, Strategy::CIA);
}

AllocationResult wfa_profile(const Scenario& s, double p0_mw) {
    if (!(p0_mw > 0)) throw invalid_input("wfa_profile: budget must be positive");
    return budget_solve(sample_uniform_pathloss(s), 0.0, p0_mw, Strategy::WFA);
}

AllocationResult haa_profile_on(const SampledPathloss& pl, double r_ds, double p0_mw) {
    return budget_solve(pl, r_ds, p0_mw, Strategy::HAA);
}

AllocationResult haa_profile(const Scenario& s, double r_ds, double p0_mw) {
    return budget_solve(sample_uniform_pathloss(s), r_ds, p0_mw, Strategy::HAA);
}

double conditional_capacity(const Scenario& s, double r_ds, double p0_mw) {
    return haa_profile(s, r_ds, p0_mw).achieved.r_di;
}

AllocationResult min_power_haa_on(const SampledPathloss& pl, RatePair demand) {
    check_demand(demand);
    if (demand.r_di <= 0)
        return assemble(pl, demand.r_ds, std::nullopt, Strategy::HAA);

    const double pow2 = std::exp2(demand.r_ds / pl.b);
    const double target = demand.r_ds + demand.r_di;
    const double w_lo = pl.min_dalpha * pow2 / pl.kappa;
    auto g = [&](double w) { return pl.hybrid_rate_avg(w, demand.r_ds) - target; };
    const double w_hi = grow_upper(g, std::max(2.0 * w_lo, 1.0));
    const double w = solve_monotone(g, w_lo, w_hi, kBisectTol);
    return assemble(pl, demand.r_ds, w, Strategy::HAA);
}

AllocationResult min_power_haa(const Scenario& s, RatePair demand) {
    return min_power_haa_on(sample_uniform_pathloss(s), demand);
}

double min_power_fpa(const Scenario& s, RatePair demand) {
    check_demand(demand);
    const SampledPathloss pl = sample_uniform_pathloss(s);
    const double p_edge = pl.max_dalpha * std::expm1(demand.r_ds / pl.b * kLn2) / pl.kappa;
    const double target = demand.r_ds + demand.r_di;
    if (target <= 0) return 0.0;
    auto rate_avg = [&](double p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < pl.dalpha.size(); ++i)
            acc += pl.weights[i] * std::log1p(pl.kappa * p / pl.dalpha[i]);
        return pl.b * acc / (pl.grid.span() * kLn2);
    };
    auto g = [&](double p) { return rate_avg(p) - target; };
    const double hi = grow_upper(g, 1.0);
    const double p_rate = solve_monotone(g, 0.0, hi, kBisectTol);
    return std::max(p_edge, p_rate);
}

double min_power_wfa(const Scenario& s, RatePair demand) {
    check_demand(demand);
    const SampledPathloss pl = sample_uniform_pathloss(s);
    const double w_edge =
        demand.r_ds > 0 ? pl.max_dalpha * std::exp2(demand.r_ds / pl.b) / pl.kappa : 0.0;
    const double target = demand.r_ds + demand.r_di;
    double w = w_edge;
    if (target > 0) {
        const double w_lo = pl.min_dalpha / pl.kappa;
        auto g = [&](double x) { return pl.hybrid_rate_avg(x, 0.0) - target; };
        const double w_hi = grow_upper(g, std::max(2.0 * w_lo, 1.0));
        const double w_rate = solve_monotone(g, w_lo, w_hi, kBisectTol);
        w = std::max(w, w_rate);
    }
    if (w <= 0) return 0.0;
    return pl.hybrid_power_avg(w, 0.0);
}

double min_power_cia(const Scenario& s, RatePair demand) {
    check_demand(demand);
    const SampledPathloss pl = sample_uniform_pathloss(s);
    return pl.floor_avg(demand.r_di + demand.r_ds);
}

std::vector<MinPowerRow> min_power_table(const Scenario& s,
                                         const std::vector<RatePair>& demands) {
    std::vector<MinPowerRow> rows;
    rows.reserve(demands.size());
    for (const RatePair& d : demands) {
        MinPowerRow row;
        row.demand = d;
        row.fpa_mw = min_power_fpa(s, d);
        row.wfa_mw = min_power_wfa(s, d);
        row.cia_mw = min_power_cia(s, d);
        row.haa_mw = min_power_haa(s, d).profile.avg_power;
        row.best = Strategy::HAA;
        double best = row.haa_mw;
        if (row.fpa_mw < best) { best = row.fpa_mw; row.best = Strategy::FPA; }
        if (row.wfa_mw < best) { best = row.wfa_mw; row.best = Strategy::WFA; }
        if (row.cia_mw < best) { best = row.cia_mw; row.best = Strategy::CIA; }
        rows.push_back(row);
    }
    return rows;
}

FixedStepResult min_power_haa_fixed_step(const Scenario& s, RatePair demand,
                                          int max_iters) {
    check_demand(demand);
    if (max_iters < 1) throw invalid_input("max_iters must be positive");
    const SampledPathloss pl = sample_uniform_pathloss(s);
    const double window_bps = 0.001 * 1e6; // |achieved - target| < 0.001 Mbps

    FixedStepResult res;
    // Start with the water level at the mean path loss; the walk is
    // insensitive to the start beyond iteration count.
    double w = pl.mean_dalpha * std::exp2(demand.r_ds / pl.b) / pl.kappa;
    for (int iter = 1; iter <= max_iters; ++iter) {
        const double r_di_w = pl.hybrid_rate_avg(w, demand.r_ds) - demand.r_ds;
        res.iterations = iter;
        if (std::fabs(r_di_w - demand.r_di) < window_bps) {
            res.converged = true;
            break;
        }
        if (r_di_w > demand.r_di)
            w /= 1.1;
        else
            w *= 1.07;
    }
    res.water_level = w;
    res.avg_power_mw = pl.hybrid_power_avg(w, demand.r_ds);
    return res;
}

} // namespace hsrlink
