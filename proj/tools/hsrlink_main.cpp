#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hsrlink/allocators.hpp"
#include "hsrlink/channel.hpp"
#include "hsrlink/errors.hpp"
#include "hsrlink/manifest.hpp"
#include "hsrlink/nonuniform.hpp"
#include "hsrlink/region.hpp"
#include "hsrlink/scenario.hpp"

namespace {

using namespace hsrlink;

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

// Explicit path beats the HSRLINK_SCENARIO override, which beats the
// built-in defaults.
Scenario resolve_scenario(const std::string& path, std::string& used) {
    if (!path.empty()) {
        used = path;
        return load_scenario(path);
    }
    if (const char* env = std::getenv("HSRLINK_SCENARIO"); env && *env) {
        used = env;
        return load_scenario(env);
    }
    used = "<built-in default>";
    return default_scenario();
}

RatePair demand_mbps(double rdi_mbps, double rds_mbps) {
    if (rdi_mbps < 0.0 || rds_mbps < 0.0) {
        throw invalid_input("demands must be non-negative");
    }
    return RatePair{rdi_mbps * 1e6, rds_mbps * 1e6};
}

std::vector<RatePair> parse_demand_list(const std::vector<std::string>& items) {
    std::vector<RatePair> out;
    for (const std::string& item : items) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw invalid_input("demand must be rdi:rds in Mbps, got: " + item);
        }
        try {
            out.push_back(demand_mbps(std::stod(item.substr(0, colon)),
                                      std::stod(item.substr(colon + 1))));
        } catch (const std::logic_error&) {
            throw invalid_input("demand must be numeric rdi:rds, got: " + item);
        }
    }
    return out;
}

void emit(const std::string& out, const std::string& header,
          const std::vector<std::vector<std::string>>& rows,
          const RunManifest& manifest) {
    write_csv(out, header, rows);
    write_manifest(manifest, out);
}

struct RegionOpts {
    std::string scenario_path;
    double p0_dbm = 30.0;
    int points = 50;
    std::vector<std::string> strategies{"fpa", "cia", "wfa", "haa"};
    std::string out = "region.csv";
};

void run_region(const RegionOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    const double p0 = dbm_to_mw(o.p0_dbm);

    std::vector<std::vector<std::string>> rows;
    for (const std::string& name : o.strategies) {
        const Strategy st = strategy_from_name(name);
        const RateRegionBoundary boundary =
            st == Strategy::HAA ? sweep_region(s, p0, o.points)
                                : baseline_region(s, p0, st, o.points);
        for (const auto& pt : boundary.points) {
            rows.push_back({strategy_name(st), format_number(pt.r_ds),
                            format_number(pt.r_di)});
        }
    }
    emit(o.out, "strategy,r_ds_bps,r_di_bps", rows,
         make_manifest("region", s,
                       {{"scenario", used},
                        {"p0_dbm", format_number(o.p0_dbm)},
                        {"points", std::to_string(o.points)},
                        {"out", o.out}}));
    std::cout << "wrote " << o.out << "\n";
}

struct TableOpts {
    std::string scenario_path;
    std::vector<std::string> demands;
    std::string out = "min_power_table.csv";
};

void run_table(const TableOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    std::vector<RatePair> demands = parse_demand_list(o.demands);
    if (demands.empty()) {
        demands = {demand_mbps(20, 0), demand_mbps(15, 5), demand_mbps(10, 10),
                   demand_mbps(5, 15), demand_mbps(0, 20)};
    }
    std::vector<std::vector<std::string>> rows;
    for (const MinPowerRow& row : min_power_table(s, demands)) {
        rows.push_back({format_number(row.demand.r_di / 1e6),
                        format_number(row.demand.r_ds / 1e6),
                        format_number(row.fpa_mw), format_number(row.wfa_mw),
                        format_number(row.cia_mw), format_number(row.haa_mw),
                        strategy_name(row.best)});
    }
    emit(o.out, "r_di_mbps,r_ds_mbps,fpa_mw,wfa_mw,cia_mw,haa_mw,best", rows,
         make_manifest("table", s,
                       {{"scenario", used},
                        {"rows", std::to_string(rows.size())},
                        {"out", o.out}}));
    std::cout << "wrote " << o.out << "\n";
}

struct MinPowerOpts {
    std::string scenario_path;
    double rdi_mbps = 0.0;
    double rds_mbps = 0.0;
    std::string strategy = "haa";
    std::string profile_out;
    bool fixed_step = false;
};

void run_minpower(const MinPowerOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    const RatePair demand = demand_mbps(o.rdi_mbps, o.rds_mbps);
    const Strategy st = strategy_from_name(o.strategy);

    double p_mw = 0.0;
    PowerProfile profile;
    switch (st) {
        case Strategy::HAA: {
            const AllocationResult res = min_power_haa(s, demand);
            p_mw = res.profile.avg_power;
            profile = res.profile;
            break;
        }
        case Strategy::CIA: {
            p_mw = min_power_cia(s, demand);
            profile = cia_profile(s, demand.r_di + demand.r_ds).profile;
            break;
        }
        case Strategy::WFA: {
            p_mw = min_power_wfa(s, demand);
            profile = wfa_profile(s, p_mw).profile;
            break;
        }
        case Strategy::FPA: {
            p_mw = min_power_fpa(s, demand);
            profile.grid = make_time_grid(s);
            profile.p.assign(profile.grid.samples.size(), p_mw);
            profile.avg_power = p_mw;
            break;
        }
    }

    std::cout << strategy_name(st) << " minimum average power: "
              << format_number(p_mw) << " mW (" << format_number(mw_to_dbm(p_mw))
              << " dBm)\n";

    if (o.fixed_step) {
        if (st != Strategy::HAA) {
            throw invalid_input("--fixed-step applies to the haa strategy only");
        }
        const FixedStepResult fs = min_power_haa_fixed_step(s, demand);
        std::cout << "fixed-step solver: " << format_number(fs.avg_power_mw)
                  << " mW after " << fs.iterations << " iterations ("
                  << (fs.converged ? "converged" : "did not converge") << ")\n";
    }

    if (!o.profile_out.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < profile.grid.samples.size(); ++i) {
            rows.push_back({format_number(profile.grid.samples[i]),
                            format_number(profile.p[i])});
        }
        emit(o.profile_out, "t_s,p_mw", rows,
             make_manifest("minpower", s,
                           {{"scenario", used},
                            {"rdi_mbps", format_number(o.rdi_mbps)},
                            {"rds_mbps", format_number(o.rds_mbps)},
                            {"strategy", o.strategy},
                            {"out", o.profile_out}}));
        std::cout << "wrote " << o.profile_out << "\n";
    }
}

struct TwoChannelOpts {
    std::string scenario_path;
    double p0_dbm = 40.0;
    int points = 50;
    std::string out = "two_channel.csv";
};

void run_two_channel(const TwoChannelOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    const double p0 = dbm_to_mw(o.p0_dbm);

    const RateRegionBoundary sim = simultaneous_region_two_channels(s, p0, o.points);
    const RateRegionBoundary sep = separate_schedule_region(s, p0);

    std::vector<std::vector<std::string>> rows;
    for (const auto& pt : sim.points) {
        rows.push_back({"simultaneous", format_number(pt.r_ds),
                        format_number(pt.r_di)});
    }
    for (const auto& pt : sep.points) {
        rows.push_back({"separate", format_number(pt.r_ds),
                        format_number(pt.r_di)});
    }
    emit(o.out, "schedule,r_ds_bps,r_di_bps", rows,
         make_manifest("two-channel", s,
                       {{"scenario", used},
                        {"p0_dbm", format_number(o.p0_dbm)},
                        {"points", std::to_string(o.points)},
                        {"out", o.out}}));

    const double sim0 = sim.points.front().r_di;
    const double sep0 = sep.points.front().r_di;
    std::cout << "throughput gain at r_ds=0: "
              << format_number((sim0 / sep0 - 1.0) * 100.0) << "%\n";
    std::cout << "wrote " << o.out << "\n";
}

struct NonuniformOpts {
    std::string scenario_path;
    double p0_dbm = 40.0;
    int points = 50;
    std::vector<double> ratios{0.0, 0.02, 0.05};
    std::string out = "nonuniform.csv";
};

void run_nonuniform(const NonuniformOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    const double p0 = dbm_to_mw(o.p0_dbm);

    std::vector<std::vector<std::string>> rows;
    for (double ratio : o.ratios) {
        const auto boundary = worst_case_region(s, ratio * s.v0, p0, o.points);
        for (const auto& pt : boundary) {
            rows.push_back({format_number(ratio), format_number(pt.r_ds),
                            format_number(pt.r_di)});
        }
    }
    emit(o.out, "ratio,r_ds_bps,r_di_bps", rows,
         make_manifest("nonuniform", s,
                       {{"scenario", used},
                        {"p0_dbm", format_number(o.p0_dbm)},
                        {"points", std::to_string(o.points)},
                        {"out", o.out}}));
    std::cout << "wrote " << o.out << "\n";
}

struct MarginOpts {
    std::string scenario_path;
    double rdi_mbps = 30.0;
    double rds_mbps = 10.0;
    std::vector<double> ratios{0.0, 0.02, 0.05, 0.1, 0.2};
    std::string out = "margin.csv";
    int samples = 0;
    std::uint64_t seed = 1;
};

void run_margin(const MarginOpts& o) {
    std::string used;
    const Scenario s = resolve_scenario(o.scenario_path, used);
    validate_scenario(s);
    const RatePair demand = demand_mbps(o.rdi_mbps, o.rds_mbps);

    std::vector<std::vector<std::string>> rows;
    for (const MarginPoint& mp : power_margin_curve(s, demand, o.ratios)) {
        rows.push_back({format_number(mp.ratio), format_number(mp.normalized_power),
                        format_number(mp.db)});
    }
    emit(o.out, "ratio,normalized_power,db", rows,
         make_manifest("margin", s,
                       {{"scenario", used},
                        {"rdi_mbps", format_number(o.rdi_mbps)},
                        {"rds_mbps", format_number(o.rds_mbps)},
                        {"samples", std::to_string(o.samples)},
                        {"seed", std::to_string(o.seed)},
                        {"out", o.out}}));

    if (o.samples > 0) {
        for (double ratio : o.ratios) {
            if (ratio <= 0.0) {
                continue;
            }
            const double dv = ratio * s.v0;
            const double p_worst =
                min_power_profile(s, worst_case_velocity(s, dv), demand);
            double worst_sampled = 0.0;
            for (int k = 0; k < o.samples; ++k) {
                const VelocityProfile vp = sample_admissible_velocity(
                    s, dv, o.seed + static_cast<std::uint64_t>(k));
                worst_sampled =
                    std::max(worst_sampled, min_power_profile(s, vp, demand));
            }
            const double rel = worst_sampled / p_worst;
            std::cout << "ratio " << format_number(ratio) << ": max over "
                      << o.samples << " sampled profiles = " << format_number(rel)
                      << " of worst case ("
                      << (rel <= 1.0 + 1e-6 ? "dominated" : "EXCEEDS WORST CASE")
                      << ")\n";
        }
    }
    std::cout << "wrote " << o.out << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transmit-power schedules and rate regions for a "
                 "high-speed-rail wireless link"};
    app.require_subcommand(1);

    RegionOpts region_opts;
    CLI::App* region = app.add_subcommand(
        "region", "Rate-region boundaries per allocation strategy");
    region->add_option("scenario", region_opts.scenario_path, "Scenario JSON path");
    region->add_option("--p0-dbm", region_opts.p0_dbm, "Average power budget, dBm");
    region->add_option("--points", region_opts.points, "Boundary grid points");
    region->add_option("--strategies", region_opts.strategies,
                       "Comma-separated strategies (fpa,cia,wfa,haa)")
        ->delimiter(',');
    region->add_option("--out", region_opts.out, "Output CSV path");
    region->callback([&]() { run_region(region_opts); });

    TableOpts table_opts;
    CLI::App* table = app.add_subcommand(
        "table", "Minimum average power per demand and strategy");
    table->add_option("scenario", table_opts.scenario_path, "Scenario JSON path");
    table->add_option("--demands", table_opts.demands,
                      "Comma-separated rdi:rds demands in Mbps")
        ->delimiter(',');
    table->add_option("--out", table_opts.out, "Output CSV path");
    table->callback([&]() { run_table(table_opts); });

    MinPowerOpts minpower_opts;
    CLI::App* minpower = app.add_subcommand(
        "minpower", "Minimum average power for one demand pair");
    minpower->add_option("scenario", minpower_opts.scenario_path,
                         "Scenario JSON path");
    minpower->add_option("--rdi-mbps", minpower_opts.rdi_mbps,
                         "Delay-insensitive demand, Mbps")
        ->required();
    minpower->add_option("--rds-mbps", minpower_opts.rds_mbps,
                         "Delay-sensitive demand, Mbps")
        ->required();
    minpower->add_option("--strategy", minpower_opts.strategy,
                         "One of fpa, cia, wfa, haa");
    minpower->add_option("--profile-out", minpower_opts.profile_out,
                         "Optional CSV of the time-sampled power profile");
    minpower->add_flag("--fixed-step", minpower_opts.fixed_step,
                       "Also run the fixed-factor dual-update solver");
    minpower->callback([&]() { run_minpower(minpower_opts); });

    TwoChannelOpts two_opts;
    CLI::App* two = app.add_subcommand(
        "two-channel", "Simultaneous vs separate schedules on two sub-channels");
    two->add_option("scenario", two_opts.scenario_path, "Scenario JSON path");
    two->add_option("--p0-dbm", two_opts.p0_dbm, "Total power budget, dBm");
    two->add_option("--points", two_opts.points, "Boundary grid points");
    two->add_option("--out", two_opts.out, "Output CSV path");
    two->callback([&]() { run_two_channel(two_opts); });

    NonuniformOpts nonuniform_opts;
    CLI::App* nonuniform = app.add_subcommand(
        "nonuniform", "Worst-case rate regions under bounded speed variation");
    nonuniform->add_option("scenario", nonuniform_opts.scenario_path,
                           "Scenario JSON path");
    nonuniform->add_option("--p0-dbm", nonuniform_opts.p0_dbm,
                           "Average power budget, dBm");
    nonuniform->add_option("--points", nonuniform_opts.points,
                           "Boundary grid points");
    nonuniform->add_option("--ratios", nonuniform_opts.ratios,
                           "Comma-separated velocity shift ratios")
        ->delimiter(',');
    nonuniform->add_option("--out", nonuniform_opts.out, "Output CSV path");
    nonuniform->callback([&]() { run_nonuniform(nonuniform_opts); });

    MarginOpts margin_opts;
    CLI::App* margin = app.add_subcommand(
        "margin", "Normalized worst-case minimum power vs velocity shift ratio");
    margin->add_option("scenario", margin_opts.scenario_path, "Scenario JSON path");
    margin->add_option("--rdi-mbps", margin_opts.rdi_mbps,
                       "Delay-insensitive demand, Mbps");
    margin->add_option("--rds-mbps", margin_opts.rds_mbps,
                       "Delay-sensitive demand, Mbps");
    margin->add_option("--ratios", margin_opts.ratios,
                       "Comma-separated velocity shift ratios")
        ->delimiter(',');
    margin->add_option("--out", margin_opts.out, "Output CSV path");
    margin->add_option("--samples", margin_opts.samples,
                       "Sampled admissible profiles per ratio for the "
                       "dominance report");
    margin->add_option("--seed", margin_opts.seed, "Monte-Carlo seed");
    margin->callback([&]() { run_margin(margin_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const infeasible_demand& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const solver_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
