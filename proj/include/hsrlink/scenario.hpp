#pragma once

#include <string>

namespace hsrlink {

// Cell geometry, radio constants, and numerics settings. Single source of
// truth for every formula in the library; immutable after validation.
//
// All powers are milliwatts internally. SNR at transmit power p and distance
// d is kappa * p / d^alpha, so kappa carries the gain-to-noise ratio in
// m^alpha per mW.
struct Scenario {
    double d0;        // base-station-to-railway distance, m
    double h0;        // antenna height difference, m
    double l;         // half cell-coverage length along the track, m
    double v0;        // mean train speed, m/s
    double alpha;     // path-loss exponent
    double b;         // bandwidth, Hz
    double kappa;     // gain-to-noise ratio, m^alpha/mW
    int panels;       // quadrature panel count, positive even
    double rate_tol;  // relative tolerance on rate targets
    double power_tol; // relative tolerance on power budgets

    // Cell-crossing half-duration L/v0; the time window is [-window(), window()].
    double window() const { return l / v0; }
};

// A demanded or achieved rate pair, bit/s. r_di is constrained in time
// average only; r_ds must hold at every instant.
struct RatePair {
    double r_di;
    double r_ds;
};

// Throws invalid_input naming the offending field if any invariant fails.
void validate_scenario(const Scenario& s);

// Reference parameter set: d0=2, h0=10, L=500, v0=100, alpha=2, B=20 MHz,
// kappa=10, panels=4096, rate_tol=1e-6, power_tol=1e-9.
Scenario default_scenario();

// JSON object with exactly the lower-case field names of Scenario.
// Unknown keys are rejected; values round-trip bit-exactly.
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

} // namespace hsrlink
