#pragma once

#include <vector>

#include "hsrlink/scenario.hpp"

namespace hsrlink {

// Uniform sampling of a time interval with panels+1 points; the default
// window is one full cell crossing [-L/v0, L/v0].
struct TimeGrid {
    double t_start;
    double t_end;
    std::vector<double> samples;

    double span() const { return t_end - t_start; }
};

TimeGrid make_time_grid(const Scenario& s);
TimeGrid make_time_grid(double t_start, double t_end, int panels);

// sqrt(d0^2 + h0^2 + (v0 t)^2); t must lie inside the cell window.
double distance(const Scenario& s, double t);

// B log2(1 + kappa p / d^alpha), bit/s. p in mW, d in m.
double inst_rate(const Scenario& s, double p_mw, double d_m);

// d^alpha (2^{r/B} - 1) / kappa: exact inverse of inst_rate in p.
double power_for_rate(const Scenario& s, double r_bps, double d_m);

// Time average of d(t)^alpha over one cell crossing. Equals
// d0^2 + h0^2 + L^2/3 for alpha = 2.
double mean_pathloss(const Scenario& s);

} // namespace hsrlink
