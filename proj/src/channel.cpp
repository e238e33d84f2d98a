#include "hsrlink/channel.hpp"

#include <cmath>
#include <string>

#include "hsrlink/errors.hpp"
#include "hsrlink/numerics.hpp"

namespace hsrlink {

TimeGrid make_time_grid(double t_start, double t_end, int panels) {
    if (!(t_start < t_end)) throw invalid_input("time grid: requires t_start < t_end");
    if (panels < 2 || panels % 2 != 0)
        throw invalid_input("time grid: panels must be even and >= 2");
    TimeGrid g{t_start, t_end, {}};
    g.samples.resize(panels + 1);
    const double h = (t_end - t_start) / panels;
    for (int i = 0; i <= panels; ++i)
        g.samples[i] = (i == panels) ? t_end : t_start + h * i;
    return g;
}

TimeGrid make_time_grid(const Scenario& s) {
    const double t = s.window();
    return make_time_grid(-t, t, s.panels);
}

double distance(const Scenario& s, double t) {
    const double w = s.window();
    if (std::fabs(t) > w * (1.0 + 1e-12))
        throw invalid_input("distance: t=" + std::to_string(t) +
                            " outside cell window [-" + std::to_string(w) + ", " +
                            std::to_string(w) + "]");
    const double x = s.v0 * t;
    return std::sqrt(s.d0 * s.d0 + s.h0 * s.h0 + x * x);
}

double inst_rate(const Scenario& s, double p_mw, double d_m) {
    if (p_mw < 0) throw invalid_input("inst_rate: negative power");
    if (!(d_m > 0)) throw invalid_input("inst_rate: non-positive distance");
    return s.b * std::log2(1.0 + s.kappa * p_mw / std::pow(d_m, s.alpha));
}

double power_for_rate(const Scenario& s, double r_bps, double d_m) {
    if (r_bps < 0) throw invalid_input("power_for_rate: negative rate");
    if (!(d_m > 0)) throw invalid_input("power_for_rate: non-positive distance");
    return std::pow(d_m, s.alpha) * std::expm1(r_bps / s.b * std::log(2.0)) / s.kappa;
}

double mean_pathloss(const Scenario& s) {
    const double w = s.window();
    const double sq = s.d0 * s.d0 + s.h0 * s.h0;
    const double half = s.alpha / 2.0;
    const double total = integrate(
        [&](double t) {
            const double x = s.v0 * t;
            return std::pow(sq + x * x, half);
        },
        -w, w, Quadrature{s.panels});
    return total / (2.0 * w);
}

} // namespace hsrlink
