#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hsrlink/errors.hpp"

namespace hsrlink {

// Composite Simpson rule over an even number of uniform panels.
struct Quadrature {
    int panels;
};

// Simpson weights {1,4,2,...,2,4,1} * h/3 for panels+1 uniform samples
// spanning an interval of length `span`. Dividing the weighted sum by `span`
// yields the time average.
inline std::vector<double> simpson_weights(int panels, double span) {
    if (panels < 2 || panels % 2 != 0)
        throw invalid_input("simpson_weights: panels must be even and >= 2");
    const double h3 = span / panels / 3.0;
    std::vector<double> w(panels + 1, h3);
    for (int i = 1; i < panels; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h3;
    return w;
}

// Weighted sum of samples against precomputed weights.
inline double weighted_sum(const std::vector<double>& w, const std::vector<double>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f[i];
    return acc;
}

template <class F>
double integrate(F&& f, double a, double b, Quadrature q) {
    if (!(a < b)) throw invalid_input("integrate: requires a < b");
    if (q.panels < 2 || q.panels % 2 != 0)
        throw invalid_input("integrate: panels must be even and >= 2");
    const double h = (b - a) / q.panels;
    double acc = 0.0;
    for (int i = 0; i <= q.panels; ++i) {
        const double x = (i == q.panels) ? b : a + h * i;
        const double fx = f(x);
        if (!std::isfinite(fx))
            throw solver_failure("integrate: non-finite integrand at x=" + std::to_string(x));
        const double w = (i == 0 || i == q.panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += w * fx;
    }
    return acc * h / 3.0;
}

// Bisection root finding for a strictly monotone g with a sign change on
// [lo, hi]. tol is relative to the bracket scale; the loop is capped at 200
// halvings, which already shrinks any bracket below 1e-15 relative.
template <class G>
double solve_monotone(G&& g, double lo, double hi, double tol) {
    if (!(lo < hi)) throw invalid_input("solve_monotone: requires lo < hi");
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0) == (ghi < 0))
        throw solver_failure("solve_monotone: no sign change on bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
    for (int iter = 0; iter < 200 && (hi - lo) > tol * scale; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace hsrlink
