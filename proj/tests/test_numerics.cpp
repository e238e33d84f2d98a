#include <doctest.h>

#include <cmath>
#include <vector>

#include "hsrlink/errors.hpp"
#include "hsrlink/numerics.hpp"

using namespace hsrlink;

TEST_CASE("simpson weights sum to the span") {
    const auto w = simpson_weights(8, 2.5);
    double sum = 0.0;
    for (double x : w) sum += x;
    CHECK(sum == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(w.size() == 9);
}

TEST_CASE("simpson weights reject odd or tiny panel counts") {
    CHECK_THROWS_AS(simpson_weights(3, 1.0), invalid_input);
    CHECK_THROWS_AS(simpson_weights(0, 1.0), invalid_input);
}

TEST_CASE("integrate is exact for cubics") {
    // Simpson integrates polynomials up to degree 3 without error.
    const auto f = [](double x) { return 2.0 * x * x * x - x * x + 3.0 * x - 5.0; };
    const double got = integrate(f, -1.0, 3.0, Quadrature{4});
    const double want = [](double x) {
        return 0.5 * x * x * x * x - x * x * x / 3.0 + 1.5 * x * x - 5.0 * x;
    }(3.0) - [](double x) {
        return 0.5 * x * x * x * x - x * x * x / 3.0 + 1.5 * x * x - 5.0 * x;
    }(-1.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("integrate converges on smooth transcendental integrands") {
    // Composite Simpson error bound for sin on [0,pi] with 256 panels is
    // pi^5 / (180 * 256^4) ~ 4e-10.
    const double got = integrate([](double x) { return std::sin(x); }, 0.0,
                                 std::acos(-1.0), Quadrature{256});
    CHECK(got == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("integrate is linear") {
    const auto f = [](double x) { return std::exp(-x * x); };
    const auto g = [](double x) { return std::cos(3.0 * x); };
    const Quadrature q{64};
    const double lhs = integrate(
        [&](double x) { return 2.5 * f(x) - 0.75 * g(x); }, 0.0, 1.5, q);
    const double rhs = 2.5 * integrate(f, 0.0, 1.5, q) -
                       0.75 * integrate(g, 0.0, 1.5, q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("integrate rejects non-finite integrands") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0,
                              Quadrature{4}),
                    solver_failure);
}

TEST_CASE("solve_monotone finds roots of increasing and decreasing maps") {
    const double r1 = solve_monotone(
        [](double x) { return x * x * x - 2.0; }, 0.0, 2.0, 1e-13);
    CHECK(r1 == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));

    const double r2 = solve_monotone(
        [](double x) { return 5.0 - std::exp(x); }, 0.0, 3.0, 1e-13);
    CHECK(r2 == doctest::Approx(std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("solve_monotone accepts a root on the bracket edge") {
    const double r = solve_monotone([](double x) { return x - 1.0; }, 1.0, 2.0,
                                    1e-13);
    CHECK(r == 1.0);
}

TEST_CASE("solve_monotone rejects brackets without a sign change") {
    CHECK_THROWS_AS(solve_monotone([](double x) { return x + 10.0; }, 0.0, 1.0,
                                   1e-13),
                    solver_failure);
}

TEST_CASE("solve_monotone terminates within its iteration cap") {
    // tol is relative to the bracket scale, so a +-1e12 bracket at 1e-15
    // guarantees a final width of 1e-3; termination must not need anywhere
    // near 200 halvings to get there.
    int calls = 0;
    const double r = solve_monotone(
        [&calls](double x) {
            ++calls;
            return x - 1.0;
        },
        -1e12, 1e12, 1e-15);
    CHECK(std::fabs(r - 1.0) <= 1e-3);
    CHECK(calls < 210);
}

TEST_CASE("doubling panels leaves a smooth integral unchanged at tolerance") {
    const auto f = [](double x) { return std::log1p(x * x); };
    const double a = integrate(f, 0.0, 5.0, Quadrature{4096});
    const double b = integrate(f, 0.0, 5.0, Quadrature{8192});
    CHECK(std::fabs(a - b) <= 1e-12 * std::fabs(a));
}
