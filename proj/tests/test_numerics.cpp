#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sabban/curve.hpp"
#include "sabban/numerics.hpp"

using namespace sabban;
using namespace sabban::numerics;

TEST_CASE("3-point central difference of sin at 0") {
    auto f = [](double s) { return std::sin(s); };
    const double d = central_difference(f, 0.0, {StencilOrder::Central3, 1e-3});
    CHECK(std::abs(d - 1.0) <= 1e-6);
}

TEST_CASE("central differences are exact for quadratics") {
    auto f = [](double s) { return s * s; };
    for (const double h : {1e-1, 1e-2, 1e-3}) {
        CHECK(std::abs(central_difference(f, 3.0, {StencilOrder::Central3, h}) - 6.0) <=
              1e-9);
        CHECK(std::abs(central_difference(f, 3.0, {StencilOrder::Central5, h}) - 6.0) <=
              1e-9);
    }
}

TEST_CASE("5-point stencil recovers the fixture derivative at s=0") {
    const CurveSource c = fixture_paper_example();
    auto pos = [&c](double s) { return c.position(s); };
    const Vec3 d = central_difference(pos, 0.0, {StencilOrder::Central5, 1e-3});
    CHECK(norm(d - Vec3(1, 0, 0)) <= 1e-8);
}

TEST_CASE("5-point stencil error shrinks at least 8x when h halves") {
    auto f = [](double s) { return std::exp(s); };
    auto error_at = [&f](double h) {
        return std::abs(central_difference(f, 0.0, {StencilOrder::Central5, h}) - 1.0);
    };
    const double coarse = error_at(1e-2);
    const double fine = error_at(5e-3);
    CHECK(coarse >= 8.0 * fine);
}

TEST_CASE("guarded differences fall back to one-sided stencils at edges") {
    auto f = [](double s) { return std::sin(s); };
    const DifferenceScheme scheme{StencilOrder::Central5, 1e-3};
    // At the left edge of [0, 1] only forward points exist.
    const double d0 = guarded_difference(f, 0.0, 0.0, 1.0, scheme);
    CHECK(std::abs(d0 - 1.0) <= 1e-9);
    const double d1 = guarded_difference(f, 1.0, 0.0, 1.0, scheme);
    CHECK(std::abs(d1 - std::cos(1.0)) <= 1e-9);
    // Domain shorter than any stencil.
    CHECK_THROWS_AS(guarded_difference(f, 0.0, 0.0, 1e-5, scheme), DomainEdge);
}

TEST_CASE("guarded second difference matches the analytic second derivative") {
    auto f = [](double s) { return std::sin(s); };
    const double interior = guarded_second_difference(f, 0.5, 0.0, 1.0, 1e-4);
    CHECK(std::abs(interior + std::sin(0.5)) <= 1e-6);
    const double edge = guarded_second_difference(f, 0.0, 0.0, 1.0, 1e-4);
    CHECK(std::abs(edge - 0.0) <= 1e-5);
}

TEST_CASE("Simpson integral of sin over [0, pi]") {
    const double v = integrate([](double s) { return std::sin(s); }, 0.0,
                               std::numbers::pi, {256});
    CHECK(std::abs(v - 2.0) <= 1e-8);
}

TEST_CASE("Simpson integral of a constant") {
    const double v = integrate([](double) { return 1.0; }, 0.0,
                               2.0 * std::numbers::pi, {64});
    CHECK(std::abs(v - 2.0 * std::numbers::pi) <= 1e-14);
}

TEST_CASE("Simpson is exact for cubics on any interval") {
    auto f = [](double s) { return 2.0 * s * s * s - 3.0 * s * s + s - 7.0; };
    auto exact = [](double s) {
        return 0.5 * s * s * s * s - s * s * s + 0.5 * s * s - 7.0 * s;
    };
    for (const auto& [a, b] : {std::pair{-1.0, 2.0}, {0.0, 10.0}, {-5.5, -1.25}}) {
        const double v = integrate(f, a, b, {2});
        CHECK(std::abs(v - (exact(b) - exact(a))) <= 1e-12);
    }
}

TEST_CASE("great-circle speed integrates to the circumference") {
    const CurveSource c = fixture_great_circle();
    const double len = integrate([&c](double s) { return norm(c.derivative(s)); },
                                 c.domain().lo, c.domain().hi, {2048});
    CHECK(std::abs(len - 2.0 * std::numbers::pi) <= 1e-8);
}

TEST_CASE("invert_monotone on an affine table") {
    std::vector<double> x{0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> y{0.0, 1.0, 2.0, 3.0, 4.0};  // s* = 2 s
    std::vector<double> m{2.0, 2.0, 2.0, 2.0, 2.0};
    const MonotoneCubic table(x, y, m);
    CHECK(std::abs(table.invert(3.0) - 1.5) <= 1e-12);
    CHECK(table.invert(0.0) == 0.0);   // boundary identity
    CHECK(table.invert(4.0) == 2.0);
    CHECK_THROWS_AS(table.invert(4.5), OutOfRange);
    CHECK_THROWS_AS(table.invert(-0.5), OutOfRange);
}

TEST_CASE("great-circle table inverts the identity") {
    const CurveSource c = fixture_great_circle();
    const ArcLengthTable table = arclength_table(c, 2000);
    CHECK(std::abs(invert_monotone(table, std::numbers::pi) - std::numbers::pi) <=
          1e-8);
}

TEST_CASE("inversion composed with evaluation is the identity") {
    const CurveSource c = fixture_paper_example();
    const ArcLengthTable table = arclength_table(c, 2000);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.0, table.total_length());
    for (int i = 0; i < 100; ++i) {
        const double target = dist(rng);
        const double s = invert_monotone(table, target);
        CHECK(std::abs(table.evaluate(s) - target) <= 1e-8);
    }
}

TEST_CASE("monotone interpolant stays monotone on uneven data") {
    // Sharp slope changes that would make an unlimited cubic overshoot.
    std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> y{0.0, 0.01, 0.02, 2.0, 4.0};
    std::vector<double> m{0.01, 0.01, 0.5, 2.0, 2.0};
    const MonotoneCubic table(x, y, m);
    double prev = table(0.0);
    for (int i = 1; i <= 400; ++i) {
        const double cur = table(i * 0.01);
        CHECK(cur >= prev - 1e-14);
        prev = cur;
    }
}
