#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sabban/linalg.hpp"
#include "sabban/numerics.hpp"

namespace sabban {

struct Interval {
    double lo{0.0};
    double hi{1.0};

    double length() const { return hi - lo; }
    bool contains(double s) const { return s >= lo && s <= hi; }
};

// Parametric curve on the unit sphere: an evaluator plus a derivative
// strategy. When no analytic derivative map is supplied, derivatives fall
// back to guarded finite differences of the positions.
class CurveSource {
public:
    using Map = std::function<Vec3(double)>;

    CurveSource(Interval domain, Map position)
        : CurveSource(domain, std::move(position), nullptr, nullptr) {}
    CurveSource(Interval domain, Map position, Map derivative)
        : CurveSource(domain, std::move(position), std::move(derivative), nullptr) {}
    CurveSource(Interval domain, Map position, Map derivative, Map second_derivative);

    const Interval& domain() const { return domain_; }

    Vec3 position(double s) const { return pos_(s); }

    // Analytic derivative when supplied, else a guarded 5-point stencil.
    Vec3 derivative(double s) const;

    // Preference order: analytic second derivative; finite difference of
    // the analytic first derivative; second difference of positions.
    Vec3 second_derivative(double s) const;

    bool has_analytic_derivative() const { return static_cast<bool>(d1_); }
    bool has_analytic_second_derivative() const { return static_cast<bool>(d2_); }

    // Finite-difference step (default 1e-4 x domain length).
    double fd_step() const { return fd_step_; }

    CurveSource with_fd_step(double h) const;
    CurveSource with_domain(Interval domain) const;
    // Drops the analytic maps; exercises the finite-difference strategy.
    CurveSource positions_only() const;

private:
    Interval domain_;
    Map pos_, d1_, d2_;
    double fd_step_;
};

// s -> (cos s, sin s, 0) on [0, 2pi]; geodesic curvature 0.
CurveSource fixture_great_circle();

// s -> (r cos(s/r), r sin(s/r), sqrt(1-r^2)) on [0, 2pi r]; unit speed by
// construction, constant geodesic curvature sqrt(1-r^2)/r.
// InvalidRadius unless 0 < r < 1.
CurveSource fixture_latitude_circle(double r);

// s -> (cos(s) tanh(s), sin(s) tanh(s), sech(s)) on [-5, 5]; unit speed,
// non-constant geodesic curvature.
CurveSource fixture_paper_example();

// Discretization of a curve: strictly increasing parameters and on-sphere
// points.
struct SampledCurve {
    std::vector<double> s;
    std::vector<UnitVec3> points;
};

// n uniform samples over the domain (n >= 2).
SampledCurve sample_curve(const CurveSource& c, int n);

struct UnitSpeedCheck {
    bool unit_speed{false};
    double max_defect{0.0};
};

// True iff | ||c'(s_i)|| - 1 | <= tol at all of `samples` uniform points;
// also reports the worst defect.
UnitSpeedCheck is_unit_speed(const CurveSource& c, int samples, double tol);

// Max | ||c(s_i)|| - 1 | over uniform samples (sphere-residency check).
double sphere_residency_defect(const CurveSource& c, int samples);

// Cumulative arc length s*(s) tabulated at uniform knots, with the speeds
// at the knots retained as exact interpolation slopes.
class ArcLengthTable {
public:
    ArcLengthTable(std::vector<double> s, std::vector<double> s_star,
                   std::vector<double> speed);

    const std::vector<double>& s() const { return s_; }
    const std::vector<double>& s_star() const { return s_star_; }
    const std::vector<double>& speed() const { return speed_; }

    double total_length() const { return s_star_.back(); }

    // s*(s) through the monotone interpolant.
    double evaluate(double s) const { return (*interp_)(s); }

    const numerics::MonotoneCubic& interpolant() const { return *interp_; }

private:
    std::vector<double> s_, s_star_, speed_;
    std::shared_ptr<const numerics::MonotoneCubic> interp_;
};

// s*_i = integral of ||c'|| from s_0 to s_i by composite Simpson.
// NonMonotoneArcLength when vanishing speed is detected.
ArcLengthTable arclength_table(const CurveSource& c, int n,
                               numerics::QuadratureSpec quadrature = {});

// Inverse of the table's monotone interpolant; OutOfRange outside
// [s*_0, s*_last].
double invert_monotone(const ArcLengthTable& table, double target);

// Curve beta_hat(s*) = c(s(s*)) on [0, L] with unit speed. When c carries an
// analytic derivative the reparameterized tangent is the chain-rule exact
// c'(s)/||c'(s)||.
CurveSource reparameterize_unit_speed(const CurveSource& c, int n = 2000);

}  // namespace sabban
