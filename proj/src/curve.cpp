#include "sabban/curve.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace sabban {

namespace {

constexpr double kDefaultFdScale = 1e-4;

double sech(double s) { return 1.0 / std::cosh(s); }

}  // namespace

CurveSource::CurveSource(Interval domain, Map position, Map derivative,
                         Map second_derivative)
    : domain_(domain),
      pos_(std::move(position)),
      d1_(std::move(derivative)),
      d2_(std::move(second_derivative)),
      fd_step_(kDefaultFdScale * domain.length()) {
    if (!(domain_.hi > domain_.lo)) {
        throw ConfigError("CurveSource: domain must have positive length");
    }
    if (!pos_) throw ConfigError("CurveSource: missing position evaluator");
}

Vec3 CurveSource::derivative(double s) const {
    if (d1_) return d1_(s);
    return numerics::guarded_difference(pos_, s, domain_.lo, domain_.hi,
                                        {numerics::StencilOrder::Central5, fd_step_});
}

Vec3 CurveSource::second_derivative(double s) const {
    if (d2_) return d2_(s);
    if (d1_) {
        return numerics::guarded_difference(d1_, s, domain_.lo, domain_.hi,
                                            {numerics::StencilOrder::Central5, fd_step_});
    }
    return numerics::guarded_second_difference(pos_, s, domain_.lo, domain_.hi,
                                               fd_step_);
}

CurveSource CurveSource::with_fd_step(double h) const {
    if (!(h > 0.0)) throw ConfigError("fd step must be positive");
    CurveSource c = *this;
    c.fd_step_ = h;
    return c;
}

CurveSource CurveSource::with_domain(Interval domain) const {
    CurveSource c(domain, pos_, d1_, d2_);
    return c;
}

CurveSource CurveSource::positions_only() const {
    CurveSource c(domain_, pos_);
    c.fd_step_ = fd_step_;
    return c;
}

CurveSource fixture_great_circle() {
    return CurveSource(
        {0.0, 2.0 * std::numbers::pi},
        [](double s) { return Vec3(std::cos(s), std::sin(s), 0.0); },
        [](double s) { return Vec3(-std::sin(s), std::cos(s), 0.0); },
        [](double s) { return Vec3(-std::cos(s), -std::sin(s), 0.0); });
}

CurveSource fixture_latitude_circle(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw InvalidRadius("latitude circle radius must lie in (0, 1), got " +
                            std::to_string(r));
    }
    const double h = std::sqrt(1.0 - r * r);
    return CurveSource(
        {0.0, 2.0 * std::numbers::pi * r},
        [r, h](double s) {
            return Vec3(r * std::cos(s / r), r * std::sin(s / r), h);
        },
        [r](double s) { return Vec3(-std::sin(s / r), std::cos(s / r), 0.0); },
        [r](double s) {
            return Vec3(-std::cos(s / r) / r, -std::sin(s / r) / r, 0.0);
        });
}

CurveSource fixture_paper_example() {
    auto pos = [](double s) {
        return Vec3(std::cos(s) * std::tanh(s), std::sin(s) * std::tanh(s), sech(s));
    };
    auto d1 = [](double s) {
        const double c = std::cos(s), sn = std::sin(s);
        const double th = std::tanh(s), se = sech(s);
        return Vec3(-sn * th + c * se * se, c * th + sn * se * se, -se * th);
    };
    auto d2 = [](double s) {
        const double c = std::cos(s), sn = std::sin(s);
        const double th = std::tanh(s), se = sech(s);
        const double se2 = se * se;
        return Vec3(-c * th - 2.0 * sn * se2 - 2.0 * c * se2 * th,
                    -sn * th + 2.0 * c * se2 - 2.0 * sn * se2 * th,
                    se * th * th - se * se2);
    };
    return CurveSource({-5.0, 5.0}, pos, d1, d2);
}

SampledCurve sample_curve(const CurveSource& c, int n) {
    if (n < 2) throw ConfigError("sample_curve: need at least 2 samples");
    SampledCurve out;
    out.s.reserve(n);
    out.points.reserve(n);
    const Interval dom = c.domain();
    const double step = dom.length() / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double s = (i == n - 1) ? dom.hi : dom.lo + i * step;
        out.s.push_back(s);
        out.points.push_back(normalize(c.position(s)));
    }
    return out;
}

UnitSpeedCheck is_unit_speed(const CurveSource& c, int samples, double tol) {
    if (samples < 2) throw ConfigError("is_unit_speed: need at least 2 samples");
    const Interval dom = c.domain();
    const double step = dom.length() / (samples - 1);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = (i == samples - 1) ? dom.hi : dom.lo + i * step;
        const double speed = norm(c.derivative(s));
        if (!(speed > 1e-12)) {
            throw DegenerateVector("is_unit_speed: vanishing speed at s = " +
                                   std::to_string(s));
        }
        worst = std::max(worst, std::abs(speed - 1.0));
    }
    return {worst <= tol, worst};
}

double sphere_residency_defect(const CurveSource& c, int samples) {
    if (samples < 2) throw ConfigError("sphere_residency_defect: need >= 2 samples");
    const Interval dom = c.domain();
    const double step = dom.length() / (samples - 1);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = (i == samples - 1) ? dom.hi : dom.lo + i * step;
        worst = std::max(worst, std::abs(norm(c.position(s)) - 1.0));
    }
    return worst;
}

ArcLengthTable::ArcLengthTable(std::vector<double> s, std::vector<double> s_star,
                               std::vector<double> speed)
    : s_(std::move(s)), s_star_(std::move(s_star)), speed_(std::move(speed)) {
    if (s_.size() < 2 || s_star_.size() != s_.size() || speed_.size() != s_.size()) {
        throw Error("ArcLengthTable: inconsistent column lengths");
    }
    interp_ = std::make_shared<const numerics::MonotoneCubic>(s_, s_star_, speed_);
}

ArcLengthTable arclength_table(const CurveSource& c, int n,
                               numerics::QuadratureSpec quadrature) {
    if (n < 2) throw ConfigError("arclength_table: need at least 2 knots");
    const Interval dom = c.domain();
    const double step = dom.length() / (n - 1);

    auto speed_of = [&c](double s) { return norm(c.derivative(s)); };

    std::vector<double> s(n), s_star(n), speed(n);
    for (int i = 0; i < n; ++i) {
        s[i] = (i == n - 1) ? dom.hi : dom.lo + i * step;
        speed[i] = speed_of(s[i]);
        if (!(speed[i] > 1e-12)) {
            throw NonMonotoneArcLength("arclength_table: vanishing speed at s = " +
                                       std::to_string(s[i]));
        }
    }

    int panels_per_interval = quadrature.panels / (n - 1);
    if (panels_per_interval < 8) panels_per_interval = 8;
    if (panels_per_interval % 2 != 0) ++panels_per_interval;

    s_star[0] = 0.0;
    for (int i = 1; i < n; ++i) {
        const double inc = numerics::integrate(speed_of, s[i - 1], s[i],
                                               {panels_per_interval});
        if (!(inc > 0.0)) {
            throw NonMonotoneArcLength("arclength_table: non-increasing arc length at s = " +
                                       std::to_string(s[i]));
        }
        s_star[i] = s_star[i - 1] + inc;
    }
    return ArcLengthTable(std::move(s), std::move(s_star), std::move(speed));
}

double invert_monotone(const ArcLengthTable& table, double target) {
    return table.interpolant().invert(target);
}

CurveSource reparameterize_unit_speed(const CurveSource& c, int n) {
    auto table = std::make_shared<const ArcLengthTable>(arclength_table(c, n));
    auto source = std::make_shared<const CurveSource>(c);
    const double total = table->total_length();

    auto param_of = [table](double s_star) {
        return table->interpolant().invert(s_star);
    };

    CurveSource::Map pos = [source, param_of](double s_star) {
        return source->position(param_of(s_star));
    };
    if (!c.has_analytic_derivative()) {
        return CurveSource({0.0, total}, std::move(pos));
    }
    CurveSource::Map d1 = [source, param_of](double s_star) {
        const double s = param_of(s_star);
        const Vec3 v = source->derivative(s);
        return v / norm(v);
    };
    return CurveSource({0.0, total}, std::move(pos), std::move(d1));
}

}  // namespace sabban
