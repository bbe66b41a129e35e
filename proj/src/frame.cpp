#include "sabban/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sabban {

namespace {

constexpr double kTangentDefectTol = 1e-4;
constexpr double kOrthoAcceptTol = 1e-8;   // below: use as-is
constexpr double kOrthoRepairTol = 1e-6;   // below: Gram-Schmidt; above: error

// Derivative of the unit tangent along the curve, by the best information
// available.
Vec3 tangent_derivative(const CurveSource& c, double s) {
    if (c.has_analytic_second_derivative()) return c.second_derivative(s);
    if (c.has_analytic_derivative()) {
        auto d1 = [&c](double u) { return c.derivative(u); };
        return numerics::guarded_difference(
            d1, s, c.domain().lo, c.domain().hi,
            {numerics::StencilOrder::Central5, c.fd_step()});
    }
    return c.second_derivative(s);  // second difference of positions
}

}  // namespace

double SabbanFrame::orthogonality_defect() const {
    return std::max({std::abs(dot(gamma, tangent)), std::abs(dot(gamma, normal)),
                     std::abs(dot(tangent, normal))});
}

double SabbanFrame::handedness() const { return dot(cross(gamma, tangent), normal.vec()); }

SabbanFrame sabban_frame(const CurveSource& c, double s) {
    const UnitVec3 gamma = normalize(c.position(s));

    const Vec3 velocity = c.derivative(s);
    const double speed = norm(velocity);
    if (std::abs(speed - 1.0) > kTangentDefectTol) {
        throw NotUnitSpeed("sabban_frame: tangent norm defect " +
                           std::to_string(std::abs(speed - 1.0)) + " at s = " +
                           std::to_string(s));
    }
    UnitVec3 tangent = normalize(velocity);

    const double ortho = std::abs(dot(gamma, tangent));
    if (ortho > kOrthoRepairTol) {
        throw NotUnitSpeed("sabban_frame: tangent not orthogonal to position (defect " +
                           std::to_string(ortho) + ")");
    }
    if (ortho > kOrthoAcceptTol) {
        tangent = normalize(tangent.vec() - gamma.vec() * dot(tangent, gamma));
    }

    const UnitVec3 normal = normalize(cross(gamma, tangent));
    return {gamma, tangent, normal};
}

double geodesic_curvature(const CurveSource& c, double s) {
    const SabbanFrame frame = sabban_frame(c, s);
    const Vec3 t_prime = tangent_derivative(c, s);
    return dot(t_prime, frame.normal.vec());
}

double kappa_prime(const CurveSource& c, double s) {
    const double h = c.fd_step();
    const Interval dom = c.domain();
    if (s - 2.0 * h < dom.lo || s + 2.0 * h > dom.hi) {
        throw DomainEdge("kappa_prime: stencil at s = " + std::to_string(s) +
                         " leaves the domain");
    }
    auto kappa = [&c](double u) { return geodesic_curvature(c, u); };
    return numerics::central_difference(kappa, s,
                                        {numerics::StencilOrder::Central5, h});
}

double kappa_prime_guarded(const CurveSource& c, double s) {
    auto kappa = [&c](double u) { return geodesic_curvature(c, u); };
    return numerics::guarded_difference(
        kappa, s, c.domain().lo, c.domain().hi,
        {numerics::StencilOrder::Central5, c.fd_step()});
}

double verify_sabban_odes(const CurveSource& c, int samples) {
    if (samples < 2) throw ConfigError("verify_sabban_odes: need >= 2 samples");
    const Interval dom = c.domain();
    const double h = c.fd_step();
    // Keep every stencil central: sample strictly inside the domain.
    const double lo = dom.lo + 2.0 * h;
    const double hi = dom.hi - 2.0 * h;
    const double step = (hi - lo) / (samples - 1);

    auto gamma_field = [&c](double u) { return c.position(u); };
    auto tangent_field = [&c](double u) { return sabban_frame(c, u).tangent.vec(); };
    auto normal_field = [&c](double u) { return sabban_frame(c, u).normal.vec(); };

    const numerics::DifferenceScheme scheme{numerics::StencilOrder::Central5, h};
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = lo + i * step;
        const SabbanFrame f = sabban_frame(c, s);
        const double kappa = geodesic_curvature(c, s);

        const Vec3 r1 = numerics::central_difference(gamma_field, s, scheme) -
                        f.tangent.vec();
        const Vec3 r2 = numerics::central_difference(tangent_field, s, scheme) +
                        f.gamma.vec() - f.normal.vec() * kappa;
        const Vec3 r3 = numerics::central_difference(normal_field, s, scheme) +
                        f.tangent.vec() * kappa;
        worst = std::max({worst, norm(r1), norm(r2), norm(r3)});
    }
    return worst;
}

std::vector<FrameSample> sample_frames(const CurveSource& c, int n) {
    if (n < 2) throw ConfigError("sample_frames: need at least 2 samples");
    const Interval dom = c.domain();
    const double step = dom.length() / (n - 1);
    std::vector<FrameSample> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double s = (i == n - 1) ? dom.hi : dom.lo + i * step;
        out.push_back(FrameSample{s, sabban_frame(c, s), geodesic_curvature(c, s),
                                  kappa_prime_guarded(c, s), std::nullopt});
    }
    return out;
}

}  // namespace sabban
