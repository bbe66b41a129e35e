#include "sabban/smarandache.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace sabban {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt3 = 0.5773502691896257645;

// Unnormalized t_beta coefficients (a, b, c) in the {gamma, t, d} basis;
// their squared norm is lambda_normalizer(kind, k).
Vec3 tangent_coeffs(SmarandacheKind kind, double k) {
    switch (kind) {
        case SmarandacheKind::GT:
            return {-1.0, 1.0, k};
        case SmarandacheKind::TD:
            return {-1.0, -k, k};
        case SmarandacheKind::GTD:
            return {-1.0, 1.0 - k, k};
    }
    throw Error("unknown kind");
}

// Unnormalized definitional d_beta coefficients; squared norm is
// w * lambda_normalizer with w = 2 (GT, TD) or 3 (GTD).
Vec3 d_beta_coeffs(SmarandacheKind kind, double k) {
    switch (kind) {
        case SmarandacheKind::GT:
            return {k, -k, 2.0};
        case SmarandacheKind::TD:
            return {2.0 * k, -1.0, 1.0};
        case SmarandacheKind::GTD:
            return {2.0 * k - 1.0, -1.0 - k, 2.0 - k};
    }
    throw Error("unknown kind");
}

Vec3 in_frame(const SabbanFrame& f, const Vec3& coeffs) {
    return f.gamma.vec() * coeffs.x + f.tangent.vec() * coeffs.y +
           f.normal.vec() * coeffs.z;
}

}  // namespace

FrameWeights frame_weights(SmarandacheKind kind) {
    switch (kind) {
        case SmarandacheKind::GT:
            return {kInvSqrt2, kInvSqrt2, 0.0};
        case SmarandacheKind::TD:
            return {0.0, kInvSqrt2, kInvSqrt2};
        case SmarandacheKind::GTD:
            // The three-term combination needs weight 1/sqrt(3) for beta to
            // stay on the sphere.
            return {kInvSqrt3, kInvSqrt3, kInvSqrt3};
    }
    throw Error("unknown kind");
}

std::string_view kind_name(SmarandacheKind kind) {
    switch (kind) {
        case SmarandacheKind::GT:
            return "gt";
        case SmarandacheKind::TD:
            return "td";
        case SmarandacheKind::GTD:
            return "gtd";
    }
    throw Error("unknown kind");
}

std::optional<SmarandacheKind> parse_kind(std::string_view s) {
    if (s == "gt") return SmarandacheKind::GT;
    if (s == "td") return SmarandacheKind::TD;
    if (s == "gtd") return SmarandacheKind::GTD;
    return std::nullopt;
}

UnitVec3 smarandache_point(SmarandacheKind kind, const SabbanFrame& frame) {
    const FrameWeights w = frame_weights(kind);
    return UnitVec3(in_frame(frame, {w.gamma, w.t, w.d}));
}

CurveSource generate(SmarandacheKind kind, const CurveSource& c) {
    const FrameWeights w = frame_weights(kind);
    auto source = std::make_shared<const CurveSource>(c);

    CurveSource::Map pos = [kind, source](double s) {
        return smarandache_point(kind, sabban_frame(*source, s)).vec();
    };
    if (!c.has_analytic_second_derivative()) {
        return CurveSource(c.domain(), std::move(pos));
    }
    // beta' = w_g gamma' + w_t gamma'' + w_d (gamma x gamma''), from
    // t = gamma' and d' = gamma x gamma''. Pure product rule; no closed
    // forms involved.
    CurveSource::Map d1 = [w, source](double s) {
        const Vec3 g1 = source->derivative(s);
        const Vec3 g2 = source->second_derivative(s);
        const Vec3 g = source->position(s);
        return g1 * w.gamma + g2 * w.t + cross(g, g2) * w.d;
    };
    return CurveSource(c.domain(), std::move(pos), std::move(d1));
}

double speed_ratio(SmarandacheKind kind, double kappa_g) {
    const double k2 = kappa_g * kappa_g;
    switch (kind) {
        case SmarandacheKind::GT:
            return std::sqrt((2.0 + k2) / 2.0);
        case SmarandacheKind::TD:
            return std::sqrt((1.0 + 2.0 * k2) / 2.0);
        case SmarandacheKind::GTD:
            // 1 - k + k^2 >= 3/4, so the ratio is always positive.
            return std::sqrt(2.0 * (1.0 - kappa_g + k2) / 3.0);
    }
    throw Error("unknown kind");
}

double lambda_normalizer(SmarandacheKind kind, double kappa_g) {
    const double k2 = kappa_g * kappa_g;
    switch (kind) {
        case SmarandacheKind::GT:
            return 2.0 + k2;
        case SmarandacheKind::TD:
            return 1.0 + 2.0 * k2;
        case SmarandacheKind::GTD:
            return 2.0 * (1.0 - kappa_g + k2);
    }
    throw Error("unknown kind");
}

UnitVec3 tangent_beta(SmarandacheKind kind, const SabbanFrame& frame,
                      double kappa_g) {
    const Vec3 coeffs = tangent_coeffs(kind, kappa_g);
    return UnitVec3(in_frame(frame, coeffs) /
                    std::sqrt(lambda_normalizer(kind, kappa_g)));
}

UnitVec3 d_beta(SmarandacheKind kind, const SabbanFrame& frame, double kappa_g) {
    const Vec3 b = smarandache_point(kind, frame).vec();
    const Vec3 t = tangent_beta(kind, frame, kappa_g).vec();
    return normalize(cross(b, t));
}

Vec3 d_beta_printed(SmarandacheKind kind, const SabbanFrame& frame,
                    double kappa_g) {
    const double k = kappa_g;
    switch (kind) {
        case SmarandacheKind::GT:
            return in_frame(frame, Vec3(k, -1.0 - k, 2.0)) /
                   std::sqrt(4.0 + 2.0 * k * k);
        case SmarandacheKind::TD:
            return in_frame(frame, Vec3(k, -1.0, 1.0 + k)) /
                   std::sqrt(2.0 + 4.0 * k * k);
        case SmarandacheKind::GTD:
            return in_frame(frame, Vec3(2.0 * k - 1.0, -1.0 - k, 2.0 - k)) /
                   (std::sqrt(6.0) * std::sqrt(1.0 - k + k * k));
    }
    throw Error("unknown kind");
}

UnitVec3 d_beta_derived(SmarandacheKind kind, const SabbanFrame& frame,
                        double kappa_g) {
    const Vec3 coeffs = d_beta_coeffs(kind, kappa_g);
    return UnitVec3(in_frame(frame, coeffs) / norm(coeffs));
}

LambdaTriple lambda_triple_printed(SmarandacheKind kind, double k, double kp) {
    const double k2 = k * k, k3 = k2 * k, k4 = k2 * k2;
    switch (kind) {
        case SmarandacheKind::GT:
            return {k * kp - k2 - 2.0,
                    -k * kp - 2.0 - 2.0 * k2 - k4,
                    2.0 * k + 2.0 * kp + k3};
        case SmarandacheKind::TD:
            return {2.0 * k * kp + k + 2.0 * k3,
                    -1.0 - kp - 3.0 * k2 - 2.0 * k4,
                    -k2 + kp - 2.0 * k4};
        case SmarandacheKind::GTD:
            return {-kp + 2.0 * k * kp - 2.0 + 4.0 * k - 4.0 * k2 + 2.0 * k3,
                    -kp - k * kp - 2.0 - 4.0 * k2 + 2.0 * k + 2.0 * k3 - 2.0 * k4,
                    -k * kp + 2.0 * k - 4.0 * k2 + 2.0 * kp + 4.0 * k3 - 2.0 * k4};
    }
    throw Error("unknown kind");
}

LambdaTriple lambda_triple_derived(SmarandacheKind kind, double k, double kp) {
    // Differentiate t_beta = u / sqrt(Q) with u the unnormalized tangent
    // coefficients, substitute gamma' = t, t' = -gamma + k d, d' = -k t,
    // and collect: lambda = Q u' - (Q'/2) u. Only the GT lambda2 ends up
    // different from the printed list (3k^2 where print has 2k^2).
    const double k2 = k * k, k3 = k2 * k, k4 = k2 * k2;
    switch (kind) {
        case SmarandacheKind::GT:
            return {k * kp - k2 - 2.0,
                    -k * kp - 2.0 - 3.0 * k2 - k4,
                    2.0 * k + 2.0 * kp + k3};
        case SmarandacheKind::TD:
            return {2.0 * k * kp + k + 2.0 * k3,
                    -1.0 - kp - 3.0 * k2 - 2.0 * k4,
                    -k2 + kp - 2.0 * k4};
        case SmarandacheKind::GTD:
            return {-kp + 2.0 * k * kp - 2.0 + 4.0 * k - 4.0 * k2 + 2.0 * k3,
                    -kp - k * kp - 2.0 - 4.0 * k2 + 2.0 * k + 2.0 * k3 - 2.0 * k4,
                    -k * kp + 2.0 * k - 4.0 * k2 + 2.0 * kp + 4.0 * k3 - 2.0 * k4};
    }
    throw Error("unknown kind");
}

double kappa_beta_printed(SmarandacheKind kind, double k, double kp) {
    const LambdaTriple l = lambda_triple_printed(kind, k, kp);
    switch (kind) {
        case SmarandacheKind::GT:
            return (l.lambda1 * k + l.lambda2 * (-1.0 - k) + 2.0 * l.lambda3) /
                   std::pow(2.0 + k * k, 1.5);
        case SmarandacheKind::TD:
            return (l.lambda1 * k - l.lambda2 + l.lambda3 * (1.0 + k)) /
                   std::pow(1.0 + 2.0 * k * k, 1.5);
        case SmarandacheKind::GTD:
            return (l.lambda1 * (2.0 * k - 1.0) + l.lambda2 * (-1.0 - k) +
                    l.lambda3 * (2.0 - k)) /
                   (4.0 * std::sqrt(2.0) * std::pow(1.0 - k + k * k, 1.5));
    }
    throw Error("unknown kind");
}

double kappa_beta_derived(SmarandacheKind kind, double k, double kp) {
    // <t_beta'(s*), d_beta> = dot(lambda, c) / (Q^(3/2) rho ||c||) with c
    // the definitional d_beta coefficients; rho ||c|| collapses to Q for
    // every kind, leaving Q^(5/2).
    const LambdaTriple l = lambda_triple_derived(kind, k, kp);
    const Vec3 c = d_beta_coeffs(kind, k);
    const double q = lambda_normalizer(kind, k);
    return (l.lambda1 * c.x + l.lambda2 * c.y + l.lambda3 * c.z) /
           std::pow(q, 2.5);
}

DerivedFrameSet derived_frame_set(SmarandacheKind kind, const SabbanFrame& frame,
                                  double kappa_g, double kappa_g_prime) {
    return {smarandache_point(kind, frame),
            tangent_beta(kind, frame, kappa_g),
            d_beta_derived(kind, frame, kappa_g),
            speed_ratio(kind, kappa_g),
            kappa_beta_derived(kind, kappa_g, kappa_g_prime)};
}

DefinitionalPipeline::DefinitionalPipeline(SmarandacheKind kind,
                                           const CurveSource& source,
                                           DefinitionalOptions options)
    : beta_(generate(kind, source)),
      table_(arclength_table(beta_, options.table_samples)),
      beta_hat_(reparameterize_unit_speed(beta_, options.table_samples)
                    .with_fd_step(options.fd_scale *
                                  table_.total_length())) {}

double DefinitionalPipeline::kappa_beta(double s) const {
    return geodesic_curvature(beta_hat_, s_star(s));
}

double kappa_beta_definitional(SmarandacheKind kind, const CurveSource& c,
                               double s, const DefinitionalOptions& options) {
    return DefinitionalPipeline(kind, c, options).kappa_beta(s);
}

std::vector<double> erratum_sample_grid(const CurveSource& c, int n) {
    if (n < 1) throw ConfigError("erratum_sample_grid: need at least 1 sample");
    const Interval dom = c.domain();
    const double margin = 2.0 * c.fd_step();
    const double lo = dom.lo + margin;
    const double hi = dom.hi - margin;
    if (!(hi > lo)) {
        throw ConfigError("erratum_sample_grid: stencil margins exceed the domain");
    }
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(0.5 * (lo + hi));
        return grid;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid.push_back(lo + i * step);
    return grid;
}

ErratumReport erratum_report(SmarandacheKind kind, const CurveSource& c,
                             std::span<const double> sample_params,
                             const DefinitionalOptions& options) {
    ErratumReport report;
    report.kind = kind;
    report.samples.reserve(sample_params.size());

    const DefinitionalPipeline pipeline(kind, c, options);

    double max_d_beta_gap = 0.0;
    double max_kappa_gap = 0.0;
    for (const double s : sample_params) {
        const SabbanFrame frame = sabban_frame(c, s);
        const double k = geodesic_curvature(c, s);
        const double kp = kappa_prime_guarded(c, s);

        ErratumSample sample;
        sample.s = s;
        sample.kappa_g = k;
        sample.kappa_g_prime = kp;
        sample.d_beta_printed = d_beta_printed(kind, frame, k);
        sample.d_beta_definitional = d_beta(kind, frame, k).vec();
        sample.d_beta_gap = norm(sample.d_beta_printed - sample.d_beta_definitional);
        sample.d_beta_printed_norm_defect =
            std::abs(norm(sample.d_beta_printed) - 1.0);
        sample.kappa_beta_printed = kappa_beta_printed(kind, k, kp);
        sample.kappa_beta_definitional = pipeline.kappa_beta(s);
        sample.kappa_beta_gap =
            std::abs(sample.kappa_beta_printed - sample.kappa_beta_definitional);

        max_d_beta_gap = std::max(max_d_beta_gap, sample.d_beta_gap);
        max_kappa_gap = std::max(max_kappa_gap, sample.kappa_beta_gap);
        report.samples.push_back(std::move(sample));
    }

    const double tol = ErratumReport::kConsistencyTol;
    report.d_beta_verdict = {"d_beta_printed", max_d_beta_gap, tol,
                             max_d_beta_gap <= tol};
    report.kappa_beta_verdict = {"kappa_g_beta_printed", max_kappa_gap, tol,
                                 max_kappa_gap <= tol};
    return report;
}

}  // namespace sabban
