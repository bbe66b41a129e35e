#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sabban/curve.hpp"
#include "sabban/frame.hpp"

// The gamma-t, t-d and gamma-t-d combinations of the Sabban frame, their
// closed-form invariants, and the machinery that reconciles the closed
// forms with a definition-only numerical pipeline.
//
// Two closed-form variants exist side by side:
//   *_printed  - the expressions exactly as they circulate in print,
//                evaluated verbatim so their gaps can be measured;
//   *_derived  - the same coefficients re-derived by the product rule and
//                the frame ODEs, collected in the {gamma, t, d} basis.
// Definitional computations (cross products, reparameterized curvature)
// are the arbiter between them.
namespace sabban {

enum class SmarandacheKind { GT, TD, GTD };

inline constexpr SmarandacheKind kAllKinds[] = {
    SmarandacheKind::GT, SmarandacheKind::TD, SmarandacheKind::GTD};

// Unit combination weights over (gamma, t, d).
struct FrameWeights {
    double gamma{0.0};
    double t{0.0};
    double d{0.0};
};

FrameWeights frame_weights(SmarandacheKind kind);

std::string_view kind_name(SmarandacheKind kind);             // "gt" | "td" | "gtd"
std::optional<SmarandacheKind> parse_kind(std::string_view s);

// beta = weighted combination of the frame vectors; unit norm follows from
// orthonormality of the frame.
UnitVec3 smarandache_point(SmarandacheKind kind, const SabbanFrame& frame);

// The combined curve s -> smarandache_point(kind, frame(s)) on c's domain.
// Not unit speed in general; reparameterize via the curves module. When c
// carries an analytic second derivative the result carries the exact
// product-rule first derivative.
CurveSource generate(SmarandacheKind kind, const CurveSource& c);

// Closed-form speed ds*/ds of the combined curve as a function of the
// source geodesic curvature. Always positive.
double speed_ratio(SmarandacheKind kind, double kappa_g);

// Closed-form unit tangent of the combined curve in the source frame.
UnitVec3 tangent_beta(SmarandacheKind kind, const SabbanFrame& frame,
                      double kappa_g);

// d_beta = beta x t_beta, computed definitionally. Unit norm by
// construction.
UnitVec3 d_beta(SmarandacheKind kind, const SabbanFrame& frame, double kappa_g);

// The printed d_beta expansion evaluated verbatim. Not unit norm for the
// GT and TD kinds; kept only for gap measurement.
Vec3 d_beta_printed(SmarandacheKind kind, const SabbanFrame& frame,
                    double kappa_g);

// Re-derived d_beta closed form (coefficients collected from the cross
// product); agrees with d_beta() to rounding.
UnitVec3 d_beta_derived(SmarandacheKind kind, const SabbanFrame& frame,
                        double kappa_g);

// Coefficients of t_beta' in the {gamma, t, d} basis: t_beta' scaled by
// the kind's normalizer Q^(3/2), evaluated at (kappa_g, kappa_g').
struct LambdaTriple {
    double lambda1{0.0};
    double lambda2{0.0};
    double lambda3{0.0};
};

// The printed coefficient lists, verbatim.
LambdaTriple lambda_triple_printed(SmarandacheKind kind, double kappa_g,
                                   double kappa_g_prime);

// Product-rule re-derivation of the same coefficients.
LambdaTriple lambda_triple_derived(SmarandacheKind kind, double kappa_g,
                                   double kappa_g_prime);

// The kind's normalizer Q (squared speed scale): GT 2+k^2, TD 1+2k^2,
// GTD 2(1-k+k^2).
double lambda_normalizer(SmarandacheKind kind, double kappa_g);

// The printed closed form of the combined curve's geodesic curvature,
// evaluated verbatim (printed lambdas, printed d_beta coefficients,
// printed normalizing power).
double kappa_beta_printed(SmarandacheKind kind, double kappa_g,
                          double kappa_g_prime);

// Re-derived closed form: <t_beta'(s*), d_beta> with derived lambdas and
// the definitional d_beta coefficients.
double kappa_beta_derived(SmarandacheKind kind, double kappa_g,
                          double kappa_g_prime);

// Everything the closed forms say about the combined curve at one frame.
struct DerivedFrameSet {
    UnitVec3 beta;
    UnitVec3 t_beta;
    UnitVec3 d_beta;
    double speed_ratio{0.0};
    double kappa_beta{0.0};
};

DerivedFrameSet derived_frame_set(SmarandacheKind kind, const SabbanFrame& frame,
                                  double kappa_g, double kappa_g_prime);

struct DefinitionalOptions {
    int table_samples = 2000;   // reparameterization resolution
    double fd_scale = 1e-4;     // finite-difference step / domain length
};

// The definition-only route to the combined curve's geodesic curvature:
// build beta, reparameterize it by arc length, and evaluate the frame
// curvature of the result. No closed forms anywhere on this path.
class DefinitionalPipeline {
public:
    DefinitionalPipeline(SmarandacheKind kind, const CurveSource& source,
                         DefinitionalOptions options = {});

    // Image parameter s*(s) through the arc-length table.
    double s_star(double s) const { return table_.evaluate(s); }

    // kappa_g of the reparameterized combined curve at s*(s).
    double kappa_beta(double s) const;

    const CurveSource& generated() const { return beta_; }
    const CurveSource& reparameterized() const { return beta_hat_; }
    const ArcLengthTable& table() const { return table_; }

private:
    CurveSource beta_;
    ArcLengthTable table_;
    CurveSource beta_hat_;
};

// One-shot wrapper around DefinitionalPipeline.
double kappa_beta_definitional(SmarandacheKind kind, const CurveSource& c,
                               double s, const DefinitionalOptions& options = {});

// One row of the printed-vs-definitional comparison.
struct ErratumSample {
    double s{0.0};
    double kappa_g{0.0};
    double kappa_g_prime{0.0};
    Vec3 d_beta_printed;
    Vec3 d_beta_definitional;
    double d_beta_gap{0.0};
    double d_beta_printed_norm_defect{0.0};
    double kappa_beta_printed{0.0};
    double kappa_beta_definitional{0.0};
    double kappa_beta_gap{0.0};
};

struct FormulaVerdict {
    std::string formula;
    double max_gap{0.0};
    double tolerance{0.0};
    bool consistent{false};
};

// Printed-form adjudication over a sample grid. Verdicts are CONSISTENT
// iff the max gap stays within kConsistencyTol.
struct ErratumReport {
    static constexpr double kConsistencyTol = 1e-5;

    SmarandacheKind kind{SmarandacheKind::GT};
    std::vector<ErratumSample> samples;
    FormulaVerdict d_beta_verdict;
    FormulaVerdict kappa_beta_verdict;
};

ErratumReport erratum_report(SmarandacheKind kind, const CurveSource& c,
                             std::span<const double> sample_params,
                             const DefinitionalOptions& options = {});

// 64 (or n) uniform interior samples, excluding stencil-wide margins at the
// domain ends.
std::vector<double> erratum_sample_grid(const CurveSource& c, int n = 64);

}  // namespace sabban
