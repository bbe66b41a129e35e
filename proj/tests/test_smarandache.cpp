#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sabban/smarandache.hpp"
#include "sabban/verify.hpp"

using namespace sabban;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

bool approx_eq(const Vec3& a, const Vec3& b, double tol) {
    return norm(a - b) <= tol;
}

}  // namespace

#define CHECK_VEC(a, b, tol) CHECK(approx_eq((a), (b), (tol)))

TEST_CASE("combination weights have unit norm; the three-term kind uses 1/sqrt(3)") {
    for (const SmarandacheKind kind : kAllKinds) {
        const FrameWeights w = frame_weights(kind);
        const double n = std::sqrt(w.gamma * w.gamma + w.t * w.t + w.d * w.d);
        CHECK(n == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(frame_weights(SmarandacheKind::GTD).gamma ==
          doctest::Approx(kInvSqrt3).epsilon(1e-15));
}

TEST_CASE("combined points at s=0") {
    const SabbanFrame gc = sabban_frame(fixture_great_circle(), 0.0);
    CHECK_VEC(smarandache_point(SmarandacheKind::GT, gc).vec(),
              Vec3(kInvSqrt2, kInvSqrt2, 0), 1e-12);
    CHECK_VEC(smarandache_point(SmarandacheKind::GTD, gc).vec(),
              Vec3(kInvSqrt3, kInvSqrt3, kInvSqrt3), 1e-12);

    const SabbanFrame pe = sabban_frame(fixture_paper_example(), 0.0);
    CHECK_VEC(smarandache_point(SmarandacheKind::GT, pe).vec(),
              Vec3(kInvSqrt2, 0, kInvSqrt2), 1e-12);
}

TEST_CASE("generated curves of the great circle are the expected circles") {
    const CurveSource gc = fixture_great_circle();

    const CurveSource gt = generate(SmarandacheKind::GT, gc);
    for (const double s : {0.0, 1.0, 2.5}) {
        const Vec3 expected((std::cos(s) - std::sin(s)) * kInvSqrt2,
                            (std::sin(s) + std::cos(s)) * kInvSqrt2, 0.0);
        CHECK_VEC(gt.position(s), expected, 1e-12);
    }

    const CurveSource td = generate(SmarandacheKind::TD, gc);
    for (const double s : {0.0, 1.0, 2.5}) {
        const Vec3 p = td.position(s);
        CHECK(std::hypot(p.x, p.y) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
        CHECK(p.z == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    }

    const CurveSource gtd = generate(SmarandacheKind::GTD, gc);
    for (const double s : {0.0, 1.0, 2.5}) {
        const Vec3 p = gtd.position(s);
        CHECK(std::hypot(p.x, p.y) ==
              doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
        CHECK(p.z == doctest::Approx(kInvSqrt3).epsilon(1e-12));
    }
}

TEST_CASE("generated curves stay on the sphere") {
    for (const CurveSource& c : {fixture_great_circle(),
                                 fixture_latitude_circle(kInvSqrt2),
                                 fixture_paper_example()}) {
        for (const SmarandacheKind kind : kAllKinds) {
            const CurveSource beta = generate(kind, c);
            const Interval dom = beta.domain();
            for (int i = 0; i < 200; ++i) {
                const double s = dom.lo + dom.length() * i / 199.0;
                CHECK(std::abs(norm(beta.position(s)) - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("closed-form speed ratios") {
    CHECK(speed_ratio(SmarandacheKind::GT, 0.0) == doctest::Approx(1.0));
    CHECK(speed_ratio(SmarandacheKind::GT, 2.0) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(speed_ratio(SmarandacheKind::GTD, 1.0) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    // Positive for any curvature; the three-term discriminant never vanishes.
    for (double k = -10.0; k <= 10.0; k += 0.25) {
        for (const SmarandacheKind kind : kAllKinds) {
            CHECK(speed_ratio(kind, k) > 0.0);
        }
    }
}

TEST_CASE("closed-form tangents at s=0") {
    const SabbanFrame gc = sabban_frame(fixture_great_circle(), 0.0);
    CHECK_VEC(tangent_beta(SmarandacheKind::GT, gc, 0.0).vec(),
              Vec3(-kInvSqrt2, kInvSqrt2, 0), 1e-12);
    CHECK_VEC(tangent_beta(SmarandacheKind::TD, gc, 0.0).vec(), Vec3(-1, 0, 0),
              1e-12);

    const SabbanFrame pe = sabban_frame(fixture_paper_example(), 0.0);
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    CHECK_VEC(tangent_beta(SmarandacheKind::GT, pe, 2.0).vec(),
              Vec3(inv_sqrt6, 2 * inv_sqrt6, -inv_sqrt6), 1e-12);
}

TEST_CASE("definitional d_beta values") {
    const SabbanFrame gc = sabban_frame(fixture_great_circle(), 0.0);
    CHECK_VEC(d_beta(SmarandacheKind::GT, gc, 0.0).vec(), Vec3(0, 0, 1), 1e-12);
    CHECK_VEC(d_beta(SmarandacheKind::TD, gc, 0.0).vec(),
              Vec3(0, -kInvSqrt2, kInvSqrt2), 1e-12);

    const SabbanFrame pe = sabban_frame(fixture_paper_example(), 0.0);
    CHECK_VEC(d_beta(SmarandacheKind::GT, pe, 2.0).vec(),
              Vec3(-kInvSqrt3, kInvSqrt3, kInvSqrt3), 1e-12);
}

TEST_CASE("derived d_beta closed form matches the cross product everywhere") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> s_dist(-4.0, 4.0);
    const CurveSource c = fixture_paper_example();
    for (int i = 0; i < 200; ++i) {
        const double s = s_dist(rng);
        const SabbanFrame f = sabban_frame(c, s);
        const double k = geodesic_curvature(c, s);
        for (const SmarandacheKind kind : kAllKinds) {
            CHECK_VEC(d_beta_derived(kind, f, k).vec(), d_beta(kind, f, k).vec(),
                      1e-12);
        }
    }
}

TEST_CASE("lambda lists at kappa = kappa' = 0") {
    auto check_triple = [](const LambdaTriple& l, double a, double b, double c) {
        CHECK(l.lambda1 == doctest::Approx(a).epsilon(1e-15));
        CHECK(l.lambda2 == doctest::Approx(b).epsilon(1e-15));
        CHECK(l.lambda3 == doctest::Approx(c).epsilon(1e-15));
    };
    check_triple(lambda_triple_printed(SmarandacheKind::GT, 0, 0), -2, -2, 0);
    check_triple(lambda_triple_printed(SmarandacheKind::TD, 0, 0), 0, -1, 0);
    check_triple(lambda_triple_printed(SmarandacheKind::GTD, 0, 0), -2, -2, 0);
    check_triple(lambda_triple_derived(SmarandacheKind::GT, 0, 0), -2, -2, 0);
    check_triple(lambda_triple_derived(SmarandacheKind::TD, 0, 0), 0, -1, 0);
    check_triple(lambda_triple_derived(SmarandacheKind::GTD, 0, 0), -2, -2, 0);
}

TEST_CASE("printed and derived lambdas differ only in the gt middle term") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double k = dist(rng), kp = dist(rng);
        for (const SmarandacheKind kind :
             {SmarandacheKind::TD, SmarandacheKind::GTD}) {
            const LambdaTriple p = lambda_triple_printed(kind, k, kp);
            const LambdaTriple d = lambda_triple_derived(kind, k, kp);
            CHECK(p.lambda1 == d.lambda1);
            CHECK(p.lambda2 == d.lambda2);
            CHECK(p.lambda3 == d.lambda3);
        }
        const LambdaTriple p = lambda_triple_printed(SmarandacheKind::GT, k, kp);
        const LambdaTriple d = lambda_triple_derived(SmarandacheKind::GT, k, kp);
        CHECK(p.lambda1 == d.lambda1);
        CHECK(p.lambda3 == d.lambda3);
        // The printed middle coefficient carries 2k^2 where the product rule
        // yields 3k^2.
        CHECK(d.lambda2 - p.lambda2 == doctest::Approx(-k * k).epsilon(1e-12));
    }
}

TEST_CASE("printed closed-form curvatures at kappa = kappa' = 0") {
    CHECK(kappa_beta_printed(SmarandacheKind::GT, 0, 0) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(kappa_beta_printed(SmarandacheKind::TD, 0, 0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kappa_beta_printed(SmarandacheKind::GTD, 0, 0) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));
}

TEST_CASE("derived closed-form curvatures at pinned points") {
    CHECK(std::abs(kappa_beta_derived(SmarandacheKind::GT, 0, 0)) <= 1e-15);
    CHECK(kappa_beta_derived(SmarandacheKind::TD, 0, 0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kappa_beta_derived(SmarandacheKind::GTD, 0, 0) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));
    // At kappa = 1 (latitude circle r = 1/sqrt(2)) plane geometry gives
    // 1/sqrt(3) for both two-term kinds.
    CHECK(kappa_beta_derived(SmarandacheKind::GT, 1, 0) ==
          doctest::Approx(kInvSqrt3).epsilon(1e-14));
    CHECK(kappa_beta_derived(SmarandacheKind::TD, 1, 0) ==
          doctest::Approx(kInvSqrt3).epsilon(1e-14));
}

TEST_CASE("definitional curvature of great-circle combinations is constant") {
    const CurveSource gc = fixture_great_circle();
    const double expected[] = {0.0, 1.0, kInvSqrt2};
    int idx = 0;
    for (const SmarandacheKind kind : kAllKinds) {
        const DefinitionalPipeline pipeline(kind, gc);
        for (const double s : {0.5, 1.5, 3.0, 5.0}) {
            CHECK(std::abs(pipeline.kappa_beta(s) - expected[idx]) <= 1e-5);
        }
        ++idx;
    }
}

TEST_CASE("definitional curvature of latitude combinations matches plane geometry") {
    const CurveSource lat = fixture_latitude_circle(kInvSqrt2);
    const DefinitionalPipeline gt(SmarandacheKind::GT, lat);
    const DefinitionalPipeline td(SmarandacheKind::TD, lat);
    for (const double s : {0.7, 2.0, 3.5}) {
        CHECK(std::abs(gt.kappa_beta(s) - kInvSqrt3) <= 1e-5);
        CHECK(std::abs(td.kappa_beta(s) - kInvSqrt3) <= 1e-5);
    }
}

TEST_CASE("derived closed form matches the definitional pipeline on all fixtures") {
    for (const CurveSource& c : {fixture_great_circle(),
                                 fixture_latitude_circle(kInvSqrt2),
                                 fixture_paper_example().with_domain({-4.0, 4.0})}) {
        const std::vector<double> grid = erratum_sample_grid(c, 32);
        for (const SmarandacheKind kind : kAllKinds) {
            const DefinitionalPipeline pipeline(kind, c);
            for (const double s : grid) {
                const double k = geodesic_curvature(c, s);
                const double kp = kappa_prime_guarded(c, s);
                CHECK(std::abs(kappa_beta_derived(kind, k, kp) -
                               pipeline.kappa_beta(s)) <= 2e-5);
            }
        }
    }
}

TEST_CASE("definitional curvature is stable under refinement") {
    const CurveSource c = fixture_paper_example();
    const DefinitionalOptions coarse{2000, 1e-4};
    const DefinitionalOptions fine{4000, 5e-5};
    for (const SmarandacheKind kind : kAllKinds) {
        for (const double s : {-2.0, 0.0, 1.5}) {
            const double a = kappa_beta_definitional(kind, c, s, coarse);
            const double b = kappa_beta_definitional(kind, c, s, fine);
            CHECK(std::abs(a - b) <= 2e-5);
        }
    }
}

TEST_CASE("derived frame sets are orthonormal and right-handed") {
    for (const CurveSource& c : {fixture_great_circle(),
                                 fixture_paper_example().with_domain({-4.0, 4.0})}) {
        const std::vector<double> grid = erratum_sample_grid(c, 64);
        for (const SmarandacheKind kind : kAllKinds) {
            for (const double s : grid) {
                const SabbanFrame f = sabban_frame(c, s);
                const double k = geodesic_curvature(c, s);
                const double kp = kappa_prime_guarded(c, s);
                const DerivedFrameSet set = derived_frame_set(kind, f, k, kp);
                CHECK(std::abs(dot(set.beta, set.t_beta)) <= 1e-6);
                CHECK(std::abs(dot(set.beta, set.d_beta)) <= 1e-6);
                CHECK(std::abs(dot(set.t_beta, set.d_beta)) <= 1e-6);
                CHECK(dot(cross(set.beta, set.t_beta), set.d_beta.vec()) >=
                      1.0 - 1e-6);
            }
        }
    }
}

TEST_CASE("speed and tangent laws hold numerically") {
    for (const CurveSource& c : {fixture_great_circle(),
                                 fixture_paper_example().with_domain({-4.0, 4.0})}) {
        const std::vector<double> grid = erratum_sample_grid(c, 64);
        const numerics::DifferenceScheme scheme{numerics::StencilOrder::Central5,
                                                c.fd_step()};
        for (const SmarandacheKind kind : kAllKinds) {
            const CurveSource beta = generate(kind, c);
            auto pos = [&beta](double u) { return beta.position(u); };
            for (const double s : grid) {
                const double k = geodesic_curvature(c, s);
                const Vec3 vel = numerics::central_difference(pos, s, scheme);
                CHECK(std::abs(norm(vel) - speed_ratio(kind, k)) <= 1e-5);
                const SabbanFrame f = sabban_frame(c, s);
                CHECK_VEC(vel / norm(vel), tangent_beta(kind, f, k).vec(), 1e-5);
            }
        }
    }
}

TEST_CASE("erratum report adjudicates the printed forms on the great circle") {
    const CurveSource gc = fixture_great_circle();
    const std::vector<double> grid = erratum_sample_grid(gc, 16);

    const ErratumReport gt = erratum_report(SmarandacheKind::GT, gc, grid);
    CHECK_FALSE(gt.kappa_beta_verdict.consistent);
    CHECK(gt.kappa_beta_verdict.max_gap ==
          doctest::Approx(kInvSqrt2).epsilon(1e-4));
    CHECK_FALSE(gt.d_beta_verdict.consistent);
    // Printed coefficients (0,-1,2)/2 against the true d: gap 1/2, norm
    // defect sqrt(5)/2 - 1.
    CHECK(gt.d_beta_verdict.max_gap == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(gt.samples.front().d_beta_printed_norm_defect ==
          doctest::Approx(std::sqrt(5.0) / 2.0 - 1.0).epsilon(1e-6));

    const ErratumReport td = erratum_report(SmarandacheKind::TD, gc, grid);
    CHECK(td.kappa_beta_verdict.consistent);
    CHECK(td.d_beta_verdict.consistent);

    const ErratumReport gtd = erratum_report(SmarandacheKind::GTD, gc, grid);
    CHECK(gtd.kappa_beta_verdict.consistent);
    CHECK(gtd.d_beta_verdict.consistent);
}

TEST_CASE("erratum report on the latitude circle produces finite gaps") {
    const CurveSource lat = fixture_latitude_circle(kInvSqrt2);
    const std::vector<double> grid = erratum_sample_grid(lat, 8);
    const ErratumReport report = erratum_report(SmarandacheKind::TD, lat, grid);
    REQUIRE(report.samples.size() == 8);
    for (const ErratumSample& s : report.samples) {
        CHECK(s.kappa_g == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(std::isfinite(s.kappa_beta_gap));
        CHECK(std::isfinite(s.d_beta_gap));
    }
}

TEST_CASE("erratum grid excludes stencil margins") {
    const CurveSource c = fixture_paper_example();
    const std::vector<double> grid = erratum_sample_grid(c, 64);
    REQUIRE(grid.size() == 64);
    CHECK(grid.front() >= c.domain().lo + 2.0 * c.fd_step() - 1e-15);
    CHECK(grid.back() <= c.domain().hi - 2.0 * c.fd_step() + 1e-15);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("verification gates pass for every fixture and kind") {
    for (const CurveSource& c : {fixture_great_circle(),
                                 fixture_latitude_circle(kInvSqrt2),
                                 fixture_paper_example().with_domain({-4.0, 4.0})}) {
        const VerifyReport report = run_verification(c, kAllKinds, {});
        CHECK(report.all_gates_pass());
    }
}

TEST_CASE("printed lambda verdict is inconsistent only where curvature varies") {
    const VerifyReport on_gc =
        run_verification(fixture_great_circle(), kAllKinds, {});
    for (const KindVerification& kv : on_gc.kinds) {
        CHECK(kv.printed_verdicts[0].consistent);  // kappa = 0 hides the typo
    }
    const VerifyReport on_pe = run_verification(
        fixture_paper_example().with_domain({-4.0, 4.0}), kAllKinds, {});
    CHECK_FALSE(on_pe.kinds[0].printed_verdicts[0].consistent);  // gt
    CHECK(on_pe.kinds[1].printed_verdicts[0].consistent);        // td
    CHECK(on_pe.kinds[2].printed_verdicts[0].consistent);        // gtd
}

TEST_CASE("kind names round-trip") {
    for (const SmarandacheKind kind : kAllKinds) {
        CHECK(parse_kind(kind_name(kind)) == kind);
    }
    CHECK_FALSE(parse_kind("nope").has_value());
}
