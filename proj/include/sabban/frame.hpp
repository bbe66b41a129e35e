#pragma once

#include <optional>
#include <vector>

#include "sabban/curve.hpp"
#include "sabban/linalg.hpp"

namespace sabban {

// Orthonormal right-handed moving frame {gamma, t, d} of a unit-speed
// spherical curve: position, tangent t = gamma', spherical normal
// d = gamma x t.
struct SabbanFrame {
    UnitVec3 gamma;
    UnitVec3 tangent;
    UnitVec3 normal;

    // Largest pairwise |dot| among the three vectors.
    double orthogonality_defect() const;
    // dot(gamma x tangent, normal); 1 for a right-handed frame.
    double handedness() const;
};

struct FrameSample {
    double s{0.0};
    SabbanFrame frame;
    double kappa_g{0.0};
    double kappa_g_prime{0.0};
    std::optional<double> speed_ratio;  // ds*/ds for derived curves
};

// Frame at parameter s. NotUnitSpeed when the tangent norm defect exceeds
// 1e-4 or the frame cannot be made orthonormal; DegenerateVector on
// collapsed input.
SabbanFrame sabban_frame(const CurveSource& c, double s);

// kappa_g = <t', d>.
double geodesic_curvature(const CurveSource& c, double s);

// d kappa_g / ds by central finite difference; DomainEdge when the stencil
// leaves the domain.
double kappa_prime(const CurveSource& c, double s);

// As kappa_prime, but degrades to a one-sided stencil near the edges
// instead of failing.
double kappa_prime_guarded(const CurveSource& c, double s);

// Max over `samples` interior points of the residual norms of
// gamma' = t,  t' = -gamma + kappa_g d,  d' = -kappa_g t.
double verify_sabban_odes(const CurveSource& c, int samples);

// n uniform frame samples with guarded kappa_g' (serialization grid).
std::vector<FrameSample> sample_frames(const CurveSource& c, int n);

}  // namespace sabban
