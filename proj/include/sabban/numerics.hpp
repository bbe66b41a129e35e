#pragma once

#include <cmath>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "sabban/errors.hpp"
#include "sabban/linalg.hpp"

// Shared numerical oracles: finite differences, composite Simpson
// quadrature, and monotone piecewise-cubic interpolation/inversion.
namespace sabban::numerics {

enum class StencilOrder {
    Central3,  // O(h^2)
    Central5,  // O(h^4)
};

struct DifferenceScheme {
    StencilOrder order = StencilOrder::Central5;
    double step = 1e-4;
};

// Stencil half-width in units of h.
inline int stencil_reach(StencilOrder order) {
    return order == StencilOrder::Central3 ? 1 : 2;
}

// Central difference of f at s. The caller guarantees f is evaluable on
// the whole stencil.
template <typename F>
auto central_difference(F&& f, double s, const DifferenceScheme& scheme)
    -> std::invoke_result_t<F, double> {
    const double h = scheme.step;
    if (!(h > 0.0)) throw Error("central_difference: step must be positive");
    if (scheme.order == StencilOrder::Central3) {
        return (f(s + h) - f(s - h)) / (2.0 * h);
    }
    return (f(s - 2.0 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2.0 * h)) /
           (12.0 * h);
}

// Derivative with the stencil kept inside [lo, hi]: central where it fits,
// one-sided stencils of matching order near the edges.
template <typename F>
auto guarded_difference(F&& f, double s, double lo, double hi,
                        const DifferenceScheme& scheme)
    -> std::invoke_result_t<F, double> {
    const double h = scheme.step;
    if (!(h > 0.0)) throw Error("guarded_difference: step must be positive");
    const int reach = stencil_reach(scheme.order);
    if (s - reach * h >= lo && s + reach * h <= hi) {
        return central_difference(f, s, scheme);
    }
    if (scheme.order == StencilOrder::Central3) {
        if (s + 2.0 * h <= hi) {  // forward, O(h^2)
            return (-3.0 * f(s) + 4.0 * f(s + h) - f(s + 2.0 * h)) / (2.0 * h);
        }
        if (s - 2.0 * h >= lo) {  // backward, O(h^2)
            return (3.0 * f(s) - 4.0 * f(s - h) + f(s - 2.0 * h)) / (2.0 * h);
        }
    } else {
        if (s + 4.0 * h <= hi) {  // forward, O(h^4)
            return (-25.0 * f(s) + 48.0 * f(s + h) - 36.0 * f(s + 2.0 * h) +
                    16.0 * f(s + 3.0 * h) - 3.0 * f(s + 4.0 * h)) /
                   (12.0 * h);
        }
        if (s - 4.0 * h >= lo) {  // backward, O(h^4)
            return (25.0 * f(s) - 48.0 * f(s - h) + 36.0 * f(s - 2.0 * h) -
                    16.0 * f(s - 3.0 * h) + 3.0 * f(s - 4.0 * h)) /
                   (12.0 * h);
        }
    }
    throw DomainEdge("guarded_difference: domain shorter than the stencil");
}

// Second derivative, 3-point central (O(h^2)); one-sided near edges.
template <typename F>
auto guarded_second_difference(F&& f, double s, double lo, double hi, double h)
    -> std::invoke_result_t<F, double> {
    if (!(h > 0.0)) throw Error("guarded_second_difference: step must be positive");
    if (s - h >= lo && s + h <= hi) {
        return (f(s - h) - 2.0 * f(s) + f(s + h)) / (h * h);
    }
    if (s + 3.0 * h <= hi) {
        return (2.0 * f(s) - 5.0 * f(s + h) + 4.0 * f(s + 2.0 * h) -
                f(s + 3.0 * h)) /
               (h * h);
    }
    if (s - 3.0 * h >= lo) {
        return (2.0 * f(s) - 5.0 * f(s - h) + 4.0 * f(s - 2.0 * h) -
                f(s - 3.0 * h)) /
               (h * h);
    }
    throw DomainEdge("guarded_second_difference: domain shorter than the stencil");
}

struct QuadratureSpec {
    int panels = 2048;  // rounded up to an even count
};

// Composite Simpson estimate of the integral of f over [a, b].
template <typename F>
double integrate(F&& f, double a, double b, QuadratureSpec spec = {}) {
    if (!(a <= b)) throw Error("integrate: requires a <= b");
    if (a == b) return 0.0;
    int n = spec.panels < 2 ? 2 : spec.panels;
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(a + i * h);
    for (int i = 2; i < n; i += 2) even += f(a + i * h);
    return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

// Monotone piecewise-cubic Hermite interpolant. Slopes are supplied by the
// caller (exact derivative data when available) and limited by the
// Fritsch-Carlson criterion so the interpolant cannot overshoot.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y,
                  std::vector<double> slope);

    double operator()(double x) const;
    double derivative(double x) const;

    // Inverse of a strictly increasing interpolant: returns x with
    // |eval(x) - target| below solver tolerance. OutOfRange outside the
    // value range.
    double invert(double target) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    double y_front() const { return y_.front(); }
    double y_back() const { return y_.back(); }

private:
    std::size_t locate(double x) const;

    std::vector<double> x_, y_, m_;
};

}  // namespace sabban::numerics
