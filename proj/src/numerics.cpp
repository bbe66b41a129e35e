#include "sabban/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace sabban::numerics {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y,
                             std::vector<double> slope)
    : x_(std::move(x)), y_(std::move(y)), m_(std::move(slope)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n || m_.size() != n) {
        throw Error("MonotoneCubic: need >= 2 knots with matching values/slopes");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(x_[i + 1] > x_[i])) {
            throw Error("MonotoneCubic: knots must be strictly increasing");
        }
        if (!(y_[i + 1] > y_[i])) {
            throw NonMonotoneArcLength("MonotoneCubic: values must be strictly increasing");
        }
    }
    // Fritsch-Carlson limiting against the secants. A no-op for smooth,
    // well-resolved data with exact slopes.
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i] < 0.0) m_[i] = 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        const double a = m_[i] / d;
        const double b = m_[i + 1] / d;
        const double r2 = a * a + b * b;
        if (r2 > 9.0) {
            const double tau = 3.0 / std::sqrt(r2);
            m_[i] *= tau;
            m_[i + 1] *= tau;
        }
    }
}

std::size_t MonotoneCubic::locate(double x) const {
    if (x <= x_.front()) return 0;
    if (x >= x_.back()) return x_.size() - 2;
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double g00 = (6.0 * t2 - 6.0 * t) / h;
    const double g10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double g01 = (-6.0 * t2 + 6.0 * t) / h;
    const double g11 = 3.0 * t2 - 2.0 * t;
    return g00 * y_[i] + g10 * m_[i] + g01 * y_[i + 1] + g11 * m_[i + 1];
}

double MonotoneCubic::invert(double target) const {
    const double span = y_.back() - y_.front();
    const double slack = 1e-12 * std::max(1.0, std::abs(span));
    if (target < y_.front() - slack || target > y_.back() + slack) {
        throw OutOfRange("invert_monotone: target outside table range");
    }
    if (target <= y_.front()) return x_.front();
    if (target >= y_.back()) return x_.back();

    const auto it = std::upper_bound(y_.begin(), y_.end(), target);
    std::size_t i = static_cast<std::size_t>(it - y_.begin());
    i = (i == 0) ? 0 : i - 1;
    if (i + 1 >= x_.size()) i = x_.size() - 2;

    double lo = x_[i], hi = x_[i + 1];
    double x = 0.5 * (lo + hi);
    const double tol = 1e-13 * std::max(1.0, std::abs(y_.back()));
    for (int iter = 0; iter < 100; ++iter) {
        const double fx = (*this)(x)-target;
        if (std::abs(fx) <= tol) return x;
        if (fx > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        const double d = derivative(x);
        double next = (d > 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        if (hi - lo < 1e-16 * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);
        x = next;
    }
    return x;
}

}  // namespace sabban::numerics
