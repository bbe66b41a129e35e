#pragma once

#include <cmath>
#include <string>

#include "sabban/errors.hpp"

namespace sabban {

// 3-vector with finite components. Components are validated once at
// construction; arithmetic on finite doubles at desk scale stays finite.
struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z))) {
            throw DegenerateVector("Vec3: non-finite component");
        }
    }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

// Unit-norm admission: defect up to this is accepted outright.
inline constexpr double kUnitExactTol = 1e-12;
// Between the exact tolerance and this bound the vector is re-normalized;
// beyond it construction fails.
inline constexpr double kUnitAdmitTol = 1e-9;

// 3-vector constrained to unit Euclidean norm.
class UnitVec3 {
public:
    explicit UnitVec3(const Vec3& v) : v_(v) {
        const double n = norm(v);
        const double defect = std::abs(n - 1.0);
        if (defect <= kUnitExactTol) return;
        if (defect <= kUnitAdmitTol) {
            v_ = v / n;  // absorb drift from upstream arithmetic
            return;
        }
        throw DegenerateVector("UnitVec3: norm defect " + std::to_string(defect));
    }

    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

private:
    Vec3 v_;
};

// a / ||a||; DegenerateVector when ||a|| <= tol.
inline UnitVec3 normalize(const Vec3& a, double tol = 1e-12) {
    const double n = norm(a);
    if (!(n > tol)) {
        throw DegenerateVector("normalize: norm " + std::to_string(n) +
                               " below tolerance");
    }
    return UnitVec3(a / n);
}

inline double dot(const UnitVec3& a, const UnitVec3& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const UnitVec3& a, const UnitVec3& b) { return cross(a.vec(), b.vec()); }

}  // namespace sabban
