#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sabban/curve.hpp"

namespace sabban::io {

// Shortest decimal string that round-trips to the same IEEE double.
std::string format_double(double v);

enum class Plane { XY, XZ, YZ };

const char* plane_name(Plane plane);

// Orthographic projection of a point onto the chosen coordinate plane.
std::pair<double, double> project(const Vec3& p, Plane plane);

// Static SVG: unit-circle silhouette of the sphere plus the projected
// polyline, in math coordinates (y up). Byte-deterministic for identical
// inputs.
void render_curve_svg(std::ostream& os, const SampledCurve& curve, Plane plane,
                      const std::string& config_echo);

}  // namespace sabban::io
