#include "sabban/emit.hpp"

#include <charconv>
#include <system_error>

namespace sabban::io {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw Error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

const char* plane_name(Plane plane) {
    switch (plane) {
        case Plane::XY: return "xy";
        case Plane::XZ: return "xz";
        case Plane::YZ: return "yz";
    }
    throw Error("unknown plane");
}

std::pair<double, double> project(const Vec3& p, Plane plane) {
    switch (plane) {
        case Plane::XY: return {p.x, p.y};
        case Plane::XZ: return {p.x, p.z};
        case Plane::YZ: return {p.y, p.z};
    }
    throw Error("unknown plane");
}

void render_curve_svg(std::ostream& os, const SampledCurve& curve, Plane plane,
                      const std::string& config_echo) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    if (!config_echo.empty()) {
        os << "  <!-- " << config_echo << " -->\n";
    }
    os << "  <rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"white\"/>\n";
    os << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#b8b8b8\" "
          "stroke-width=\"0.008\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"0.012\" "
          "stroke-linejoin=\"round\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto [u, v] = project(curve.points[i].vec(), plane);
        if (i) os << ' ';
        // SVG y grows downward; flip to keep math orientation.
        os << format_double(u) << ',' << format_double(-v);
    }
    os << "\"/>\n</svg>\n";
}

}  // namespace sabban::io
