#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "sabban/curve.hpp"

namespace sabban::expr {

struct Node;

// Arithmetic expression in the single variable s over
// {+, -, *, /, ^, sin, cos, tan, sinh, cosh, tanh, sech, exp, sqrt, pi, e}.
class Expression {
public:
    // Throws ConfigError with the offending position on bad syntax.
    static Expression parse(std::string_view text);

    double eval(double s) const;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

// Curve from a triple of coordinate expressions; finite-difference
// derivative strategy.
CurveSource curve_from_expressions(const std::string& fx, const std::string& fy,
                                   const std::string& fz, Interval domain);

// Splits "fx;fy;fz" and builds the curve.
CurveSource curve_from_expression_triple(const std::string& triple,
                                         Interval domain);

}  // namespace sabban::expr
