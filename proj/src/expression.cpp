#include "sabban/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <utility>
#include <vector>

namespace sabban::expr {

struct Node {
    enum class Op {
        Constant, Param,
        Neg, Add, Sub, Mul, Div, Pow,
        Sin, Cos, Tan, Sinh, Cosh, Tanh, Sech, Exp, Sqrt,
    };

    Op op;
    double value = 0.0;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(double s) const {
        switch (op) {
            case Op::Constant: return value;
            case Op::Param: return s;
            case Op::Neg: return -lhs->eval(s);
            case Op::Add: return lhs->eval(s) + rhs->eval(s);
            case Op::Sub: return lhs->eval(s) - rhs->eval(s);
            case Op::Mul: return lhs->eval(s) * rhs->eval(s);
            case Op::Div: return lhs->eval(s) / rhs->eval(s);
            case Op::Pow: return std::pow(lhs->eval(s), rhs->eval(s));
            case Op::Sin: return std::sin(lhs->eval(s));
            case Op::Cos: return std::cos(lhs->eval(s));
            case Op::Tan: return std::tan(lhs->eval(s));
            case Op::Sinh: return std::sinh(lhs->eval(s));
            case Op::Cosh: return std::cosh(lhs->eval(s));
            case Op::Tanh: return std::tanh(lhs->eval(s));
            case Op::Sech: return 1.0 / std::cosh(lhs->eval(s));
            case Op::Exp: return std::exp(lhs->eval(s));
            case Op::Sqrt: return std::sqrt(lhs->eval(s));
        }
        throw Error("expression: unknown node");
    }
};

namespace {

using NodeRef = std::shared_ptr<const Node>;

NodeRef make(Node::Op op, NodeRef lhs = nullptr, NodeRef rhs = nullptr) {
    return std::make_shared<const Node>(Node{op, 0.0, std::move(lhs), std::move(rhs)});
}

NodeRef make_constant(double v) {
    return std::make_shared<const Node>(Node{Node::Op::Constant, v, nullptr, nullptr});
}

// Recursive-descent parser. Grammar, loosest binding first:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('+'|'-')* power
//   power   := primary ('^' factor)?          (right associative)
//   primary := NUMBER | 's' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodeRef run() {
        NodeRef root = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("expression error at position " + std::to_string(pos_) +
                          ": " + what + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodeRef parse_expr() {
        NodeRef node = parse_term();
        for (;;) {
            if (consume('+')) {
                node = make(Node::Op::Add, node, parse_term());
            } else if (consume('-')) {
                node = make(Node::Op::Sub, node, parse_term());
            } else {
                return node;
            }
        }
    }

    NodeRef parse_term() {
        NodeRef node = parse_factor();
        for (;;) {
            if (consume('*')) {
                node = make(Node::Op::Mul, node, parse_factor());
            } else if (consume('/')) {
                node = make(Node::Op::Div, node, parse_factor());
            } else {
                return node;
            }
        }
    }

    NodeRef parse_factor() {
        if (consume('-')) return make(Node::Op::Neg, parse_factor());
        if (consume('+')) return parse_factor();
        return parse_power();
    }

    NodeRef parse_power() {
        NodeRef base = parse_primary();
        if (consume('^')) {
            return make(Node::Op::Pow, base, parse_factor());
        }
        return base;
    }

    NodeRef parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_name();
        }
        if (consume('(')) {
            NodeRef inner = parse_expr();
            if (!consume(')')) fail("missing ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodeRef parse_number() {
        const char* begin = text_.data() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_constant(v);
    }

    NodeRef parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name == "s") return make(Node::Op::Param);
        if (name == "pi") return make_constant(std::numbers::pi);
        if (name == "e") return make_constant(std::numbers::e);

        Node::Op op;
        if (name == "sin") op = Node::Op::Sin;
        else if (name == "cos") op = Node::Op::Cos;
        else if (name == "tan") op = Node::Op::Tan;
        else if (name == "sinh") op = Node::Op::Sinh;
        else if (name == "cosh") op = Node::Op::Cosh;
        else if (name == "tanh") op = Node::Op::Tanh;
        else if (name == "sech") op = Node::Op::Sech;
        else if (name == "exp") op = Node::Op::Exp;
        else if (name == "sqrt") op = Node::Op::Sqrt;
        else fail("unknown identifier \"" + std::string(name) + "\"");

        if (!consume('(')) fail("expected '(' after function name");
        NodeRef arg = parse_expr();
        if (!consume(')')) fail("missing ')'");
        return make(op, std::move(arg));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
    return Expression(Parser(text).run());
}

double Expression::eval(double s) const { return root_->eval(s); }

CurveSource curve_from_expressions(const std::string& fx, const std::string& fy,
                                   const std::string& fz, Interval domain) {
    const Expression ex = Expression::parse(fx);
    const Expression ey = Expression::parse(fy);
    const Expression ez = Expression::parse(fz);
    return CurveSource(domain, [ex, ey, ez](double s) {
        return Vec3(ex.eval(s), ey.eval(s), ez.eval(s));
    });
}

CurveSource curve_from_expression_triple(const std::string& triple,
                                         Interval domain) {
    const std::size_t first = triple.find(';');
    const std::size_t second =
        first == std::string::npos ? std::string::npos : triple.find(';', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        triple.find(';', second + 1) != std::string::npos) {
        throw ConfigError("--expr expects exactly three ';'-separated expressions");
    }
    return curve_from_expressions(triple.substr(0, first),
                                  triple.substr(first + 1, second - first - 1),
                                  triple.substr(second + 1), domain);
}

}  // namespace sabban::expr
