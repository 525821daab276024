#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistlab/util.hpp"

namespace twistlab {

// Closed-form expression in variables x1..xd (x is an alias for x1).
// Grammar: constants (incl. i, pi), + - * / ^, abs(.) or |.|, exp, sin, cos,
// sqrt, log. Exponents must be constant. Enough for affine maps, powers x^a,
// jumps via piecewise use, and the trig/exponential coefficient functions.
class Expression {
public:
    Expression() = default;

    static Expression parse(const std::string& source, int d);
    static Expression constant(Cx value);

    Cx eval(const std::vector<double>& x) const;
    bool empty() const { return node_ == nullptr; }
    const std::string& source() const { return source_; }

    struct Node;

private:
    std::shared_ptr<const Node> node_;
    std::string source_;
};

// Convenience: parse and evaluate a constant expression (no variables).
double parse_number(const std::string& source);

}  // namespace twistlab
