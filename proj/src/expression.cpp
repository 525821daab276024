#include "twistlab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace twistlab {

struct Expression::Node {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Call };
    Kind kind = Kind::Const;
    Cx value = 0.0;
    int var = 0;  // 0-based axis for Var
    std::string func;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(Cx v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = v;
    return n;
}

NodePtr make_binary(Node::Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

Cx eval_node(const Node& n, const std::vector<double>& x) {
    switch (n.kind) {
        case Node::Kind::Const: return n.value;
        case Node::Kind::Var: return Cx(x.at(static_cast<std::size_t>(n.var)), 0.0);
        case Node::Kind::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
        case Node::Kind::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
        case Node::Kind::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
        case Node::Kind::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
        case Node::Kind::Neg: return -eval_node(*n.a, x);
        case Node::Kind::Pow: {
            const Cx base = eval_node(*n.a, x);
            const Cx expo = n.b->value;
            if (expo.imag() == 0.0 && base.imag() == 0.0 && base.real() >= 0.0)
                return Cx(std::pow(base.real(), expo.real()), 0.0);
            return std::pow(base, expo);
        }
        case Node::Kind::Call: {
            const Cx v = eval_node(*n.a, x);
            if (n.func == "abs") return Cx(std::abs(v), 0.0);
            if (n.func == "exp") return std::exp(v);
            if (n.func == "sin") return std::sin(v);
            if (n.func == "cos") return std::cos(v);
            if (n.func == "sqrt") {
                if (v.imag() == 0.0 && v.real() >= 0.0) return Cx(std::sqrt(v.real()), 0.0);
                return std::sqrt(v);
            }
            if (n.func == "log") return std::log(v);
            throw PreconditionError("expression: unknown function " + n.func);
        }
    }
    throw PreconditionError("expression: corrupt node");
}

class Parser {
public:
    Parser(const std::string& src, int d) : src_(src), d_(d) {}

    NodePtr run() {
        skip_ws();
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing characters");
        return e;
    }

private:
    const std::string& src_;
    int d_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw PreconditionError("expression parse error at position " + std::to_string(pos_) +
                                " in \"" + src_ + "\": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (consume('+'))
                lhs = make_binary(Node::Kind::Add, lhs, parse_term());
            else if (consume('-'))
                lhs = make_binary(Node::Kind::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (consume('*'))
                lhs = make_binary(Node::Kind::Mul, lhs, parse_unary());
            else if (consume('/'))
                lhs = make_binary(Node::Kind::Div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Neg;
            n->a = parse_unary();
            return n;
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (consume('^')) {
            NodePtr expo = parse_unary();
            // exponent must reduce to a constant
            Cx v;
            try {
                v = eval_node(*expo, {});
            } catch (const std::exception&) {
                fail("exponent must be a constant expression");
            }
            return make_binary(Node::Kind::Pow, base, make_const(v));
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (c == '|') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!consume('|')) fail("expected closing '|'");
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Call;
            n->func = "abs";
            n->a = e;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_numeric();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_numeric() {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("bad number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_const(Cx(v, 0.0));
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "i") return make_const(Cx(0.0, 1.0));
        if (name == "pi") return make_const(Cx(kPi, 0.0));
        if (name == "x" || (name.size() > 1 && name[0] == 'x' &&
                            name.find_first_not_of("0123456789", 1) == std::string::npos)) {
            const int axis = (name == "x") ? 0 : std::atoi(name.c_str() + 1) - 1;
            if (axis < 0 || axis >= d_) fail("variable " + name + " out of range for d=" + std::to_string(d_));
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Var;
            n->var = axis;
            return n;
        }
        // function call
        if (name != "abs" && name != "exp" && name != "sin" && name != "cos" &&
            name != "sqrt" && name != "log")
            fail("unknown identifier " + name);
        if (!consume('(')) fail("expected '(' after " + name);
        NodePtr arg = parse_sum();
        if (!consume(')')) fail("expected ')'");
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Call;
        n->func = name;
        n->a = arg;
        return n;
    }
};

}  // namespace

Expression Expression::parse(const std::string& source, int d) {
    Expression e;
    e.node_ = Parser(source, d).run();
    e.source_ = source;
    return e;
}

Expression Expression::constant(Cx value) {
    Expression e;
    e.node_ = make_const(value);
    e.source_ = value.imag() == 0.0 ? format_double(value.real())
                                    : "(" + format_double(value.real()) + " + " +
                                          format_double(value.imag()) + "*i)";
    return e;
}

Cx Expression::eval(const std::vector<double>& x) const {
    if (!node_) throw PreconditionError("expression: empty");
    return eval_node(*node_, x);
}

double parse_number(const std::string& source) {
    const Cx v = Expression::parse(source, 0).eval({});
    return v.real();
}

}  // namespace twistlab
