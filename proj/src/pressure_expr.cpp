#include "nslab/pressure_expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>

namespace nslab {

namespace {

// AST for rational expressions in v.  Differentiation happens on the
// tree, so dp is exact (no finite differences).
struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };

struct Node {
    Op op;
    double value = 0.0;  // Const
    int exponent = 0;    // Pow
    NodePtr lhs, rhs;
};

NodePtr make_const(double c) {
    return std::make_shared<Node>(Node{Op::Const, c});
}
NodePtr make_var() { return std::make_shared<Node>(Node{Op::Var}); }
NodePtr make(Op op, NodePtr l, NodePtr r = nullptr) {
    Node n{op};
    n.lhs = std::move(l);
    n.rhs = std::move(r);
    return std::make_shared<Node>(std::move(n));
}
NodePtr make_pow(NodePtr base, int e) {
    Node n{Op::Pow};
    n.exponent = e;
    n.lhs = std::move(base);
    return std::make_shared<Node>(std::move(n));
}

Complex eval(const Node& n, Complex v) {
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: return v;
        case Op::Add: return eval(*n.lhs, v) + eval(*n.rhs, v);
        case Op::Sub: return eval(*n.lhs, v) - eval(*n.rhs, v);
        case Op::Mul: return eval(*n.lhs, v) * eval(*n.rhs, v);
        case Op::Div: return eval(*n.lhs, v) / eval(*n.rhs, v);
        case Op::Neg: return -eval(*n.lhs, v);
        case Op::Pow: {
            const Complex b = eval(*n.lhs, v);
            Complex r = 1.0;
            const int a = std::abs(n.exponent);
            for (int k = 0; k < a; ++k) r *= b;
            return n.exponent >= 0 ? r : 1.0 / r;
        }
    }
    return {};
}

NodePtr diff(const NodePtr& n) {
    switch (n->op) {
        case Op::Const: return make_const(0.0);
        case Op::Var: return make_const(1.0);
        case Op::Add: return make(Op::Add, diff(n->lhs), diff(n->rhs));
        case Op::Sub: return make(Op::Sub, diff(n->lhs), diff(n->rhs));
        case Op::Mul:
            return make(Op::Add, make(Op::Mul, diff(n->lhs), n->rhs),
                        make(Op::Mul, n->lhs, diff(n->rhs)));
        case Op::Div:
            // (f/g)' = (f' g - f g') / g^2
            return make(Op::Div,
                        make(Op::Sub, make(Op::Mul, diff(n->lhs), n->rhs),
                             make(Op::Mul, n->lhs, diff(n->rhs))),
                        make_pow(n->rhs, 2));
        case Op::Neg: return make(Op::Neg, diff(n->lhs));
        case Op::Pow:
            if (n->exponent == 0) return make_const(0.0);
            return make(Op::Mul,
                        make(Op::Mul, make_const((double)n->exponent),
                             make_pow(n->lhs, n->exponent - 1)),
                        diff(n->lhs));
    }
    return make_const(0.0);
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input at position " +
                             std::to_string(pos_));
        return e;
    }

private:
    NodePtr expr() {
        skip_ws();
        NodePtr e;
        if (peek() == '-') {
            ++pos_;
            e = make(Op::Neg, term());
        } else {
            if (peek() == '+') ++pos_;
            e = term();
        }
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                e = make(Op::Add, e, term());
            } else if (c == '-') {
                ++pos_;
                e = make(Op::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                e = make(Op::Mul, e, factor());
            } else if (c == '/') {
                ++pos_;
                e = make(Op::Div, e, factor());
            } else {
                return e;
            }
        }
    }

    NodePtr factor() {
        NodePtr b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return make_pow(b, integer());
        }
        return b;
    }

    NodePtr base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("missing ')'");
            ++pos_;
            return e;
        }
        if (c == '-') {
            ++pos_;
            return make(Op::Neg, factor());
        }
        if (c == 'v') {
            ++pos_;
            return make_var();
        }
        if (std::isdigit((unsigned char)c) || c == '.') return number();
        throw ParseError(std::string("unexpected character '") + c +
                         "' at position " + std::to_string(pos_));
    }

    NodePtr number() {
        size_t end = pos_;
        while (end < s_.size() &&
               (std::isdigit((unsigned char)s_[end]) || s_[end] == '.' ||
                s_[end] == 'e' || s_[end] == 'E' ||
                ((s_[end] == '+' || s_[end] == '-') && end > pos_ &&
                 (s_[end - 1] == 'e' || s_[end - 1] == 'E'))))
            ++end;
        size_t consumed = 0;
        double val;
        try {
            val = std::stod(s_.substr(pos_, end - pos_), &consumed);
        } catch (const std::exception&) {
            throw ParseError("bad number at position " + std::to_string(pos_));
        }
        pos_ += consumed;
        return make_const(val);
    }

    int integer() {
        skip_ws();
        size_t end = pos_;
        if (end < s_.size() && (s_[end] == '+' || s_[end] == '-')) ++end;
        while (end < s_.size() && std::isdigit((unsigned char)s_[end])) ++end;
        if (end == pos_ || !std::isdigit((unsigned char)s_[end - 1]))
            throw ParseError("'^' requires an integer exponent");
        const int val = std::stoi(s_.substr(pos_, end - pos_));
        pos_ = end;
        return val;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

PressureLaw parse_pressure_law(const std::string& spec) {
    const NodePtr p = Parser(spec).parse();
    const NodePtr dp = diff(p);
    PressureLaw law;
    law.name = spec;
    law.p = [p](Complex v) { return eval(*p, v); };
    law.dp = [dp](Complex v) { return eval(*dp, v); };
    return law;
}

PressureLaw resolve_pressure_law(const std::string& name_or_spec) {
    if (name_or_spec == "inv_v") return inverse_volume_law();
    return parse_pressure_law(name_or_spec);
}

}  // namespace nslab
