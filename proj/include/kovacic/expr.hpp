#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/normalize.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

/*
 * Expression grammar shared by ODE input and solution output:
 *
 *   equation := expr [ '=' expr ]
 *   expr     := ['+'|'-'] term { ('+'|'-') term }
 *   term     := power { ('*'|'/') power }
 *   power    := unary [ '^' unary ]          (right-assoc)
 *   unary    := '-' unary | atom
 *   atom     := integer | 'x' | 'y' {'\''} | name '(' expr ')' | '(' expr ')'
 *
 * Function names are exp, ln, sqrt. Numbers are integers; rationals come from '/'.
 */
struct Expr {
    enum class Kind { Number, Var, Y, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind = Kind::Number;
    Rational number;
    int y_order = 0;
    std::string name;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
    std::size_t position = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    ExprPtr parse_equation() {
        ExprPtr left = expr();
        skip_ws();
        if (peek() == '=') {
            std::size_t at = pos_++;
            ExprPtr right = expr();
            left = make(Expr::Kind::Sub, left, right, at);
        }
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return left;
    }

private:
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    static ExprPtr make(Expr::Kind k, ExprPtr a, ExprPtr b, std::size_t at) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        e->position = at;
        return e;
    }

    ExprPtr expr() {
        ExprPtr acc;
        char c = peek();
        if (c == '+' || c == '-') {
            std::size_t at = pos_++;
            ExprPtr t = term();
            acc = c == '-' ? make(Expr::Kind::Neg, t, nullptr, at) : t;
        } else {
            acc = term();
        }
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            std::size_t at = pos_++;
            ExprPtr t = term();
            acc = make(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, acc, t, at);
        }
        return acc;
    }

    ExprPtr term() {
        ExprPtr acc = power();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') break;
            std::size_t at = pos_++;
            ExprPtr f = power();
            acc = make(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, acc, f, at);
        }
        return acc;
    }

    ExprPtr power() {
        ExprPtr base = unary();
        if (peek() == '^') {
            std::size_t at = pos_++;
            ExprPtr e = power_exponent();
            return make(Expr::Kind::Pow, base, e, at);
        }
        return base;
    }

    ExprPtr power_exponent() {
        if (peek() == '-') {
            std::size_t at = pos_++;
            return make(Expr::Kind::Neg, power_exponent(), nullptr, at);
        }
        return power();
    }

    ExprPtr unary() {
        if (peek() == '-') {
            std::size_t at = pos_++;
            return make(Expr::Kind::Neg, unary(), nullptr, at);
        }
        return atom();
    }

    ExprPtr atom() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(s_[pos_]))))
                throw ParseError("malformed number", pos_);
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->number = Rational(Integer(s_.substr(start, pos_ - start)));
            e->position = at;
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            auto e = std::make_shared<Expr>();
            e->position = at;
            if (id == "x") {
                e->kind = Expr::Kind::Var;
                return e;
            }
            if (id == "y") {
                e->kind = Expr::Kind::Y;
                while (pos_ < s_.size() && s_[pos_] == '\'') {
                    ++e->y_order;
                    ++pos_;
                }
                if (e->y_order > 2) throw ParseError("derivative order above 2", at);
                return e;
            }
            if ((id == "exp" || id == "ln" || id == "sqrt") && peek() == '(') {
                ++pos_;
                e->kind = Expr::Kind::Call;
                e->name = id;
                e->lhs = expr();
                if (peek() != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
                return e;
            }
            throw SymbolicCoefficients("unknown symbol '" + id + "' at position " + std::to_string(start));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

/// Value of an ODE-side expression: c0 + c1*y + c2*y' + c3*y''.
struct LinearForm {
    RationalFunction parts[4];

    bool pure() const { return parts[1].is_zero() && parts[2].is_zero() && parts[3].is_zero(); }
    bool has_y() const { return !pure(); }
};

inline LinearForm lf_scale(const LinearForm& a, const RationalFunction& f) {
    LinearForm out;
    for (int i = 0; i < 4; ++i) out.parts[i] = a.parts[i] * f;
    return out;
}

inline LinearForm to_linear_form(const Expr& e) {
    LinearForm out;
    switch (e.kind) {
    case Expr::Kind::Number:
        out.parts[0] = RationalFunction(e.number);
        return out;
    case Expr::Kind::Var:
        out.parts[0] = RationalFunction::x();
        return out;
    case Expr::Kind::Y:
        out.parts[1 + e.y_order] = RationalFunction(1);
        return out;
    case Expr::Kind::Neg:
        return lf_scale(to_linear_form(*e.lhs), RationalFunction(-1));
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        LinearForm a = to_linear_form(*e.lhs);
        LinearForm b = to_linear_form(*e.rhs);
        for (int i = 0; i < 4; ++i) out.parts[i] = e.kind == Expr::Kind::Add ? a.parts[i] + b.parts[i] : a.parts[i] - b.parts[i];
        return out;
    }
    case Expr::Kind::Mul: {
        LinearForm a = to_linear_form(*e.lhs);
        LinearForm b = to_linear_form(*e.rhs);
        if (a.has_y() && b.has_y()) throw ParseError("nonlinear product of y terms", e.position);
        return a.has_y() ? lf_scale(a, b.parts[0]) : lf_scale(b, a.parts[0]);
    }
    case Expr::Kind::Div: {
        LinearForm a = to_linear_form(*e.lhs);
        LinearForm b = to_linear_form(*e.rhs);
        if (b.has_y()) throw ParseError("division by a y term", e.position);
        if (b.parts[0].is_zero()) throw ParseError("division by zero", e.position);
        return lf_scale(a, b.parts[0].inverse());
    }
    case Expr::Kind::Pow: {
        LinearForm a = to_linear_form(*e.lhs);
        LinearForm b = to_linear_form(*e.rhs);
        if (b.has_y() || !b.parts[0].is_constant() || !b.parts[0].constant_value().is_rational() ||
            !b.parts[0].constant_value().rational_part().is_integer())
            throw ParseError("exponent must be an integer constant", e.position);
        Integer k = b.parts[0].is_zero() ? Integer(0) : b.parts[0].constant_value().rational_part().numerator();
        if (a.has_y()) {
            if (k != 1) throw ParseError("power of a y term", e.position);
            return a;
        }
        if (k > 1000 || k < -1000) throw ParseError("exponent too large", e.position);
        if (a.parts[0].is_zero() && k <= 0) throw ParseError("zero to a non-positive power", e.position);
        out.parts[0] = a.parts[0].pow(static_cast<int>(k.get_si()));
        return out;
    }
    case Expr::Kind::Call:
        throw SymbolicCoefficients("function " + e.name + " is not allowed in ODE coefficients (position " +
                                   std::to_string(e.position) + ")");
    }
    return out;
}

} // namespace detail

inline ExprPtr parse_expression(const std::string& text) { return detail::Parser(text).parse_equation(); }

/// Parses "A*y'' + B*y' + C*y = 0" (or any linear combination, either side of '=').
inline OdeInput parse_ode(const std::string& text) {
    ExprPtr e = parse_expression(text);
    detail::LinearForm f = detail::to_linear_form(*e);
    if (!f.parts[0].is_zero()) throw ParseError("equation is not homogeneous (term without y)", 0);
    if (f.parts[3].is_zero()) throw ParseError("no y'' term", 0);
    return {f.parts[3], f.parts[2], f.parts[1]};
}

inline std::string print_ode(const OdeInput& ode) {
    std::string out;
    auto add = [&out](const RationalFunction& c, const char* y) {
        if (c.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + y;
    };
    add(ode.A, "y''");
    add(ode.B, "y'");
    add(ode.C, "y");
    return out + " = 0";
}

} // namespace kovacic
