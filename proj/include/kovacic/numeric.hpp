#pragma once

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "kovacic/closedform.hpp"
#include "kovacic/expr.hpp"
#include "kovacic/normalize.hpp"

namespace kovacic::numeric {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline Real to_real(const Rational& q) {
    return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

inline Complex to_complex(const SurdNumber& s) {
    Complex out(to_real(s.rational_part()));
    for (const auto& t : s.surd_terms()) {
        Real mag = sqrt(Real(integer_abs(t.radicand).get_str()));
        Complex root = t.radicand < 0 ? Complex(0, mag) : Complex(mag);
        out += Complex(to_real(t.coefficient)) * root;
    }
    return out;
}

/// f, f', f'' at a point.
struct Jet {
    Complex v, d1, d2;
};

inline Jet operator*(const Jet& f, const Jet& g) {
    return {f.v * g.v, f.d1 * g.v + f.v * g.d1, f.d2 * g.v + Complex(2) * f.d1 * g.d1 + f.v * g.d2};
}

inline Jet operator+(const Jet& f, const Jet& g) { return {f.v + g.v, f.d1 + g.d1, f.d2 + g.d2}; }

inline Jet operator/(const Jet& n, const Jet& d) {
    Complex q = n.v / d.v;
    Complex q1 = (n.d1 - q * d.d1) / d.v;
    Complex q2 = (n.d2 - Complex(2) * q1 * d.d1 - q * d.d2) / d.v;
    return {q, q1, q2};
}

inline Jet jet_exp(const Jet& f) {
    Complex e = exp(f.v);
    return {e, e * f.d1, e * (f.d2 + f.d1 * f.d1)};
}

/// b^s on the principal branch.
inline Jet jet_pow(const Jet& b, const Complex& s) {
    Complex g = exp(s * log(b.v));
    Complex l1 = b.d1 / b.v;
    Complex l2 = b.d2 / b.v;
    return {g, s * g * l1, s * g * (l2 + (s - Complex(1)) * l1 * l1)};
}

inline Jet jet(const Polynomial& p, const Complex& x) {
    Jet out{Complex(0), Complex(0), Complex(0)};
    for (int k = p.degree(); k >= 0; --k) {
        // Horner on the jet of x: (x, 1, 0)
        out = {out.v * x + to_complex(p.coeff(k)), out.d1 * x + out.v, out.d2 * x + Complex(2) * out.d1};
    }
    return out;
}

inline Jet jet(const RationalFunction& f, const Complex& x) { return jet(f.num(), x) / jet(f.den(), x); }

inline Complex value(const RationalFunction& f, const Complex& x) { return jet(f, x).v; }

/// Only explicit closed forms have a jet.
inline Jet jet(const ClosedForm& y, const Complex& x) {
    if (!y.is_explicit()) throw InvalidArgument("numeric jet of an implicit closed form");
    Jet out{to_complex(y.constant), Complex(0), Complex(0)};
    out = out * jet(y.poly_factor, x);
    for (const auto& f : y.power_factors) out = out * jet_pow(jet(f.base, x), to_complex(f.exponent));
    if (!y.exp_argument.is_zero()) out = out * jet_exp(jet(y.exp_argument, x));
    if (y.surd_exp) {
        Jet s = jet(y.surd_exp->coefficient, x) * jet_pow(jet(y.surd_exp->radicand, x), Complex(Real(1) / 2));
        out = out * jet_exp(s);
    }
    return out;
}

/// Real sample points to the right of every rational root that matters.
inline std::vector<Rational> sample_points(const OdeInput& ode, const ClosedForm& y, int count = 5) {
    Rational right = 0;
    auto absorb = [&right](const Polynomial& p) {
        if (p.degree() <= 0 || !p.is_rational()) return;
        for (const auto& [c, m] : factor_linear(p).roots) right = std::max(right, c);
    };
    absorb(ode.A.num());
    absorb(ode.A.den());
    absorb(ode.B.den());
    absorb(ode.C.den());
    absorb(y.poly_factor);
    for (const auto& f : y.power_factors) absorb(f.base);
    if (y.surd_exp) absorb(y.surd_exp->radicand);
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k) out.push_back(right + Rational(1) + Rational(k + 1, 3));
    return out;
}

/// max |A y'' + B y' + C y| / max(1, |y|) over the sample points.
inline Real max_relative_residual(const OdeInput& ode, const ClosedForm& y, int count = 5) {
    Real worst = 0;
    for (const auto& pt : sample_points(ode, y, count)) {
        Complex x(to_real(pt));
        Jet j = jet(y, x);
        Complex res = value(ode.A, x) * j.d2 + value(ode.B, x) * j.d1 + value(ode.C, x) * j.v;
        Real scale = std::max(Real(1), Real(abs(j.v)));
        worst = std::max(worst, Real(abs(res)) / scale);
    }
    return worst;
}

inline bool numeric_check(const OdeInput& ode, const ClosedForm& y, const Real& tol = Real("1e-30")) {
    return max_relative_residual(ode, y) < tol;
}

/// Value of a parsed output expression (no y terms).
inline Complex evaluate(const Expr& e, const Complex& x) {
    switch (e.kind) {
    case Expr::Kind::Number: return Complex(to_real(e.number));
    case Expr::Kind::Var: return x;
    case Expr::Kind::Y: throw InvalidArgument("evaluate: y in expression");
    case Expr::Kind::Neg: return -evaluate(*e.lhs, x);
    case Expr::Kind::Add: return evaluate(*e.lhs, x) + evaluate(*e.rhs, x);
    case Expr::Kind::Sub: return evaluate(*e.lhs, x) - evaluate(*e.rhs, x);
    case Expr::Kind::Mul: return evaluate(*e.lhs, x) * evaluate(*e.rhs, x);
    case Expr::Kind::Div: return evaluate(*e.lhs, x) / evaluate(*e.rhs, x);
    case Expr::Kind::Pow: {
        Complex b = evaluate(*e.lhs, x);
        Complex s = evaluate(*e.rhs, x);
        if (s.imag() == 0 && s.real() == floor(s.real())) return pow(b, s);
        return exp(s * log(b));
    }
    case Expr::Kind::Call: {
        Complex a = evaluate(*e.lhs, x);
        if (e.name == "exp") return exp(a);
        if (e.name == "ln") return log(a);
        return exp(Complex(Real(1) / 2) * log(a));
    }
    }
    return Complex(0);
}

} // namespace kovacic::numeric
