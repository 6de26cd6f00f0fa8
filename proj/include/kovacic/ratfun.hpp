#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/polynomial.hpp"

namespace kovacic {

/// num/den with den monic and gcd(num, den) = 1; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
    RationalFunction(SurdNumber c) : RationalFunction(Polynomial(std::move(c))) {} // NOLINT(google-explicit-constructor)
    RationalFunction(Rational c) : RationalFunction(Polynomial(std::move(c))) {} // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : RationalFunction(Polynomial(c)) {} // NOLINT(google-explicit-constructor)

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        canonicalize();
    }

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

    SurdNumber constant_value() const {
        if (!is_constant()) throw InvalidArgument("rational function is not constant");
        return num_.leading();
    }

    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        Polynomial g = poly_gcd(a.den_, b.den_);
        Polynomial ad = exact_div(a.den_, g);
        Polynomial bd = exact_div(b.den_, g);
        return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial g1 = poly_gcd(a.num_, b.den_);
        Polynomial g2 = poly_gcd(b.num_, a.den_);
        RationalFunction out;
        out.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        out.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        out.normalize_leading();
        return out;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction out;
        out.num_ = num_.pow(static_cast<unsigned>(e));
        out.den_ = den_.pow(static_cast<unsigned>(e));
        return out;
    }

    RationalFunction derivative() const {
        if (is_polynomial()) return RationalFunction(num_.derivative() * den_.leading().inverse());
        // (n/d)' = (n' d - n d') / d^2; with g = gcd(d, d') the fraction reduces early.
        Polynomial dd = den_.derivative();
        Polynomial g = poly_gcd(den_, dd);
        Polynomial d_over_g = exact_div(den_, g);
        Polynomial top = num_.derivative() * d_over_g - num_ * exact_div(dd, g);
        return RationalFunction(top, d_over_g * den_);
    }

    SurdNumber eval(const SurdNumber& at) const {
        SurdNumber d = den_.eval(at);
        if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
        return num_.eval(at) / d;
    }

    /// deg(den) - deg(num); the order at infinity. Undefined for zero.
    int order_at_infinity() const {
        if (is_zero()) throw InvalidArgument("order at infinity of zero");
        return den_.degree() - num_.degree();
    }

    /// Printed in the expression grammar, with rational denominators cleared so
    /// that 2*x/(2*x+1) prints as such rather than x/(x+1/2).
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        auto [n, d] = integer_scaled();
        if (d.degree() == 0) {
            SurdNumber dc = d.leading();
            if (dc.is_one()) return n.to_string(var);
            Polynomial scaled = n * dc.inverse();
            return scaled.to_string(var);
        }
        std::string ns = n.to_string(var);
        std::string ds = d.to_string(var);
        if (n.summand_count() > 1) ns = "(" + ns + ")";
        if (d.summand_count() > 1 || ds.find('*') != std::string::npos)
            ds = "(" + ds + ")";
        return ns + "/" + ds;
    }

    /// Common scalar multiple (num*k, den*k) with integer coefficients where possible
    /// and positive leading denominator coefficient.
    std::pair<Polynomial, Polynomial> integer_scaled() const {
        Integer lcm = 1;
        Integer g = 0;
        auto visit_den = [&lcm](const Polynomial& p) {
            for (const auto& c : p.coefficients()) {
                lcm = integer_lcm(lcm, c.rational_part().denominator());
                for (const auto& t : c.surd_terms()) lcm = integer_lcm(lcm, t.coefficient.denominator());
            }
        };
        visit_den(num_);
        visit_den(den_);
        auto visit_num = [&g, &lcm](const Polynomial& p) {
            for (const auto& c : p.coefficients()) {
                Rational q = c.rational_part() * Rational(lcm);
                if (!q.is_zero()) g = integer_gcd(g, q.numerator());
                for (const auto& t : c.surd_terms()) g = integer_gcd(g, (t.coefficient * Rational(lcm)).numerator());
            }
        };
        visit_num(num_);
        visit_num(den_);
        if (g == 0) g = 1;
        SurdNumber k = Rational(lcm, g);
        return {num_ * k, den_ * k};
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.degree() > 0 && num_.degree() >= 0) {
            Polynomial g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        normalize_leading();
    }

    void normalize_leading() {
        SurdNumber lc = den_.leading();
        if (!lc.is_one()) {
            SurdNumber inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        if (num_.is_zero()) den_ = 1;
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction ratfun_derivative(const RationalFunction& r) { return r.derivative(); }

} // namespace kovacic
