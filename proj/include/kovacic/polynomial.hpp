#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/rational.hpp"
#include "kovacic/surd.hpp"

namespace kovacic {

/// Dense univariate polynomial over SurdNumber, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(SurdNumber c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Polynomial(int c) : Polynomial(SurdNumber(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(Rational c) : Polynomial(SurdNumber(std::move(c))) {} // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<SurdNumber> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial from_rationals(const std::vector<Rational>& coeffs) {
        std::vector<SurdNumber> c(coeffs.begin(), coeffs.end());
        return Polynomial(std::move(c));
    }

    static Polynomial x() { return monomial(1, 1); }

    static Polynomial monomial(const SurdNumber& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<SurdNumber> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// x - c
    static Polynomial linear(const SurdNumber& c) { return Polynomial(std::vector<SurdNumber>{-c, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<SurdNumber>& coefficients() const { return coeffs_; }

    SurdNumber coeff(int k) const {
        if (k < 0 || k > degree()) return {};
        return coeffs_[static_cast<std::size_t>(k)];
    }

    SurdNumber leading() const { return is_zero() ? SurdNumber() : coeffs_.back(); }

    bool is_constant() const { return degree() <= 0; }

    bool is_rational() const {
        for (const auto& c : coeffs_)
            if (!c.is_rational()) return false;
        return true;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        if (leading().is_one()) return *this;
        return *this * leading().inverse();
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<SurdNumber> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const SurdNumber& s) {
        if (s.is_zero()) return {};
        Polynomial out = a;
        for (auto& c : out.coeffs_) c *= s;
        out.trim();
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned e) const {
        Polynomial result = 1;
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// Quotient and remainder, s = q*t + r with deg r < deg t.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& s, const Polynomial& t) {
        if (t.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (s.degree() < t.degree()) return {Polynomial(), s};
        SurdNumber inv_lead = t.leading().inverse();
        std::vector<SurdNumber> rem = s.coeffs_;
        std::vector<SurdNumber> quot(static_cast<std::size_t>(s.degree() - t.degree() + 1));
        const int dt = t.degree();
        for (int k = s.degree(); k >= dt; --k) {
            const SurdNumber& top = rem[static_cast<std::size_t>(k)];
            if (top.is_zero()) continue;
            SurdNumber q = top * inv_lead;
            quot[static_cast<std::size_t>(k - dt)] = q;
            for (int j = 0; j <= dt; ++j) rem[static_cast<std::size_t>(k - dt + j)] -= q * t.coeffs_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(dt));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& s, const Polynomial& t) { return divmod(s, t).first; }
    friend Polynomial operator%(const Polynomial& s, const Polynomial& t) { return divmod(s, t).second; }

    /// Exact quotient; throws if t does not divide s.
    friend Polynomial exact_div(const Polynomial& s, const Polynomial& t) {
        auto [q, r] = divmod(s, t);
        if (!r.is_zero()) throw InvalidArgument("exact_div: nonzero remainder");
        return q;
    }

    Polynomial derivative() const {
        if (degree() <= 0) return {};
        std::vector<SurdNumber> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * SurdNumber(static_cast<long>(i));
        return Polynomial(std::move(out));
    }

    SurdNumber eval(const SurdNumber& at) const {
        SurdNumber acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// p(x + c): Taylor coefficients of p at c.
    Polynomial shift(const SurdNumber& c) const {
        std::vector<SurdNumber> a = coeffs_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
        return Polynomial(std::move(a));
    }

    /// p(u) for a polynomial u (composition).
    Polynomial compose(const Polynomial& u) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + Polynomial(*it);
        return acc;
    }

    /// x^deg p(1/x) for a given target degree (deg >= degree()).
    Polynomial reversed(int deg) const {
        std::vector<SurdNumber> out(static_cast<std::size_t>(deg + 1));
        for (int k = 0; k <= degree(); ++k) out[static_cast<std::size_t>(deg - k)] = coeffs_[static_cast<std::size_t>(k)];
        return Polynomial(std::move(out));
    }

    /// Multiplicity of the root c (0 if p(c) != 0). p must be nonzero.
    int root_multiplicity(const SurdNumber& c) const {
        if (is_zero()) throw InvalidArgument("root_multiplicity of zero polynomial");
        Polynomial s = shift(c);
        int m = 0;
        while (s.coeff(m).is_zero()) ++m;
        return m;
    }

    /// Printed in the expression grammar, highest degree first, e.g. "4*x^2+8*x+6".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const SurdNumber& c = coeffs_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            std::string cs;
            bool negative = false;
            if (c.summand_count() == 1) {
                SurdNumber mag = c;
                if (c.is_rational()) {
                    negative = c.rational_part().sign() < 0;
                    if (negative) mag = -c;
                } else if (c.surd_terms().front().coefficient.sign() < 0) {
                    negative = true;
                    mag = -c;
                }
                cs = mag.to_string();
            } else {
                cs = "(" + c.to_string() + ")";
            }
            if (!out.empty()) out += negative ? "-" : "+";
            else if (negative) out += "-";
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

    std::size_t summand_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += c.is_zero() ? 0 : (c.summand_count() > 1 ? 2 : 1);
        return n;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<SurdNumber> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& s, const Polynomial& t) { return divmod(s, t); }

/// Yun's algorithm: p = lc * prod_i f_i^i with f_i monic, squarefree, pairwise coprime.
/// Entry i-1 of the result holds f_i (possibly 1).
inline std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.degree() <= 0) return out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a = poly_gcd(f, df);
    Polynomial b = exact_div(f, a);
    Polynomial c = exact_div(df, a);
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial g = poly_gcd(b, d);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

/// Product of distinct monic irreducible factors (the squarefree kernel).
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return 1;
    return exact_div(p.monic(), poly_gcd(p, p.derivative()));
}

} // namespace kovacic
