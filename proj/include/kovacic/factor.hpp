#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/polynomial.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

struct RootMultiplicity {
    Rational root;
    int multiplicity = 0;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct LinearFactorization {
    std::vector<RootMultiplicity> roots; // ascending by root
    Polynomial residue;                  // monic, no rational roots
};

namespace detail {

/// Integer-coefficient primitive multiple of a rational polynomial.
inline std::vector<Integer> primitive_integer_coefficients(const Polynomial& p) {
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) lcm = integer_lcm(lcm, c.as_rational().denominator());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        Rational q = c.as_rational() * Rational(lcm);
        out.push_back(q.numerator());
        g = integer_gcd(g, q.numerator());
    }
    if (g != 0 && g != 1)
        for (auto& v : out) v /= g;
    return out;
}

/// Rational roots of a squarefree rational polynomial, ascending.
inline std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    Polynomial q = p;
    if (q.coeff(0).is_zero()) {
        roots.emplace_back(0);
        q = exact_div(q, Polynomial::x());
    }
    if (q.degree() <= 0) return roots;
    if (q.degree() == 1) {
        roots.push_back((-q.coeff(0) / q.coeff(1)).as_rational());
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    auto ints = primitive_integer_coefficients(q);
    auto ps = positive_divisors(ints.front());
    auto qs = positive_divisors(ints.back());
    for (const auto& a : ps) {
        for (const auto& b : qs) {
            if (integer_gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s > 0 ? a : Integer(-a), b);
                if (q.eval(cand).is_zero()) {
                    roots.push_back(cand);
                    q = exact_div(q, Polynomial::linear(cand));
                    if (q.degree() <= 0) break;
                }
            }
            if (q.degree() <= 0) break;
        }
        if (q.degree() <= 0) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace detail

/// t = lc * residue * prod (x - c_i)^{m_i} over the rational roots c_i.
inline LinearFactorization factor_linear(const Polynomial& t) {
    if (!t.is_rational()) throw InvalidArgument("factor_linear: coefficients must be rational");
    LinearFactorization out;
    out.residue = 1;
    if (t.degree() <= 0) return out;
    auto parts = squarefree_decomposition(t);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int mult = static_cast<int>(i + 1);
        Polynomial rest = parts[i];
        for (const auto& c : detail::rational_roots(parts[i])) {
            out.roots.push_back({c, mult});
            rest = exact_div(rest, Polynomial::linear(c));
        }
        out.residue *= rest.pow(static_cast<unsigned>(mult));
    }
    out.residue = out.residue.monic();
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
    return out;
}

struct PartialFractionTerm {
    Rational pole;
    int exponent = 0;
    SurdNumber coefficient;
    friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

struct PartialFractionForm {
    Polynomial polynomial_part;
    std::vector<PartialFractionTerm> terms; // grouped by pole ascending, exponent ascending

    RationalFunction recombine() const {
        RationalFunction out(polynomial_part);
        for (const auto& t : terms)
            out += RationalFunction(Polynomial(t.coefficient), Polynomial::linear(t.pole).pow(static_cast<unsigned>(t.exponent)));
        return out;
    }

    /// Coefficient of 1/(x-c)^k (zero when absent).
    SurdNumber coefficient(const Rational& pole, int k) const {
        for (const auto& t : terms)
            if (t.pole == pole && t.exponent == k) return t.coefficient;
        return {};
    }
};

/// Principal part at c of num/den where den = (x-c)^m * q(x), q(c) != 0.
/// Returns b_1..b_m (b_k multiplies 1/(x-c)^k).
inline std::vector<SurdNumber> principal_part(const Polynomial& num, const Polynomial& den, const Rational& c, int m) {
    // Work in t = x - c: num(t+c) / (t^m q(t+c)); the Taylor coefficients h_0..h_{m-1}
    // of num/q at c give b_{m-k} = h_k.
    Polynomial ns = num.shift(c);
    Polynomial ds = den.shift(c);
    std::vector<SurdNumber> q(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) q[static_cast<std::size_t>(k)] = ds.coeff(m + k);
    SurdNumber q0_inv = q[0].inverse();
    std::vector<SurdNumber> h(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        SurdNumber acc = ns.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= q[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
        h[static_cast<std::size_t>(k)] = acc * q0_inv;
    }
    std::vector<SurdNumber> b(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) b[static_cast<std::size_t>(m - 1 - k)] = h[static_cast<std::size_t>(k)];
    return b;
}

inline PartialFractionForm partial_fractions(const RationalFunction& r) {
    PartialFractionForm out;
    auto [quot, rem] = divmod(r.num(), r.den());
    out.polynomial_part = quot;
    if (rem.is_zero()) return out;
    if (!r.den().is_rational()) throw UnsupportedPoles("denominator has non-rational coefficients: " + r.den().to_string());
    auto fact = factor_linear(r.den());
    if (fact.residue.degree() > 0)
        throw UnsupportedPoles("denominator has non-rational roots: " + fact.residue.to_string());
    for (const auto& [c, m] : fact.roots) {
        auto b = principal_part(rem, r.den(), c, m);
        for (int k = 1; k <= m; ++k)
            if (!b[static_cast<std::size_t>(k - 1)].is_zero()) out.terms.push_back({c, k, b[static_cast<std::size_t>(k - 1)]});
    }
    return out;
}

} // namespace kovacic
