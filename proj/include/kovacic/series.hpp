#pragma once

#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/factor.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

struct SqrtPartAtPole {
    Rational pole;
    int v = 0;
    std::vector<SurdNumber> terms; // a_2..a_v, coefficient of 1/(x-c)^i at index i-2
    SurdNumber leading;            // a_v
    SurdNumber b_correction;

    /// [sqrt r]_c = sum_{i=2}^{v} a_i/(x-c)^i
    RationalFunction as_function() const {
        RationalFunction out;
        for (int i = 2; i <= v; ++i) {
            const SurdNumber& a = terms[static_cast<std::size_t>(i - 2)];
            out += RationalFunction(Polynomial(a), Polynomial::linear(pole).pow(static_cast<unsigned>(i)));
        }
        return out;
    }
};

struct SqrtPartAtInfinity {
    int v = 0;
    std::vector<SurdNumber> terms; // a_0..a_v, coefficient of x^i at index i
    SurdNumber leading;            // a_v
    SurdNumber b_correction;

    Polynomial as_polynomial() const { return Polynomial(terms); }
};

/// First `count` coefficients of the power series n(t)/d(t) at t = 0; d(0) != 0.
inline std::vector<SurdNumber> series_quotient(const Polynomial& n, const Polynomial& d, int count) {
    std::vector<SurdNumber> out(static_cast<std::size_t>(count));
    SurdNumber d0_inv = d.coeff(0).inverse();
    for (int k = 0; k < count; ++k) {
        SurdNumber acc = n.coeff(k);
        for (int j = 1; j <= k && j <= d.degree(); ++j) acc -= d.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    return out;
}

/// s with s^2 = u as power series, given u_0..u_{m-1}; s_0 is the principal sqrt of u_0.
inline std::vector<SurdNumber> series_sqrt(const std::vector<SurdNumber>& u) {
    std::vector<SurdNumber> s(u.size());
    if (u.empty()) return s;
    s[0] = SurdNumber::sqrt(u[0].as_rational());
    SurdNumber two_s0_inv = (s[0] * SurdNumber(2)).inverse();
    for (std::size_t k = 1; k < u.size(); ++k) {
        SurdNumber acc = u[k];
        for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = acc * two_s0_inv;
    }
    return s;
}

inline int pole_order(const RationalFunction& r, const Rational& c) {
    if (r.is_zero()) return 0;
    return r.den().root_multiplicity(c);
}

/// Taylor coefficients u_0..u_{count-1} at c of (x-c)^N r, N the pole order.
inline std::vector<SurdNumber> regular_part_at(const RationalFunction& r, const Rational& c, int order, int count) {
    Polynomial ds = r.den().shift(c);
    std::vector<SurdNumber> q;
    for (int k = order; k <= ds.degree(); ++k) q.push_back(ds.coeff(k));
    return series_quotient(r.num().shift(c), Polynomial(q), count);
}

/// b_1..b_N of the principal part of r at the pole c (N the pole order), padded
/// with zeros up to `upto` entries when upto > N.
inline std::vector<SurdNumber> laurent_coefficients(const RationalFunction& r, const Rational& c, int upto = 0) {
    int n = pole_order(r, c);
    if (n == 0) throw NotAPole("no pole at " + c.to_string());
    auto b = principal_part(r.num(), r.den(), c, n);
    if (upto > n) b.resize(static_cast<std::size_t>(upto));
    return b;
}

inline SqrtPartAtPole sqrt_part_at_pole(const RationalFunction& r, const Rational& c, int order) {
    if (order < 4 || order % 2 != 0) throw InvalidArgument("sqrt_part_at_pole: order must be even and >= 4");
    if (pole_order(r, c) != order)
        throw InvalidArgument("sqrt_part_at_pole: pole at " + c.to_string() + " is not of order " + std::to_string(order));
    const int v = order / 2;
    auto u = regular_part_at(r, c, order, v);
    auto s = series_sqrt(u);
    SqrtPartAtPole out;
    out.pole = c;
    out.v = v;
    for (int i = 2; i <= v; ++i) out.terms.push_back(s[static_cast<std::size_t>(v - i)]);
    out.leading = s[0];
    // 1/(x-c)^{v+1} in r is u_{v-1}; in ([sqrt r]_c)^2 it collects s_k s_l with k+l = v-1, k,l <= v-2.
    SurdNumber sq;
    for (int k = 0; k <= v - 2; ++k) {
        int l = v - 1 - k;
        if (l <= v - 2) sq += s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(l)];
    }
    out.b_correction = u[static_cast<std::size_t>(v - 1)] - sq;
    return out;
}

/// Expansion of r at infinity: w_j with r = sum_j w_j x^{deg num - deg den - j}.
inline std::vector<SurdNumber> expansion_at_infinity(const RationalFunction& r, int count) {
    if (r.is_zero()) return std::vector<SurdNumber>(static_cast<std::size_t>(count));
    return series_quotient(r.num().reversed(r.num().degree()), r.den().reversed(r.den().degree()), count);
}

/// Coefficient of x^k in the expansion of r at infinity.
inline SurdNumber coefficient_at_infinity(const RationalFunction& r, int k) {
    if (r.is_zero()) return {};
    int top = r.num().degree() - r.den().degree();
    int j = top - k;
    if (j < 0) return {};
    return expansion_at_infinity(r, j + 1)[static_cast<std::size_t>(j)];
}

inline SqrtPartAtInfinity sqrt_part_at_infinity(const RationalFunction& r, int o_inf) {
    if (o_inf > 0 || o_inf % 2 != 0) throw InvalidArgument("sqrt_part_at_infinity: order at infinity must be even and <= 0");
    if (r.is_zero() || r.order_at_infinity() != o_inf)
        throw InvalidArgument("sqrt_part_at_infinity: order at infinity mismatch");
    const int v = -o_inf / 2;
    auto u = expansion_at_infinity(r, v + 2);
    auto s = series_sqrt(std::vector<SurdNumber>(u.begin(), u.begin() + v + 1));
    SqrtPartAtInfinity out;
    out.v = v;
    out.terms.resize(static_cast<std::size_t>(v + 1));
    for (int i = 0; i <= v; ++i) out.terms[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(v - i)];
    out.leading = s[0];
    // x^{v-1} in r is u_{v+1}; in ([sqrt r]_inf)^2 it collects s_k s_l with k+l = v+1, k,l <= v.
    SurdNumber sq;
    for (int k = 1; k <= v; ++k) sq += s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(v + 1 - k)];
    out.b_correction = u[static_cast<std::size_t>(v + 1)] - sq;
    return out;
}

} // namespace kovacic
