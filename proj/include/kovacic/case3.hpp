#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "kovacic/ansatz.hpp"
#include "kovacic/case2.hpp"
#include "kovacic/normalize.hpp"
#include "kovacic/omega.hpp"
#include "kovacic/series.hpp"

namespace kovacic {

struct Case3Context {
    int n = 4;
    int e_infinity = 0;
    std::vector<int> e_at_pole; // parallel to the pole list
    int d = 0;
    RationalFunction theta;
    Polynomial S = 1;
};

/// P_n, P_{n-1}, ..., P_{-1}; polys[k] holds P_{n-k}.
struct PSequence {
    int n = 0;
    std::vector<Polynomial> polys;

    const Polynomial& P(int i) const { return polys[static_cast<std::size_t>(n - i)]; }
};

struct MinPolyResult {
    std::vector<RationalFunction> coefficients; // coefficient of omega^i at index i
    std::optional<RationalFunction> rational_root;

    std::string to_string() const {
        std::string out;
        for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
            const auto& c = coefficients[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += "+";
            out += "(" + c.to_string() + ")";
            if (i > 0) out += "*omega" + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

/// Integer members of {6 + (12k/n) sqrt(1+4b) : k = -n/2..n/2}.
inline std::vector<int> case3_values(const Rational& b, int n) {
    std::set<int> vals;
    SurdNumber root = SurdNumber::sqrt(Rational(1) + Rational(4) * b);
    for (int k = -n / 2; k <= n / 2; ++k) {
        SurdNumber m = SurdNumber(6) + SurdNumber(Rational(12 * k, n)) * root;
        if (auto v = as_small_integer(m)) vals.insert(*v);
    }
    return {vals.begin(), vals.end()};
}

} // namespace detail

inline ESet e_set_case3(const RationalFunction& r, const Pole& pole, int n) {
    ESet out;
    out.location = pole.location;
    if (pole.order == 1) out.values = {12};
    else if (pole.order == 2) out.values = detail::case3_values(laurent_coefficients(r, pole.location)[1].as_rational(), n);
    else throw InvalidArgument("case 3: pole of order " + std::to_string(pole.order));
    return out;
}

/// b is the coefficient of 1/x^2 at infinity: lcoeff(s)/lcoeff(t) when O(inf) = 2, zero when O(inf) > 2.
inline ESet e_set_infinity_case3(const RationalFunction& r, int n) {
    ESet out;
    Rational b = coefficient_at_infinity(r, -2).as_rational();
    out.values = detail::case3_values(b, n);
    return out;
}

inline std::vector<Case3Context> d_theta_S_case3(const std::vector<ESet>& e_sets, const ESet& e_inf, int n,
                                                 const std::vector<Pole>& poles) {
    std::vector<Case3Context> out;
    Polynomial S = 1;
    for (const auto& p : poles) S *= Polynomial::linear(p.location);
    const std::size_t k = e_sets.size();
    std::vector<std::size_t> idx(k, 0);
    for (int ei : e_inf.values) {
        std::fill(idx.begin(), idx.end(), 0);
        bool done = false;
        while (!done) {
            long sum = 0;
            for (std::size_t i = 0; i < k; ++i) sum += e_sets[i].values[idx[i]];
            long scaled = static_cast<long>(n) * (ei - sum);
            if (scaled >= 0 && scaled % 12 == 0) {
                Case3Context ctx;
                ctx.n = n;
                ctx.e_infinity = ei;
                ctx.d = static_cast<int>(scaled / 12);
                ctx.S = S;
                for (std::size_t i = 0; i < k; ++i) {
                    int e = e_sets[i].values[idx[i]];
                    ctx.e_at_pole.push_back(e);
                    ctx.theta += RationalFunction(Polynomial(SurdNumber(Rational(n * e, 12))),
                                                  Polynomial::linear(poles[i].location));
                }
                out.push_back(std::move(ctx));
            }
            std::size_t pos = k;
            while (true) {
                if (pos == 0) {
                    done = true;
                    break;
                }
                --pos;
                if (++idx[pos] < e_sets[pos].values.size()) break;
                idx[pos] = 0;
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Case3Context& a, const Case3Context& b) { return a.d < b.d; });
    return out;
}

/// P_n = -p; P_{i-1} = -S P_i' + ((n-i) S' - S theta) P_i - (n-i)(i+1) S^2 r P_{i+1}.
inline PSequence p_sequence(const Polynomial& p, const Case3Context& ctx, const RationalFunction& r) {
    const int n = ctx.n;
    RationalFunction S(ctx.S);
    RationalFunction dS(ctx.S.derivative());
    RationalFunction s_theta = S * ctx.theta;
    RationalFunction s2r = S * S * r;
    if (!s_theta.is_polynomial() || !s2r.is_polynomial())
        throw InvalidArgument("p_sequence: S*theta and S^2*r must be polynomials");
    PSequence seq;
    seq.n = n;
    seq.polys.push_back(-p);
    Polynomial next; // P_{i+1}
    for (int i = n; i >= 0; --i) {
        const Polynomial& Pi = seq.polys.back();
        RationalFunction v = -(S * RationalFunction(Pi.derivative())) +
                             (dS * RationalFunction(n - i) - s_theta) * RationalFunction(Pi) -
                             RationalFunction((n - i) * (i + 1)) * s2r * RationalFunction(next);
        next = Pi;
        seq.polys.push_back(v.num() * v.den().leading().inverse());
    }
    return seq;
}

/// Monic p of degree ctx.d with P_{-1} = 0. The recurrence is linear in p, so
/// P_{-1} is a linear combination of the images of the monomials.
inline std::optional<Polynomial> solve_coeffs_case3(const Case3Context& ctx, const RationalFunction& r) {
    auto last = [&](const Polynomial& p) { return p_sequence(p, ctx, r).P(-1); };
    Polynomial target = last(Polynomial::monomial(1, static_cast<std::size_t>(ctx.d)));
    std::vector<Polynomial> basis;
    for (int k = 0; k < ctx.d; ++k) basis.push_back(last(Polynomial::monomial(1, static_cast<std::size_t>(k))));
    auto sol = solve_linear_combination(target, basis);
    if (!sol) return std::nullopt;
    std::vector<SurdNumber> c(*sol);
    c.push_back(1);
    return Polynomial(std::move(c));
}

inline Integer factorial(int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Integer binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// sum_{i=0}^{n} S^i P_i/(n-i)! omega^i, with a rational root when the polynomial
/// is a perfect n-th power c_n (omega - rho)^n.
inline MinPolyResult omega_min_poly(const PSequence& seq, const Case3Context& ctx) {
    const int n = seq.n;
    MinPolyResult out;
    Polynomial s_pow = 1;
    for (int i = 0; i <= n; ++i) {
        out.coefficients.emplace_back(seq.P(i) * s_pow * SurdNumber(Rational(Integer(1), factorial(n - i))));
        s_pow *= ctx.S;
    }
    const RationalFunction& cn = out.coefficients[static_cast<std::size_t>(n)];
    if (cn.is_zero()) return out;
    RationalFunction rho = -out.coefficients[static_cast<std::size_t>(n - 1)] / (cn * RationalFunction(n));
    RationalFunction minus_rho_pow = 1;
    for (int i = n; i >= 0; --i) {
        RationalFunction expected = cn * RationalFunction(Rational(binomial(n, i))) * minus_rho_pow;
        if (!(expected == out.coefficients[static_cast<std::size_t>(i)])) return out;
        minus_rho_pow *= -rho;
    }
    out.rational_root = rho;
    return out;
}

} // namespace kovacic
