#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "kovacic/ansatz.hpp"
#include "kovacic/normalize.hpp"
#include "kovacic/omega.hpp"
#include "kovacic/series.hpp"

namespace kovacic {

struct ESet {
    std::optional<Rational> location; // absent for infinity
    std::vector<int> values;          // ascending, distinct
};

struct EFamily {
    int e_infinity = 0;
    std::vector<int> e_at_pole; // parallel to the pole list
    int d = 0;
    friend bool operator==(const EFamily&, const EFamily&) = default;
};

struct EFamilyTheta {
    EFamily family;
    RationalFunction theta;
};

namespace detail {

inline std::optional<int> as_small_integer(const SurdNumber& s) {
    if (!s.is_rational() || !s.rational_part().is_integer()) return std::nullopt;
    const Integer& z = s.rational_part().numerator();
    if (z > Integer(1000000000) || z < Integer(-1000000000)) return std::nullopt;
    return static_cast<int>(z.get_si());
}

/// Integer members of {2, 2 +- 2 sqrt(1+4b)}.
inline std::vector<int> order_two_e_set(const Rational& b) {
    std::set<int> vals{2};
    SurdNumber root = SurdNumber::sqrt(Rational(1) + Rational(4) * b) * SurdNumber(2);
    for (const auto& cand : {SurdNumber(2) + root, SurdNumber(2) - root})
        if (auto v = as_small_integer(cand)) vals.insert(*v);
    return {vals.begin(), vals.end()};
}

inline Rational leading_ratio(const RationalFunction& r) {
    return (r.num().leading() / r.den().leading()).as_rational();
}

} // namespace detail

inline ESet e_set_case2(const RationalFunction& r, const Pole& pole) {
    ESet out;
    out.location = pole.location;
    if (pole.order == 1) out.values = {4};
    else if (pole.order == 2) out.values = detail::order_two_e_set(laurent_coefficients(r, pole.location)[1].as_rational());
    else out.values = {pole.order};
    return out;
}

inline ESet e_set_infinity_case2(const RationalFunction& r, int o_inf) {
    ESet out;
    if (o_inf > 2) out.values = {0, 2, 4};
    else if (o_inf == 2) out.values = detail::order_two_e_set(detail::leading_ratio(r));
    else out.values = {o_inf};
    return out;
}

/// Cartesian product of the e-choices with d = (e_inf - sum e_c)/2 a non-negative
/// integer; ascending d, ties in enumeration order (infinity slowest, ascending values).
inline std::vector<EFamilyTheta> d_theta_case2(const std::vector<ESet>& e_sets, const ESet& e_inf,
                                               const std::vector<Pole>& poles) {
    std::vector<EFamilyTheta> out;
    const std::size_t k = e_sets.size();
    std::vector<std::size_t> idx(k, 0);
    for (int ei : e_inf.values) {
        std::fill(idx.begin(), idx.end(), 0);
        bool done = false;
        while (!done) {
            long sum = 0;
            for (std::size_t i = 0; i < k; ++i) sum += e_sets[i].values[idx[i]];
            long twice_d = ei - sum;
            if (twice_d >= 0 && twice_d % 2 == 0) {
                EFamilyTheta f;
                f.family.e_infinity = ei;
                for (std::size_t i = 0; i < k; ++i) f.family.e_at_pole.push_back(e_sets[i].values[idx[i]]);
                f.family.d = static_cast<int>(twice_d / 2);
                for (std::size_t i = 0; i < k; ++i)
                    f.theta += RationalFunction(Polynomial(SurdNumber(Rational(f.family.e_at_pole[i], 2))),
                                                Polynomial::linear(poles[i].location));
                out.push_back(std::move(f));
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
    std::stable_sort(out.begin(), out.end(),
                     [](const EFamilyTheta& a, const EFamilyTheta& b) { return a.family.d < b.family.d; });
    return out;
}

/// p''' + 3 theta p'' + (3 theta^2 + 3 theta' - 4r) p' + (theta'' + 3 theta theta' + theta^3 - 4 r theta - 2 r') p = 0
inline std::optional<Polynomial> solve_p_case2(const RationalFunction& theta, const RationalFunction& r, int d) {
    RationalFunction t1 = theta.derivative();
    RationalFunction t2 = t1.derivative();
    RationalFunction three(3), four(4), two(2);
    std::vector<RationalFunction> coeffs{
        t2 + three * theta * t1 + theta * theta * theta - four * r * theta - two * r.derivative(),
        three * theta * theta + three * t1 - four * r,
        three * theta,
        RationalFunction(1),
    };
    return solve_monic_polynomial(coeffs, d);
}

/// sqrt of a rational function as B*sqrt(L) with L monic squarefree (L = 1 when
/// f is a perfect square). The leading constant's sign is absorbed into L when
/// that keeps the scalar square root real.
inline std::pair<RationalFunction, Polynomial> sqrt_rational_function(const RationalFunction& f) {
    if (f.is_zero()) return {RationalFunction(), Polynomial(1)};
    // sqrt(N/D) = sqrt(N D)/D
    Polynomial nd = f.num() * f.den();
    SurdNumber lc = nd.leading();
    if (!lc.is_rational()) throw InvalidArgument("sqrt_rational_function: surd leading coefficient");
    Polynomial h = 1;
    Polynomial l = 1;
    auto parts = squarefree_decomposition(nd);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const unsigned mult = static_cast<unsigned>(i + 1);
        h *= parts[i].pow(mult / 2);
        if (mult % 2 == 1) l *= parts[i];
    }
    Rational c = lc.as_rational();
    if (c.sign() < 0 && l.degree() > 0) {
        c = -c;
        l = -l;
    }
    RationalFunction b(h * SurdNumber::sqrt(c), f.den());
    return {b, l};
}

/// omega = phi/2 +- (1/2) sqrt(-phi^2 - 2 phi' + 4r), phi = theta + p'/p.
inline std::vector<SurdFunction> omega_case2(const RationalFunction& theta, const Polynomial& p, const RationalFunction& r) {
    RationalFunction phi = theta + RationalFunction(p.derivative(), p);
    RationalFunction disc = -(phi * phi) - phi.derivative() * RationalFunction(2) + r * RationalFunction(4);
    auto [b, l] = sqrt_rational_function(disc);
    RationalFunction half(Rational(1, 2));
    RationalFunction a = phi * half;
    RationalFunction bh = b * half;
    return {SurdFunction(a, bh, l), SurdFunction(a, -bh, l)};
}

} // namespace kovacic
