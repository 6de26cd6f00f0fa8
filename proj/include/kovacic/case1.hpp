#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "kovacic/ansatz.hpp"
#include "kovacic/normalize.hpp"
#include "kovacic/omega.hpp"
#include "kovacic/series.hpp"

namespace kovacic {

struct PoleDataCase1 {
    Rational pole;
    int order = 0;
    RationalFunction sqrt_part;
    SurdNumber alpha_plus;
    SurdNumber alpha_minus;
};

struct InfinityDataCase1 {
    RationalFunction sqrt_part;
    SurdNumber alpha_plus;
    SurdNumber alpha_minus;
};

struct SignFamily {
    int sign_at_infinity = 1;
    std::vector<int> sign_at_pole; // parallel to the pole list
    int d = 0;
    friend bool operator==(const SignFamily&, const SignFamily&) = default;
};

/// 1/2 +- 1/2 sqrt(1 + 4b)
inline std::pair<SurdNumber, SurdNumber> half_plus_minus_root(const Rational& b) {
    SurdNumber root = SurdNumber::sqrt(Rational(1) + Rational(4) * b) * SurdNumber(Rational(1, 2));
    SurdNumber half = Rational(1, 2);
    return {half + root, half - root};
}

inline PoleDataCase1 pole_data_case1(const RationalFunction& r, const Pole& pole) {
    PoleDataCase1 out;
    out.pole = pole.location;
    out.order = pole.order;
    if (pole.order == 1) {
        out.alpha_plus = 1;
        out.alpha_minus = 1;
    } else if (pole.order == 2) {
        auto b = laurent_coefficients(r, pole.location);
        auto [ap, am] = half_plus_minus_root(b[1].as_rational());
        out.alpha_plus = ap;
        out.alpha_minus = am;
    } else if (pole.order % 2 == 0) {
        auto sp = sqrt_part_at_pole(r, pole.location, pole.order);
        out.sqrt_part = sp.as_function();
        SurdNumber ratio = sp.b_correction / sp.leading;
        SurdNumber v(sp.v);
        out.alpha_plus = (ratio + v) * SurdNumber(Rational(1, 2));
        out.alpha_minus = (-ratio + v) * SurdNumber(Rational(1, 2));
    } else {
        throw InvalidArgument("case 1: pole of odd order " + std::to_string(pole.order) + " at " + pole.location.to_string());
    }
    return out;
}

inline InfinityDataCase1 infinity_data_case1(const RationalFunction& r, int o_inf) {
    InfinityDataCase1 out;
    if (o_inf > 2) {
        out.alpha_plus = 0;
        out.alpha_minus = 1;
    } else if (o_inf == 2) {
        Rational b = (r.num().leading() / r.den().leading()).as_rational();
        auto [ap, am] = half_plus_minus_root(b);
        out.alpha_plus = ap;
        out.alpha_minus = am;
    } else if (o_inf % 2 == 0) {
        auto sp = sqrt_part_at_infinity(r, o_inf);
        out.sqrt_part = RationalFunction(sp.as_polynomial());
        SurdNumber ratio = sp.b_correction / sp.leading;
        SurdNumber v(sp.v);
        out.alpha_plus = (ratio - v) * SurdNumber(Rational(1, 2));
        out.alpha_minus = (-ratio - v) * SurdNumber(Rational(1, 2));
    } else {
        throw InvalidArgument("case 1: odd order at infinity " + std::to_string(o_inf));
    }
    return out;
}

/// Non-negative integer d for a sign assignment, or nullopt.
inline std::optional<int> family_degree(const std::vector<PoleDataCase1>& poles, const InfinityDataCase1& inf,
                                        int s_inf, const std::vector<int>& s_poles) {
    SurdNumber d = s_inf > 0 ? inf.alpha_plus : inf.alpha_minus;
    for (std::size_t i = 0; i < poles.size(); ++i) d -= s_poles[i] > 0 ? poles[i].alpha_plus : poles[i].alpha_minus;
    if (!d.is_rational()) return std::nullopt;
    const Rational& q = d.rational_part();
    if (!q.is_integer() || q.sign() < 0) return std::nullopt;
    if (q.numerator() > Integer(1000000)) return std::nullopt;
    return static_cast<int>(q.numerator().get_si());
}

/// All sign families with a non-negative integer d, ascending d, then sign vectors
/// compared lexicographically (infinity first, then poles; -1 before +1).
inline std::vector<SignFamily> d_candidates_case1(const std::vector<PoleDataCase1>& poles, const InfinityDataCase1& inf) {
    std::vector<SignFamily> out;
    const std::size_t k = poles.size();
    const std::size_t total = std::size_t{1} << (k + 1);
    for (std::size_t mask = 0; mask < total; ++mask) {
        // bit (k - i) of mask set means "+" at position i, position 0 being infinity;
        // counting upward walks the lexicographic order.
        SignFamily f;
        f.sign_at_infinity = (mask >> k) & 1u ? 1 : -1;
        for (std::size_t i = 0; i < k; ++i) f.sign_at_pole.push_back((mask >> (k - 1 - i)) & 1u ? 1 : -1);
        auto d = family_degree(poles, inf, f.sign_at_infinity, f.sign_at_pole);
        if (!d) continue;
        f.d = *d;
        out.push_back(std::move(f));
    }
    std::stable_sort(out.begin(), out.end(), [](const SignFamily& a, const SignFamily& b) { return a.d < b.d; });
    return out;
}

inline RationalFunction build_omega_case1(const SignFamily& family, const std::vector<PoleDataCase1>& poles,
                                          const InfinityDataCase1& inf) {
    RationalFunction omega;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const auto& pd = poles[i];
        int s = family.sign_at_pole[i];
        const SurdNumber& alpha = s > 0 ? pd.alpha_plus : pd.alpha_minus;
        if (!pd.sqrt_part.is_zero()) omega += s > 0 ? pd.sqrt_part : -pd.sqrt_part;
        omega += RationalFunction(Polynomial(alpha), Polynomial::linear(pd.pole));
    }
    if (!inf.sqrt_part.is_zero()) omega += family.sign_at_infinity > 0 ? inf.sqrt_part : -inf.sqrt_part;
    return omega;
}

/// p'' + 2 omega p' + (omega' + omega^2 - r) p = 0 for monic p of degree d.
inline std::optional<Polynomial> solve_p_case1(const RationalFunction& omega, const RationalFunction& r, int d) {
    std::vector<RationalFunction> coeffs{omega.derivative() + omega * omega - r, omega * RationalFunction(2),
                                         RationalFunction(1)};
    return solve_monic_polynomial(coeffs, d);
}

} // namespace kovacic
