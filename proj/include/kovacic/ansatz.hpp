#pragma once

#include <optional>
#include <vector>

#include "kovacic/linsolve.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (exact_div(a, poly_gcd(a, b)) * b).monic();
}

/// Finds constants a_j with target + sum a_j basis[j] = 0 as a rational-function identity.
inline std::optional<std::vector<SurdNumber>> solve_rational_combination(const RationalFunction& target,
                                                                         const std::vector<RationalFunction>& basis) {
    Polynomial l = target.den();
    for (const auto& b : basis) l = poly_lcm(l, b.den());
    auto lift = [&l](const RationalFunction& f) { return f.num() * exact_div(l, f.den()); };
    std::vector<Polynomial> polys;
    polys.reserve(basis.size());
    for (const auto& b : basis) polys.push_back(lift(b));
    return solve_linear_combination(lift(target), polys);
}

/// Applies L = sum_j coeffs[j] * d^j/dx^j to a polynomial.
inline RationalFunction apply_operator(const std::vector<RationalFunction>& coeffs, const Polynomial& p) {
    RationalFunction out;
    Polynomial deriv = p;
    for (const auto& c : coeffs) {
        if (!c.is_zero() && !deriv.is_zero()) out += c * RationalFunction(deriv);
        deriv = deriv.derivative();
    }
    return out;
}

/// Monic p of degree d with L(p) = 0, or nullopt. The unknowns a_0..a_{d-1}
/// enter linearly, so the cleared-denominator identity is an exact linear system.
inline std::optional<Polynomial> solve_monic_polynomial(const std::vector<RationalFunction>& coeffs, int d) {
    std::vector<RationalFunction> basis;
    for (int k = 0; k < d; ++k) basis.push_back(apply_operator(coeffs, Polynomial::monomial(1, static_cast<std::size_t>(k))));
    RationalFunction target = apply_operator(coeffs, Polynomial::monomial(1, static_cast<std::size_t>(d)));
    auto sol = solve_rational_combination(target, basis);
    if (!sol) return std::nullopt;
    std::vector<SurdNumber> c(*sol);
    c.push_back(1);
    return Polynomial(std::move(c));
}

} // namespace kovacic
