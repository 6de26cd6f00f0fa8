#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kovacic/ansatz.hpp"
#include "kovacic/errors.hpp"
#include "kovacic/factor.hpp"
#include "kovacic/omega.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

inline std::string detail_log_term(const std::string& c, const std::string& arg) {
    if (c == "1") return "ln(" + arg + ")";
    if (c == "-1") return "-ln(" + arg + ")";
    return c + "*ln(" + arg + ")";
}

struct LogTerm {
    SurdNumber coefficient;
    Rational pole; // argument x - pole
};

/// rational_part + sum coefficient * ln(x - pole)
struct LogSum {
    RationalFunction rational_part;
    std::vector<LogTerm> log_terms;

    RationalFunction derivative() const {
        RationalFunction out = rational_part.derivative();
        for (const auto& t : log_terms) out += RationalFunction(Polynomial(t.coefficient), Polynomial::linear(t.pole));
        return out;
    }

    std::string to_string() const {
        std::string out = rational_part.is_zero() ? "" : rational_part.to_string();
        for (const auto& t : log_terms) {
            std::string c = t.coefficient.to_string();
            if (t.coefficient.summand_count() > 1) c = "(" + c + ")";
            std::string arg = Polynomial::linear(t.pole).to_string();
            std::string term = detail_log_term(c, arg);
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }
};

inline LogSum integrate_rational(const RationalFunction& f) {
    LogSum out;
    if (f.is_zero()) return out;
    auto pf = partial_fractions(f);
    const auto& poly = pf.polynomial_part;
    std::vector<SurdNumber> integ(static_cast<std::size_t>(poly.degree() + 2));
    for (int k = 0; k <= poly.degree(); ++k)
        integ[static_cast<std::size_t>(k + 1)] = poly.coeff(k) * SurdNumber(Rational(1, k + 1));
    out.rational_part = RationalFunction(Polynomial(std::move(integ)));
    for (const auto& t : pf.terms) {
        if (t.exponent == 1) {
            out.log_terms.push_back({t.coefficient, t.pole});
        } else {
            // b/(x-c)^k integrates to -b/((k-1)(x-c)^{k-1})
            SurdNumber c = -t.coefficient * SurdNumber(Rational(1, t.exponent - 1));
            out.rational_part += RationalFunction(Polynomial(c), Polynomial::linear(t.pole).pow(static_cast<unsigned>(t.exponent - 1)));
        }
    }
    return out;
}

/// Hermite/Horowitz reduction: integral of f = rational + integral of (R2/Q2), Q2 squarefree.
/// Returns the rational part and the remaining integrand.
inline std::pair<RationalFunction, RationalFunction> horowitz_reduce(const RationalFunction& f) {
    auto [quot, rem] = divmod(f.num(), f.den());
    std::vector<SurdNumber> integ(static_cast<std::size_t>(std::max(0, quot.degree() + 2)));
    for (int k = 0; k <= quot.degree(); ++k)
        integ[static_cast<std::size_t>(k + 1)] = quot.coeff(k) * SurdNumber(Rational(1, k + 1));
    RationalFunction poly_int(Polynomial(std::move(integ)));
    if (rem.is_zero()) return {poly_int, RationalFunction()};
    const Polynomial& Q = f.den();
    Polynomial Q1 = poly_gcd(Q, Q.derivative());
    Polynomial Q2 = exact_div(Q, Q1);
    Polynomial H = exact_div(Q1.derivative() * Q2, Q1);
    std::vector<Polynomial> basis;
    const int n1 = Q1.degree();
    const int n2 = Q2.degree();
    for (int j = 0; j < n1; ++j) {
        Polynomial uj = Polynomial::monomial(1, static_cast<std::size_t>(j));
        basis.push_back(uj.derivative() * Q2 - uj * H);
    }
    for (int j = 0; j < n2; ++j) basis.push_back(Polynomial::monomial(1, static_cast<std::size_t>(j)) * Q1);
    auto sol = solve_linear_combination(-rem, basis);
    if (!sol) throw InvalidArgument("horowitz_reduce: inconsistent system");
    std::vector<SurdNumber> r1(sol->begin(), sol->begin() + n1);
    std::vector<SurdNumber> r2(sol->begin() + n1, sol->end());
    return {poly_int + RationalFunction(Polynomial(r1), Q1), RationalFunction(Polynomial(r2), Q2)};
}

inline RationalFunction compose(const RationalFunction& f, const Polynomial& u) {
    return RationalFunction(f.num().compose(u), f.den().compose(u));
}

/// Base raised to an exact exponent; bases are primitive (integer content 1,
/// positive leading coefficient) or monic when they carry surds.
struct PowerFactor {
    Polynomial base;
    SurdNumber exponent;
};

/// exp(coefficient * sqrt(radicand))
struct SurdExp {
    RationalFunction coefficient;
    Polynomial radicand;
};

/*
 * constant * poly_factor * prod base^exponent * exp(exp_argument)
 *          * exp(coefficient*sqrt(radicand)) * exp(int(implicit_integrand))
 *
 * Values are defined up to a nonzero constant factor: normalization drops
 * constants such as 2^(1/2) that arise from making bases primitive.
 */
struct ClosedForm {
    SurdNumber constant = 1;
    Polynomial poly_factor = 1;
    std::vector<PowerFactor> power_factors;
    RationalFunction exp_argument;
    std::optional<SurdExp> surd_exp;
    std::optional<SurdFunction> implicit_integrand;

    bool is_explicit() const { return !implicit_integrand.has_value(); }

    /// y'/y as A + B sqrt(L).
    SurdFunction log_derivative() const {
        SurdFunction w(RationalFunction(poly_factor.derivative(), poly_factor));
        for (const auto& f : power_factors)
            w.A += RationalFunction(f.base.derivative() * f.exponent, f.base);
        w.A += exp_argument.derivative();
        if (surd_exp) {
            const auto& s = *surd_exp;
            w = w + SurdFunction(RationalFunction(), s.coefficient.derivative() +
                                     s.coefficient * RationalFunction(s.radicand.derivative(), s.radicand * SurdNumber(2)),
                                 s.radicand);
        }
        if (implicit_integrand) w = w + *implicit_integrand;
        return w;
    }

    ClosedForm& multiply(const ClosedForm& o) {
        constant *= o.constant;
        poly_factor *= o.poly_factor;
        power_factors.insert(power_factors.end(), o.power_factors.begin(), o.power_factors.end());
        exp_argument += o.exp_argument;
        if (o.surd_exp) {
            if (!surd_exp) surd_exp = o.surd_exp;
            else if (surd_exp->radicand == o.surd_exp->radicand) surd_exp->coefficient += o.surd_exp->coefficient;
            else throw InvalidArgument("closed form with two different surd exponentials");
            if (surd_exp->coefficient.is_zero()) surd_exp.reset();
        }
        if (o.implicit_integrand) implicit_integrand = implicit_integrand ? *implicit_integrand + *o.implicit_integrand : *o.implicit_integrand;
        simplify();
        return *this;
    }

    ClosedForm& multiply(const RationalFunction& f) {
        if (f.is_zero()) throw InvalidArgument("closed form multiplied by zero");
        poly_factor *= f.num();
        if (f.den().degree() > 0) power_factors.push_back({f.den(), SurdNumber(-1)});
        simplify();
        return *this;
    }

    /// y^k for an integer k.
    ClosedForm power(int k) const {
        ClosedForm out;
        out.constant = constant.pow(k);
        if (poly_factor.degree() > 0) out.power_factors.push_back({poly_factor, SurdNumber(k)});
        else out.constant *= poly_factor.leading().pow(k);
        for (const auto& f : power_factors) out.power_factors.push_back({f.base, f.exponent * SurdNumber(k)});
        out.exp_argument = exp_argument * RationalFunction(k);
        if (surd_exp) out.surd_exp = SurdExp{surd_exp->coefficient * RationalFunction(k), surd_exp->radicand};
        if (implicit_integrand) out.implicit_integrand = RationalFunction(k) * *implicit_integrand;
        out.simplify();
        return out;
    }

    /// Rational function value when every exponent is an integer and no exponential remains.
    std::optional<RationalFunction> as_rational_function() const {
        if (!exp_argument.is_zero() || surd_exp || implicit_integrand) return std::nullopt;
        RationalFunction out(Polynomial(poly_factor * constant));
        for (const auto& f : power_factors) {
            if (!f.exponent.is_rational() || !f.exponent.rational_part().is_integer()) return std::nullopt;
            out *= RationalFunction(f.base).pow(static_cast<int>(f.exponent.rational_part().numerator().get_si()));
        }
        return out;
    }

    void simplify();
    std::string to_string() const;
};

namespace detail {

/// Primitive representative of p: integer coefficients with content 1 and positive
/// leading coefficient when p is rational, monic otherwise. Returns (k, q) with p = k*q.
inline std::pair<SurdNumber, Polynomial> primitive_part(const Polynomial& p) {
    if (!p.is_rational()) return {p.leading(), p.monic()};
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) lcm = integer_lcm(lcm, c.rational_part().denominator());
    Integer g = 0;
    for (const auto& c : p.coefficients()) g = integer_gcd(g, (c.rational_part() * Rational(lcm)).numerator());
    Rational k(g, lcm);
    if (p.leading().rational_part().sign() < 0) k = -k;
    return {SurdNumber(k), p * SurdNumber(k.inverse())};
}

inline bool exponent_is_integer(const SurdNumber& e) { return e.is_rational() && e.rational_part().is_integer(); }

inline std::string paren_if_sum(const std::string& s, std::size_t summands) {
    return summands > 1 ? "(" + s + ")" : s;
}

inline std::string strip_outer_parens(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        if (depth == 0) return s; // first paren closes early
    }
    return s.substr(1, s.size() - 2);
}

inline std::string surd_factor(const SurdNumber& s) { return paren_if_sum(s.to_string(), s.summand_count()); }

inline std::string power_string(const Polynomial& base, const SurdNumber& e) {
    std::string b = base.to_string();
    bool compound = base.summand_count() > 1 || b.find('*') != std::string::npos || b.find('^') != std::string::npos;
    if (e.is_one()) return compound && base.summand_count() > 1 ? "(" + b + ")" : b;
    if (e == SurdNumber(Rational(1, 2))) return "sqrt(" + b + ")";
    std::string bb = compound ? "(" + b + ")" : b;
    if (exponent_is_integer(e)) return bb + "^" + e.to_string();
    return bb + "^(" + e.to_string() + ")";
}

inline std::string product_string(const std::string& coef, const std::string& unit) {
    if (coef == "1") return unit;
    if (coef == "-1") return "-" + unit;
    return coef + "*" + unit;
}

} // namespace detail

inline void ClosedForm::simplify() {
    if (poly_factor.is_zero()) throw InvalidArgument("closed form with zero polynomial factor");
    // Integer powers go through one canonical rational function so that common
    // factors cancel; the rest is split back into bases below.
    std::vector<PowerFactor> pending;
    RationalFunction integral_part(poly_factor);
    for (auto& f : power_factors) {
        if (detail::exponent_is_integer(f.exponent) && f.base.degree() >= 0) {
            auto k = f.exponent.rational_part().numerator();
            integral_part *= RationalFunction(f.base).pow(static_cast<int>(k.get_si()));
        } else {
            pending.push_back(std::move(f));
        }
    }
    power_factors.clear();
    poly_factor = 1;
    constant *= integral_part.num().leading();
    if (integral_part.num().degree() > 0) pending.push_back({integral_part.num().monic(), SurdNumber(1)});
    if (integral_part.den().degree() > 0) pending.push_back({integral_part.den(), SurdNumber(-1)});
    std::vector<PowerFactor> split;
    for (auto& f : pending) {
        if (f.exponent.is_zero() || f.base.degree() < 0) continue;
        if (f.base.degree() == 0) {
            if (detail::exponent_is_integer(f.exponent))
                constant *= f.base.leading().pow(static_cast<int>(f.exponent.rational_part().numerator().get_si()));
            continue;
        }
        if (f.base.is_rational() && f.base.degree() >= 2) {
            auto fact = factor_linear(f.base);
            for (const auto& [c, m] : fact.roots)
                split.push_back({Polynomial::linear(c), f.exponent * SurdNumber(m)});
            if (fact.residue.degree() > 0) {
                auto parts = squarefree_decomposition(fact.residue);
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (parts[i].degree() > 0) split.push_back({parts[i], f.exponent * SurdNumber(static_cast<long>(i + 1))});
            }
            if (detail::exponent_is_integer(f.exponent))
                constant *= f.base.leading().pow(static_cast<int>(f.exponent.rational_part().numerator().get_si()));
        } else {
            split.push_back(f);
        }
    }
    for (auto& f : split) {
        auto [k, prim] = detail::primitive_part(f.base);
        if (detail::exponent_is_integer(f.exponent))
            constant *= k.pow(static_cast<int>(f.exponent.rational_part().numerator().get_si()));
        bool merged = false;
        for (auto& g : power_factors) {
            if (g.base == prim) {
                g.exponent += f.exponent;
                merged = true;
                break;
            }
        }
        if (!merged) power_factors.push_back({prim, f.exponent});
    }
    std::erase_if(power_factors, [](const PowerFactor& f) { return f.exponent.is_zero(); });
    // Non-rational bases (surd coefficients) with integer exponent >= 1 fold back into the polynomial factor.
    std::vector<PowerFactor> kept;
    for (auto& f : power_factors) {
        if (!f.base.is_rational() && detail::exponent_is_integer(f.exponent) && f.exponent.rational_part().sign() > 0)
            poly_factor *= f.base.pow(static_cast<unsigned>(f.exponent.rational_part().numerator().get_ui()));
        else
            kept.push_back(std::move(f));
    }
    power_factors = std::move(kept);
    std::sort(power_factors.begin(), power_factors.end(), [](const PowerFactor& a, const PowerFactor& b) {
        if (a.base.degree() != b.base.degree()) return a.base.degree() < b.base.degree();
        return a.base.to_string() < b.base.to_string();
    });
    // exp(constant) is a constant factor.
    if (!exp_argument.is_zero()) {
        auto [q, rem] = divmod(exp_argument.num(), exp_argument.den());
        SurdNumber c0 = q.coeff(0);
        if (!c0.is_zero()) exp_argument -= RationalFunction(c0);
    }
    if (surd_exp && surd_exp->coefficient.is_zero()) surd_exp.reset();
}

inline std::string ClosedForm::to_string() const {
    std::vector<std::string> num;
    std::vector<std::string> den;
    const bool lone_poly = power_factors.empty() && exp_argument.is_zero() && !surd_exp && !implicit_integrand &&
                           constant.is_one();
    if (!(poly_factor == Polynomial(1)))
        num.push_back(lone_poly ? poly_factor.to_string()
                                : detail::paren_if_sum(poly_factor.to_string(), poly_factor.summand_count()));
    for (const auto& f : power_factors) {
        bool negative = f.exponent.is_rational() && f.exponent.rational_part().sign() < 0;
        if (negative) den.push_back(detail::power_string(f.base, -f.exponent));
        else num.push_back(detail::power_string(f.base, f.exponent));
    }
    if (!exp_argument.is_zero()) num.push_back("exp(" + exp_argument.to_string() + ")");
    if (surd_exp) {
        std::string c = surd_exp->coefficient.to_string();
        bool simple = surd_exp->coefficient.is_constant() && surd_exp->coefficient.constant_value().summand_count() == 1;
        std::string unit = "sqrt(" + surd_exp->radicand.to_string() + ")";
        num.push_back("exp(" + detail::product_string(simple ? c : "(" + c + ")", unit) + ")");
    }
    if (implicit_integrand) num.push_back("exp(int(" + implicit_integrand->to_string() + ",x))");
    std::string body;
    for (std::size_t i = 0; i < num.size(); ++i) body += (i ? "*" : "") + num[i];
    std::string c = constant.to_string();
    if (body.empty()) {
        body = detail::surd_factor(constant);
    } else if (c != "1") {
        body = detail::product_string(detail::surd_factor(constant), body);
    }
    if (den.empty()) return num.size() == 1 && c == "1" ? detail::strip_outer_parens(body) : body;
    std::string d;
    for (std::size_t i = 0; i < den.size(); ++i) d += (i ? "*" : "") + den[i];
    return body + "/" + (den.size() > 1 ? "(" + d + ")" : d);
}

/// exp(int(B*sqrt(L))) for linear L = alpha*x + beta. With u = sqrt(L) the integral
/// becomes int E(u) du with E even; an antiderivative free of logarithms is odd,
/// u*H(u^2), so the result is exp(H(L)*sqrt(L)).
inline std::optional<SurdExp> integrate_surd_term(const RationalFunction& B, const Polynomial& L) {
    if (L.degree() != 1 || B.is_zero()) return std::nullopt;
    const SurdNumber alpha = L.coeff(1);
    const SurdNumber beta = L.coeff(0);
    const SurdNumber inv_alpha = alpha.inverse();
    // x = (u^2 - beta)/alpha
    Polynomial x_of_u(std::vector<SurdNumber>{-beta * inv_alpha, SurdNumber(), inv_alpha});
    RationalFunction E = compose(B, x_of_u) * RationalFunction(Polynomial::monomial(SurdNumber(2) * inv_alpha, 2));
    auto [rat, rest] = horowitz_reduce(E);
    if (!rest.is_zero()) return std::nullopt;
    // odd part T(u) - T(-u) over 2
    Polynomial minus_u(std::vector<SurdNumber>{SurdNumber(), SurdNumber(-1)});
    RationalFunction odd = (rat - compose(rat, minus_u)) * RationalFunction(Rational(1, 2));
    if (odd.is_zero()) return std::nullopt;
    RationalFunction h_u2 = odd / RationalFunction::x(); // even in u
    auto even_coeffs = [](const Polynomial& p) {
        std::vector<SurdNumber> out;
        for (int k = 0; k <= p.degree(); k += 2) out.push_back(p.coeff(k));
        return Polynomial(std::move(out));
    };
    Polynomial hn = h_u2.num();
    Polynomial hd = h_u2.den();
    if (hd.degree() % 2 == 1) { // both odd
        hn = exact_div(hn, Polynomial::x());
        hd = exact_div(hd, Polynomial::x());
    }
    RationalFunction H(even_coeffs(hn), even_coeffs(hd));
    return SurdExp{compose(H, L), L};
}

namespace detail {

/// res(a, b) over the coefficient field, by the Euclidean recurrence.
inline SurdNumber resultant(Polynomial a, Polynomial b) {
    if (a.is_zero() || b.is_zero()) return {};
    SurdNumber acc = 1;
    while (true) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0) return acc * b.leading().pow(m);
        auto [q, r] = divmod(a, b);
        if (r.is_zero()) return {};
        if (m % 2 == 1 && n % 2 == 1) acc = -acc;
        acc *= b.leading().pow(m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

/// Rothstein-Trager for a proper R/Q with Q squarefree: int R/Q = sum c ln gcd(Q, R - c Q')
/// over the roots c of res_x(Q, R - t Q'). Only rational residues are handled.
inline std::optional<std::vector<PowerFactor>> log_part(const RationalFunction& f) {
    const Polynomial& Q = f.den();
    const Polynomial& R = f.num();
    const Polynomial dQ = Q.derivative();
    const int N = Q.degree();
    // degree <= N in t; interpolate through t = 0..N
    Polynomial res_t;
    for (int j = 0; j <= N; ++j) {
        SurdNumber v = resultant(Q, R - dQ * Polynomial(j));
        if (v.is_zero()) continue;
        Polynomial lagrange = 1;
        SurdNumber scale = 1;
        for (int k = 0; k <= N; ++k) {
            if (k == j) continue;
            lagrange *= Polynomial::linear(k);
            scale *= SurdNumber(j - k);
        }
        res_t += lagrange * (v * scale.inverse());
    }
    if (res_t.degree() <= 0 || !res_t.is_rational()) return std::nullopt;
    std::vector<PowerFactor> out;
    int covered = 0;
    for (const Rational& c : rational_roots(res_t)) {
        Polynomial g = poly_gcd(Q, R - dQ * Polynomial(c));
        if (g.degree() <= 0) continue;
        covered += g.degree();
        out.push_back({g, SurdNumber(c)});
    }
    if (covered != N) return std::nullopt;
    return out;
}

} // namespace detail

/// z = p * exp(int omega) with omega = A + B sqrt(L).
inline ClosedForm exp_of_integral(const SurdFunction& omega, const Polynomial& p) {
    ClosedForm out;
    out.poly_factor = p;
    SurdFunction leftover;
    try {
        LogSum ls = integrate_rational(omega.A);
        out.exp_argument = ls.rational_part;
        for (const auto& t : ls.log_terms) out.power_factors.push_back({Polynomial::linear(t.pole), t.coefficient});
    } catch (const UnsupportedPoles&) {
        auto [rat, rest] = horowitz_reduce(omega.A);
        out.exp_argument = rat;
        auto logs = rest.is_zero() ? std::nullopt : detail::log_part(rest);
        if (logs) out.power_factors.insert(out.power_factors.end(), logs->begin(), logs->end());
        else leftover.A = rest;
    }
    if (!omega.B.is_zero()) {
        auto se = integrate_surd_term(omega.B, omega.L);
        if (se) out.surd_exp = se;
        else leftover = leftover + SurdFunction(RationalFunction(), omega.B, omega.L);
    }
    if (!leftover.is_zero()) out.implicit_integrand = leftover;
    out.simplify();
    return out;
}

/// y1 = z * exp(-1/2 int a)
inline ClosedForm recover_y1(const ClosedForm& z, const RationalFunction& a) {
    ClosedForm out = z;
    out.multiply(exp_of_integral(SurdFunction(a * RationalFunction(Rational(-1, 2))), 1));
    return out;
}

struct RischConfig {
    int degree_slack = 2;
};

/// T with T' + g' T = R (so int R e^g = T e^g), or nullopt.
inline std::optional<RationalFunction> rational_risch(const RationalFunction& R, const RationalFunction& g,
                                                      RischConfig cfg = {}) {
    RationalFunction dg = g.derivative();
    if (dg.is_zero()) throw InvalidArgument("rational_risch: g must be non-constant");
    if (R.is_zero()) return RationalFunction();
    // Denominator bound: den(R) covers every pole T can have (order at c is at most
    // the order of R at c minus one).
    Polynomial dbound = R.den();
    int r_inf = R.num().degree() - R.den().degree();
    int g_inf = dg.num().degree() - dg.den().degree();
    int t_inf = g_inf >= 0 ? r_inf - g_inf : r_inf + 1;
    int n_deg = std::max(0, dbound.degree() + t_inf) + cfg.degree_slack;
    std::vector<RationalFunction> basis;
    for (int j = 0; j <= n_deg; ++j) {
        RationalFunction t(Polynomial::monomial(1, static_cast<std::size_t>(j)), dbound);
        basis.push_back(t.derivative() + dg * t);
    }
    auto sol = solve_rational_combination(-R, basis);
    if (!sol) return std::nullopt;
    RationalFunction T(Polynomial(*sol), dbound);
    if (!(T.derivative() + dg * T - R).is_zero()) return std::nullopt;
    return T;
}

struct SecondSolution {
    std::optional<ClosedForm> closed;
    std::string text;
};

/// y2 = y1 int exp(-int a)/y1^2 dx
inline SecondSolution second_solution(const ClosedForm& y1, const RationalFunction& a) {
    SecondSolution out;
    ClosedForm integrand = exp_of_integral(SurdFunction(-a), 1);
    integrand.multiply(y1.power(-2));
    std::string y1s = y1.to_string();
    std::string formula = "(" + y1s + ")*int(" + integrand.to_string() + ",x)";
    out.text = formula;
    if (!y1.is_explicit() || integrand.surd_exp || integrand.implicit_integrand) return out;
    RationalFunction g = integrand.exp_argument;
    ClosedForm rest = integrand;
    rest.exp_argument = RationalFunction();
    auto R = rest.as_rational_function();
    if (!R) return out;
    try {
        if (g.is_zero()) {
            RationalFunction rational_part;
            std::string logs;
            try {
                LogSum ls = integrate_rational(*R);
                rational_part = ls.rational_part;
                if (!ls.log_terms.empty()) logs = ls.to_string();
            } catch (const UnsupportedPoles&) {
                auto [rat, rest] = horowitz_reduce(*R);
                rational_part = rat;
                if (!rest.is_zero()) {
                    auto lp = detail::log_part(rest);
                    if (!lp) return out;
                    logs = rat.is_zero() ? "" : rat.to_string();
                    for (const auto& f : *lp) {
                        std::string term = detail_log_term(detail::surd_factor(f.exponent), f.base.to_string());
                        if (!logs.empty() && term[0] != '-') logs += "+";
                        logs += term;
                    }
                }
            }
            if (!logs.empty()) {
                out.text = "(" + y1s + ")*(" + logs + ")";
                return out;
            }
            ClosedForm y2 = y1;
            y2.multiply(rational_part);
            out.closed = y2;
        } else {
            auto T = rational_risch(*R, g);
            if (!T || T->is_zero()) return out;
            ClosedForm y2 = y1;
            ClosedForm eg;
            eg.exp_argument = g;
            y2.multiply(eg);
            y2.multiply(*T);
            out.closed = y2;
        }
    } catch (const UnsupportedPoles&) {
        return out;
    }
    out.text = out.closed->to_string();
    return out;
}

} // namespace kovacic
