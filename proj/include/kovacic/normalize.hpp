#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/factor.hpp"
#include "kovacic/ratfun.hpp"

namespace kovacic {

/// A y'' + B y' + C y = 0.
struct OdeInput {
    RationalFunction A;
    RationalFunction B;
    RationalFunction C;
    friend bool operator==(const OdeInput&, const OdeInput&) = default;
};

struct NormalForm {
    RationalFunction a; // B/A
    RationalFunction b; // C/A
    RationalFunction r; // a^2/4 + a'/2 - b
};

struct Pole {
    Rational location;
    int order = 0;
    friend bool operator==(const Pole&, const Pole&) = default;
};

struct PoleAnalysis {
    std::vector<Pole> poles;               // ascending by location
    std::optional<int> order_at_infinity;  // absent only for r = 0
};

struct CaseConditions {
    std::vector<int> possible; // subset of {1,2,3}, ascending

    bool allows(int k) const {
        for (int c : possible)
            if (c == k) return true;
        return false;
    }
};

inline NormalForm to_normal_form(const OdeInput& ode) {
    if (ode.A.is_zero()) throw InvalidArgument("leading coefficient A is identically zero");
    if (!ode.A.is_rational() || !ode.B.is_rational() || !ode.C.is_rational())
        throw InvalidArgument("ODE coefficients must have rational coefficients");
    NormalForm nf;
    nf.a = ode.B / ode.A;
    nf.b = ode.C / ode.A;
    nf.r = nf.a * nf.a * RationalFunction(Rational(1, 4)) + nf.a.derivative() * RationalFunction(Rational(1, 2)) - nf.b;
    return nf;
}

inline PoleAnalysis pole_analysis(const RationalFunction& r) {
    PoleAnalysis out;
    if (r.is_zero()) return out;
    out.order_at_infinity = r.order_at_infinity();
    if (r.den().degree() == 0) return out;
    auto fact = factor_linear(r.den());
    if (fact.residue.degree() > 0)
        throw UnsupportedPoles("poles at non-rational points (irreducible factor " + fact.residue.to_string() + ")");
    for (const auto& [c, m] : fact.roots) out.poles.push_back({c, m});
    return out;
}

inline CaseConditions necessary_cases(const PoleAnalysis& analysis) {
    CaseConditions out;
    if (!analysis.order_at_infinity) {
        out.possible = {1};
        return out;
    }
    const int o = *analysis.order_at_infinity;
    bool c1 = o >= 2 || o % 2 == 0;
    bool c2 = false;
    bool c3 = o >= 2;
    for (const auto& p : analysis.poles) {
        if (p.order != 1 && p.order % 2 != 0) c1 = false;
        if (p.order == 2 || (p.order > 2 && p.order % 2 == 1)) c2 = true;
        if (p.order > 2) c3 = false;
    }
    if (c1) out.possible.push_back(1);
    if (c2) out.possible.push_back(2);
    if (c3) out.possible.push_back(3);
    return out;
}

} // namespace kovacic
