#pragma once

#include <string>

#include "kovacic/ratfun.hpp"

namespace kovacic {

/// A + B*sqrt(L) with A, B rational functions and L a squarefree polynomial.
/// L = 1 (and B = 0) encodes a plain rational function.
struct SurdFunction {
    RationalFunction A;
    RationalFunction B;
    Polynomial L = 1;

    SurdFunction() = default;
    SurdFunction(RationalFunction a) : A(std::move(a)) {} // NOLINT(google-explicit-constructor)
    SurdFunction(RationalFunction a, RationalFunction b, Polynomial l) : A(std::move(a)), B(std::move(b)), L(std::move(l)) {
        if (L.degree() <= 0) {
            if (!B.is_zero()) A += B * RationalFunction(SurdNumber::sqrt(L.leading().as_rational()));
            B = RationalFunction();
            L = 1;
        }
    }

    bool is_rational() const { return B.is_zero(); }

    SurdFunction operator+(const RationalFunction& f) const {
        SurdFunction out = *this;
        out.A += f;
        return out;
    }

    /// (A + B sqrt L)' = A' + (B' + B L'/(2L)) sqrt L
    SurdFunction derivative() const {
        SurdFunction out;
        out.A = A.derivative();
        if (!B.is_zero()) {
            out.B = B.derivative() + B * RationalFunction(L.derivative(), L * SurdNumber(2));
            out.L = L;
        }
        return out;
    }

    /// Square: A^2 + B^2 L + 2AB sqrt L
    SurdFunction squared() const {
        SurdFunction out;
        out.A = A * A + B * B * RationalFunction(L);
        if (!B.is_zero()) {
            out.B = A * B * RationalFunction(2);
            out.L = L;
        }
        return out;
    }

    friend SurdFunction operator+(const SurdFunction& a, const SurdFunction& b) {
        SurdFunction out;
        out.A = a.A + b.A;
        if (!a.B.is_zero() && !b.B.is_zero() && !(a.L == b.L))
            throw InvalidArgument("adding surd functions with different radicands");
        out.B = a.B + b.B;
        out.L = a.B.is_zero() ? b.L : a.L;
        if (out.B.is_zero()) out.L = 1;
        return out;
    }

    friend SurdFunction operator*(const RationalFunction& f, const SurdFunction& s) {
        SurdFunction out;
        out.A = f * s.A;
        out.B = f * s.B;
        out.L = out.B.is_zero() ? Polynomial(1) : s.L;
        return out;
    }

    bool is_zero() const { return A.is_zero() && B.is_zero(); }

    std::string to_string() const {
        if (B.is_zero()) return A.to_string();
        std::string b = B.to_string();
        std::string rad = "sqrt(" + L.to_string() + ")";
        std::string surd = (b == "1") ? rad : "(" + b + ")*" + rad;
        if (A.is_zero()) return surd;
        return A.to_string() + "+" + surd;
    }
};

/// W' + W^2 - r == 0 with rational and surd parts checked separately.
inline bool riccati_verify(const SurdFunction& w, const RationalFunction& r) {
    SurdFunction lhs = w.derivative() + w.squared();
    return (lhs.A - r).is_zero() && lhs.B.is_zero();
}

/// A*(W' + W^2) + B*W + C == 0 for W the logarithmic derivative of y.
inline bool ode_log_derivative_verify(const SurdFunction& w, const RationalFunction& A, const RationalFunction& B,
                                      const RationalFunction& C) {
    SurdFunction lhs = A * (w.derivative() + w.squared()) + B * w;
    lhs.A += C;
    return lhs.is_zero();
}

struct OmegaCandidate {
    SurdFunction omega;
    int case_id = 0;
    int n = 0;
    int d = 0;
    std::string provenance;
};

} // namespace kovacic
