#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"
#include "kovacic/rational.hpp"

namespace kovacic {

/*
 * SurdNumber: exact value q0 + sum_j qj * sqrt(mj).
 *
 * The radicands mj are squarefree integers outside {0, 1}; negative radicands
 * encode complex values, sqrt(-m) = i*sqrt(m). With this convention
 *
 *     sqrt(a) * sqrt(b) = i^[a<0] * i^[b<0] * sqrt(|a| |b|)
 *
 * and |a||b| = g^2 * m with g = gcd(a, b), m squarefree. The set
 * { sqrt(m) : m squarefree } is a Q-basis of the multiquadratic field, so the
 * sorted term list is a canonical form and field-wise equality is value
 * equality.
 */
class SurdNumber {
public:
    struct Term {
        Rational coefficient;
        Integer radicand;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SurdNumber() = default;
    SurdNumber(int v) : rational_(v) {}              // NOLINT(google-explicit-constructor)
    SurdNumber(long v) : rational_(v) {}             // NOLINT(google-explicit-constructor)
    SurdNumber(Rational v) : rational_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    SurdNumber(const Integer& v) : rational_(v) {}   // NOLINT(google-explicit-constructor)

    /// coefficient * sqrt(radicand) for an arbitrary nonzero integer radicand.
    static SurdNumber surd(const Rational& coefficient, const Integer& radicand) {
        if (coefficient.is_zero() || radicand == 0) return {};
        auto [square, free] = squarefree_split(radicand);
        Rational c = coefficient * Rational(square);
        if (free == 1 && radicand > 0) return SurdNumber(c);
        SurdNumber out;
        Integer m = radicand < 0 ? Integer(-free) : free;
        out.terms_.push_back({c, m});
        return out;
    }

    /// Exact square root of a rational, sqrt(p/q) = sqrt(p*q)/q; the principal
    /// branch for negative arguments is i*sqrt(|v|).
    static SurdNumber sqrt(const Rational& v) {
        if (v.is_zero()) return {};
        Integer pq = v.numerator() * v.denominator();
        return surd(Rational(Integer(1), v.denominator()), pq);
    }

    const Rational& rational_part() const { return rational_; }
    const std::vector<Term>& surd_terms() const { return terms_; }

    bool is_zero() const { return rational_.is_zero() && terms_.empty(); }
    bool is_rational() const { return terms_.empty(); }
    bool is_one() const { return terms_.empty() && rational_.is_one(); }

    /// Rational value; throws if surd terms are present.
    const Rational& as_rational() const {
        if (!terms_.empty()) throw InvalidArgument("surd number is not rational: " + to_string());
        return rational_;
    }

    SurdNumber operator-() const {
        SurdNumber out = *this;
        out.rational_ = -out.rational_;
        for (auto& t : out.terms_) t.coefficient = -t.coefficient;
        return out;
    }

    SurdNumber& operator+=(const SurdNumber& o) {
        rational_ += o.rational_;
        if (o.terms_.empty()) return *this;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
                merged.push_back(*a++);
            } else if (a == terms_.end() || b->radicand < a->radicand) {
                merged.push_back(*b++);
            } else {
                Rational c = a->coefficient + b->coefficient;
                if (!c.is_zero()) merged.push_back({c, a->radicand});
                ++a;
                ++b;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    SurdNumber& operator-=(const SurdNumber& o) { return *this += -o; }

    SurdNumber& operator*=(const SurdNumber& o) {
        if (terms_.empty() && o.terms_.empty()) {
            rational_ *= o.rational_;
            return *this;
        }
        std::map<Integer, Rational> acc;
        auto add = [&acc](const Integer& m, const Rational& c) {
            if (c.is_zero()) return;
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second += c;
        };
        add(1, rational_ * o.rational_);
        for (const auto& t : terms_) add(t.radicand, t.coefficient * o.rational_);
        for (const auto& t : o.terms_) add(t.radicand, t.coefficient * rational_);
        for (const auto& s : terms_) {
            for (const auto& t : o.terms_) {
                auto [factor, m] = multiply_radicands(s.radicand, t.radicand);
                add(m, s.coefficient * t.coefficient * factor);
            }
        }
        rational_ = Rational();
        terms_.clear();
        for (const auto& [m, c] : acc) {
            if (c.is_zero()) continue;
            if (m == 1) rational_ = c;
            else terms_.push_back({c, m});
        }
        return *this;
    }

    SurdNumber& operator/=(const SurdNumber& o) { return *this *= o.inverse(); }

    friend SurdNumber operator+(SurdNumber a, const SurdNumber& b) { return a += b; }
    friend SurdNumber operator-(SurdNumber a, const SurdNumber& b) { return a -= b; }
    friend SurdNumber operator*(SurdNumber a, const SurdNumber& b) { return a *= b; }
    friend SurdNumber operator/(SurdNumber a, const SurdNumber& b) { return a /= b; }

    friend bool operator==(const SurdNumber& a, const SurdNumber& b) {
        return a.rational_ == b.rational_ && a.terms_ == b.terms_;
    }

    /// Total order on the canonical representation; used only for deterministic sorting.
    friend bool canonical_less(const SurdNumber& a, const SurdNumber& b) {
        if (a.rational_ != b.rational_) return a.rational_ < b.rational_;
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].radicand != b.terms_[i].radicand)
                return a.terms_[i].radicand < b.terms_[i].radicand;
            if (a.terms_[i].coefficient != b.terms_[i].coefficient)
                return a.terms_[i].coefficient < b.terms_[i].coefficient;
        }
        return false;
    }

    /// Image under the field automorphism that negates sqrt(g) for the
    /// generator g (a prime, or -1 for complex conjugation).
    SurdNumber conjugate_by(const Integer& generator) const {
        SurdNumber out = *this;
        for (auto& t : out.terms_) {
            bool flips = generator == -1 ? t.radicand < 0 : (t.radicand % generator == 0);
            if (flips) t.coefficient = -t.coefficient;
        }
        return out;
    }

    /// Field inverse. The product of conjugates over every generator that
    /// occurs in the radicands is the norm, a nonzero rational.
    SurdNumber inverse() const {
        if (is_zero()) throw DivisionByZero("surd number inverse of zero");
        if (terms_.empty()) return SurdNumber(rational_.inverse());
        SurdNumber current = *this;
        SurdNumber cofactor = 1;
        for (const auto& g : generators()) {
            SurdNumber conj = current.conjugate_by(g);
            if (conj == current) continue;
            cofactor *= conj;
            current *= conj;
        }
        return cofactor * SurdNumber(current.as_rational().inverse());
    }

    /// Generators (primes and possibly -1) of the field spanned by the radicands.
    std::vector<Integer> generators() const {
        std::set<Integer> gens;
        for (const auto& t : terms_) {
            if (t.radicand < 0) gens.insert(Integer(-1));
            for (const auto& [p, e] : factor_integer(t.radicand)) gens.insert(p);
        }
        return {gens.begin(), gens.end()};
    }

    SurdNumber pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        SurdNumber result = 1;
        SurdNumber base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Expression text in the solver grammar, e.g. "1/2+3/2*sqrt(5)" or "-sqrt(-3)".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        auto append = [&out](const Rational& c, const std::string& unit) {
            bool negative = c.sign() < 0;
            Rational mag = c.abs();
            if (!out.empty()) out += negative ? "-" : "+";
            else if (negative) out += "-";
            if (unit.empty()) out += mag.to_string();
            else if (mag.is_one()) out += unit;
            else out += mag.to_string() + "*" + unit;
        };
        if (!rational_.is_zero()) append(rational_, "");
        for (const auto& t : terms_) append(t.coefficient, "sqrt(" + t.radicand.get_str() + ")");
        return out;
    }

    /// Number of printed summands; callers parenthesize when it exceeds one.
    std::size_t summand_count() const { return (rational_.is_zero() ? 0 : 1) + terms_.size(); }

    std::size_t hash() const {
        std::size_t h = rational_.hash();
        for (const auto& t : terms_) h = h * 1000003u ^ t.coefficient.hash() ^ std::hash<std::string>{}(t.radicand.get_str());
        return h;
    }

    friend std::ostream& operator<<(std::ostream& os, const SurdNumber& s) { return os << s.to_string(); }

private:
    /// sqrt(a)*sqrt(b) = factor * sqrt(m) with m squarefree (m may be 1).
    static std::pair<Rational, Integer> multiply_radicands(const Integer& a, const Integer& b) {
        Integer abs_a = integer_abs(a);
        Integer abs_b = integer_abs(b);
        Integer g = integer_gcd(abs_a, abs_b);
        Integer m = (abs_a / g) * (abs_b / g);
        bool neg_a = a < 0;
        bool neg_b = b < 0;
        Rational factor(g);
        if (neg_a && neg_b) return {-factor, m};
        if (neg_a || neg_b) return {factor, Integer(-m)};
        return {factor, m};
    }

    Rational rational_;
    std::vector<Term> terms_;
};

/// Inverse with the contract used by linear solves: raises DivisionByZero for 0.
inline SurdNumber surd_invert(const SurdNumber& n) { return n.inverse(); }

} // namespace kovacic

template <>
struct std::hash<kovacic::SurdNumber> {
    std::size_t operator()(const kovacic::SurdNumber& s) const noexcept { return s.hash(); }
};
