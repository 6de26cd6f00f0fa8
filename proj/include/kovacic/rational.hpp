#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kovacic/errors.hpp"

namespace kovacic {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {} // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(Integer(std::to_string(v))) {} // NOLINT
    Rational(const Integer& v) : value_(v) {} // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.value_ = std::move(q);
        return r;
    }

    /// Accepts "n" or "n/d".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return from_mpq(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return from_mpq(::abs(value_)); }
    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return from_mpq(1 / value_);
    }

    Rational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    std::string to_string() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    std::size_t hash() const { return std::hash<std::string>{}(to_string()); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer integer_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer integer_abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer integer_sqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Prime factorization of |n| by trial division (n != 0). Radicands in this
/// domain are tiny, so no sieve is needed.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    n = integer_abs(n);
    if (n == 0) throw InvalidArgument("factor_integer: zero");
    Integer p = 2;
    while (p * p <= n) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

/// Writes |n| = square^2 * free with free squarefree; n != 0.
inline std::pair<Integer, Integer> squarefree_split(const Integer& n) {
    Integer square = 1;
    Integer free = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        for (unsigned i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 == 1) free *= p;
    }
    return {square, free};
}

/// All positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::vector<Integer> next;
        for (const auto& d : divs) {
            Integer pk = 1;
            for (unsigned i = 0; i <= e; ++i) {
                next.push_back(d * pk);
                pk *= p;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace kovacic

template <>
struct std::hash<kovacic::Rational> {
    std::size_t operator()(const kovacic::Rational& r) const noexcept { return r.hash(); }
};
