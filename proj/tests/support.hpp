#pragma once

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "kovacic.hpp"

namespace testing_support {

using namespace kovacic;

inline RationalFunction rf(const std::string& text) {
    auto f = kovacic::detail::to_linear_form(*parse_expression(text));
    return f.parts[0];
}

inline Polynomial poly(const std::string& text) {
    RationalFunction f = rf(text);
    if (!f.is_polynomial()) throw InvalidArgument("not a polynomial: " + text);
    return f.num();
}

inline Rational q(const std::string& text) { return Rational::parse(text); }

/// Two closed forms agree up to a constant factor iff their logarithmic derivatives agree.
inline ::testing::AssertionResult same_up_to_constant(const ClosedForm& y, const SurdFunction& expected_log_derivative) {
    SurdFunction w = y.log_derivative();
    if (w.A == expected_log_derivative.A && w.B == expected_log_derivative.B &&
        (w.B.is_zero() || w.L == expected_log_derivative.L))
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << y.to_string() << " has y'/y = " << w.to_string() << ", expected "
                                         << expected_log_derivative.to_string();
}

inline Rational random_rational(std::mt19937& gen, int range, int max_den) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(Integer(num(gen)), Integer(den(gen)));
}

inline Polynomial random_polynomial(std::mt19937& gen, int degree, int range = 9, int max_den = 4) {
    std::vector<SurdNumber> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(random_rational(gen, range, max_den));
    if (c.back().is_zero()) c.back() = SurdNumber(1);
    return Polynomial(std::move(c));
}

} // namespace testing_support
