#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bspec {

using Rational = boost::multiprecision::cpp_rational;

// "3", "-1/2". Denominator is printed only when it is not 1.
std::string format_rational(const Rational& q);
std::optional<Rational> parse_rational(std::string_view s);

Rational abs_q(const Rational& q);
Rational min_q(const Rational& a, const Rational& b);
Rational max_q(const Rational& a, const Rational& b);
Rational pow2_neg(unsigned n);  // 2^-n

std::string format_values(const std::vector<Rational>& v);

}  // namespace bspec
