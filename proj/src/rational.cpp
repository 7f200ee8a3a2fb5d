#include "bspec/rational.hpp"

#include <cctype>

namespace bspec {

std::string format_rational(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<Rational> parse_rational(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view n = s.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d)) return std::nullopt;
  boost::multiprecision::cpp_int num{std::string(n)}, den{std::string(d)};
  if (den == 0) return std::nullopt;
  Rational q(num, den);
  return neg ? Rational(-q) : q;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Rational min_q(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max_q(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow2_neg(unsigned n) {
  boost::multiprecision::cpp_int d = 1;
  d <<= n;
  return Rational(1, d);
}

std::string format_values(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + "]";
}

}  // namespace bspec
