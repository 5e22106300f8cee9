#include "twinpoly/arith.hpp"

#include <boost/multiprecision/integer.hpp>

namespace twinpoly {

Rational rational_from_string(const std::string& text) {
  auto bad = [&] { return ParseError("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den)) throw bad();
  Int d(den);
  if (d == 0) throw bad();
  return Rational(Int(num), d);
}

std::pair<IntVector, Int> clear_denominators(const RationalVector& v) {
  Int t = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    t = boost::multiprecision::lcm(t, denominator_of(v[i]));
  IntVector u(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    u[i] = numerator_of(v[i]) * (t / denominator_of(v[i]));
  return {std::move(u), t};
}

}  // namespace twinpoly
