#include "latcell/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace latcell {

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw input_error("rational with zero denominator: " + s);
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational: '" + s + "'");
  }
}

std::string rational_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rational_approx(double x, std::int64_t denom_pow2) {
  if (!std::isfinite(x)) throw input_error("cannot approximate non-finite value");
  const double scaled = x * static_cast<double>(denom_pow2);
  if (std::abs(scaled) > 9.0e18)
    throw input_error("value too large for rational approximation");
  Int num(static_cast<long long>(std::llround(scaled)));
  return Rat(num) / Rat(Int(denom_pow2));
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

IntVec primitive_integer_vector(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return w;  // zero vector
  for (Int& x : w) x /= g;
  return w;
}

}  // namespace latcell
