// Exact arithmetic carrier used throughout: GMP-backed rationals with value
// semantics (expression templates off so generic code behaves like a plain
// numeric type).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcell {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Thrown on malformed user input (bad file, bad argument, dimension mismatch).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an operation's mathematical precondition fails (e.g. polar of a
/// body without the origin in its interior). Carries a witness description.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  // C++ division truncates toward zero; fix up negatives.
  if (q * denominator(r) > numerator(r)) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int f = floor_rat(r);
  return (Rat(f) == r) ? f : f + 1;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q" or "p" (arbitrary precision). Rejects zero denominators.
Rat parse_rational(const std::string& s);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rat& r);

/// Nearest rational with the given power-of-two denominator.
Rat rational_approx(double x, std::int64_t denom_pow2 = 1u << 24);

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

/// Clears denominators and divides by the gcd; the leading nonzero entry keeps
/// its sign. Zero vectors stay zero.
IntVec primitive_integer_vector(const RatVec& v);

}  // namespace latcell
