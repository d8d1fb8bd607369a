// Exact scalar types and small helpers shared across the library.
//
// Everything in this library is exact: coefficients are rationals
// (boost::multiprecision::cpp_rational) or, where an identity is
// homogeneous and denominators can be cleared, big integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <stdexcept>
#include <string>

namespace jpt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

[[noreturn]] inline void bad_input(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

// Exact integer division; aborts if the quotient is not integral.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) fail("exact_div: " + a.str() + " not divisible by " + b.str());
  return q;
}

inline long long to_ll(const Int& n) {
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min())
    fail("integer out of range: " + n.str());
  return static_cast<long long>(n);
}

// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    bad_input("not a rational: '" + s + "'");
  }
}

// Deterministic sampling for the property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Small integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  Int small_int() { return Int(uniform(-9, 9)); }

  Rat small_rat() {
    return Rat(Int(uniform(-9, 9)), Int(uniform(1, 3)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace jpt
