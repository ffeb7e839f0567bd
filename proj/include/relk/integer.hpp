#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace relk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force scan would visit more elements than the configured cap.
class EnumerationBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings, or at different truncation levels.
class OwnerMismatch : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the class of rings the library can decide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Error("integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

/// Least non-negative residue of v modulo m (m > 0).
inline Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factors of n (without multiplicity), ascending.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace relk
