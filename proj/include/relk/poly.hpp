#pragma once

// Polynomials truncated at a fixed degree D, over any commutative ring type
// T with +, -, * and equality. Used as the coefficient ring B[t]/(t^{D+1}).

#include "relk/integer.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace relk {

template <class T>
class TruncPoly {
 public:
  TruncPoly() = default;

  /// The zero polynomial with coefficients in the ring of `zero`.
  TruncPoly(const T& zero, std::size_t degree) : c_(degree + 1, zero) {}

  static TruncPoly constant(const T& value, std::size_t degree) {
    TruncPoly p(value - value, degree);
    p.c_[0] = value;
    return p;
  }

  /// value * t^k (zero if k exceeds the degree).
  static TruncPoly monomial(const T& value, std::size_t k, std::size_t degree) {
    TruncPoly p(value - value, degree);
    if (k <= degree) p.c_[k] = value;
    return p;
  }

  std::size_t degree() const { return c_.size() - 1; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  const std::vector<T>& coefficients() const { return c_; }

  TruncPoly operator+(const TruncPoly& o) const {
    check(o);
    TruncPoly r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }
  TruncPoly operator-(const TruncPoly& o) const {
    check(o);
    TruncPoly r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }
  TruncPoly operator-() const {
    TruncPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  TruncPoly operator*(const TruncPoly& o) const {
    check(o);
    const std::size_t n = c_.size();
    TruncPoly r(c_[0] - c_[0], n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (o.c_[j].is_zero()) continue;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    return r;
  }
  TruncPoly& operator+=(const TruncPoly& o) { return *this = *this + o; }
  TruncPoly& operator-=(const TruncPoly& o) { return *this = *this - o; }
  TruncPoly& operator*=(const TruncPoly& o) { return *this = *this * o; }

  bool operator==(const TruncPoly& o) const { return c_ == o.c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  /// Inverse of a polynomial with constant term 1.
  TruncPoly inverse_of_one_plus() const {
    if (!c_[0].is_one()) throw Error("TruncPoly: inverse requires constant term 1");
    const std::size_t n = c_.size();
    TruncPoly r(c_[0] - c_[0], n - 1);
    r.c_[0] = c_[0];
    for (std::size_t k = 1; k < n; ++k) {
      T s = c_[0] - c_[0];
      for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
      r.c_[k] = -s;
    }
    return r;
  }

  /// Same coefficients truncated or zero-extended to `degree`.
  TruncPoly resized(std::size_t degree) const {
    TruncPoly r(c_[0] - c_[0], degree);
    for (std::size_t k = 0; k <= degree && k < c_.size(); ++k) r.c_[k] = c_[k];
    return r;
  }

  /// "1 + a*t - b*t^2" using each coefficient's str().
  std::string str(const std::string& var = "t") const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      std::string s = c_[k].str();
      const bool compound = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
      bool negative = false;
      if (!compound && s.size() > 1 && s[0] == '-') negative = true, s = s.substr(1);
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      if (k == 0) {
        os << (compound ? "(" + s + ")" : s);
      } else {
        if (s != "1") os << (compound ? "(" + s + ")" : s) << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  void check(const TruncPoly& o) const {
    if (o.c_.size() != c_.size()) throw OwnerMismatch("TruncPoly: truncation degrees differ");
  }

  std::vector<T> c_;
};

}  // namespace relk
