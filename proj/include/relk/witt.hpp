#pragma once

/**
 * @file witt.hpp
 * @brief Truncated big Witt vectors W_N(A) = (1 + tA[t]) / (t^{N+1}).
 *
 * Witt addition is multiplication of series. Witt multiplication factors
 * both operands into basics (1 - a t^n) and applies
 *
 *     (1 - a t^n) * (1 - b t^m) = (1 - a^{m/d} b^{n/d} t^{nm/d})^d,  d = gcd(n, m),
 *
 * so no division is ever needed and the same code serves Z/n-algebras and
 * Q-algebras. Ghost components exist only over Q-algebras.
 *
 * Frobenius lowers precision: F_n(u) mod t^{M+1} depends on u mod t^{nM+1},
 * so F_n of a level-N vector has level floor(N/n).
 */

#include "relk/matrix.hpp"
#include "relk/poly.hpp"
#include "relk/ring.hpp"

#include <numeric>
#include <utility>

namespace relk {

template <class Base>
class WittVector {
 public:
  using Elem = Element<Base>;
  using Series = TruncPoly<Elem>;

  WittVector() = default;

  /// The zero of W_N(A), i.e. the series 1.
  WittVector(RingPtr<Base> ring, std::size_t level) : ring_(std::move(ring)), s_(Series::constant(ring_->one(), level)) {
    if (level < 1) throw Error("WittVector: truncation level must be at least 1");
  }

  /// 1 + a_1 t + ... + a_N t^N from a_1..a_N.
  static WittVector from_coefficients(const RingPtr<Base>& ring, const std::vector<Elem>& a) {
    WittVector w(ring, a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].ring() != ring) throw OwnerMismatch("WittVector: coefficient in a different ring");
      w.s_[k + 1] = a[k];
    }
    return w;
  }

  static WittVector from_series(Series s) {
    if (!s[0].is_one()) throw Error("WittVector: constant term must be 1");
    WittVector w;
    w.ring_ = s[0].ring();
    w.s_ = std::move(s);
    return w;
  }

  /// The basic vector 1 - a t^n.
  static WittVector basic(const Elem& a, std::size_t n, std::size_t level) {
    WittVector w(a.ring(), level);
    if (n == 0) throw Error("basic Witt vector needs n >= 1");
    if (n <= level) w.s_[n] = -a;
    return w;
  }

  /// The multiplicative identity 1 - t.
  static WittVector one(const RingPtr<Base>& ring, std::size_t level) { return basic(ring->one(), 1, level); }

  const RingPtr<Base>& ring() const { return ring_; }
  std::size_t level() const { return s_.degree(); }
  const Elem& coefficient(std::size_t k) const { return s_[k]; }
  const Series& series() const { return s_; }

  bool is_zero() const { return s_.is_one(); }
  bool operator==(const WittVector& o) const { return ring_ == o.ring_ && s_ == o.s_; }

  /// Same vector at a lower level.
  WittVector truncated(std::size_t level) const {
    if (level > this->level()) throw Error("WittVector: cannot raise the truncation level");
    return from_series(s_.resized(level));
  }

  std::string str() const { return s_.str(); }

 private:
  RingPtr<Base> ring_;
  Series s_;
};

namespace detail {

template <class Base>
void check_same(const WittVector<Base>& u, const WittVector<Base>& v) {
  if (u.ring() != v.ring()) throw OwnerMismatch("Witt vectors over different rings");
  if (u.level() != v.level()) throw OwnerMismatch("Witt vectors at different truncation levels");
}

/// s * (1 - c t^k)^d, using that the second factor is sparse.
template <class Base>
TruncPoly<Element<Base>> times_basic_power(const TruncPoly<Element<Base>>& s, const Element<Base>& c, std::size_t k,
                                           std::size_t d) {
  using Coeff = typename Base::Coeff;
  const std::size_t n = s.degree();
  if (k > n || c.is_zero() || d == 0) return s;
  std::vector<std::pair<std::size_t, Element<Base>>> terms;
  Element<Base> pw = c.ring()->one();
  Integer binom = 1;
  for (std::size_t j = 0; j <= d && j * k <= n; ++j) {
    Element<Base> term = pw.scaled(Coeff(to_int64(binom)));
    if (j % 2) term = -term;
    if (!term.is_zero()) terms.emplace_back(j * k, term);
    pw *= c;
    binom = binom * (d - j) / (j + 1);
  }
  TruncPoly<Element<Base>> out(c.ring()->zero(), n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (s[i].is_zero()) continue;
    for (const auto& [e, t] : terms)
      if (i + e <= n) out[i + e] += s[i] * t;
  }
  return out;
}

/// s * (1 - a t^n)^{-1} = s * sum_k a^k t^{nk}.
template <class Base>
TruncPoly<Element<Base>> divide_by_basic(const TruncPoly<Element<Base>>& s, const Element<Base>& a, std::size_t n) {
  const std::size_t deg = s.degree();
  TruncPoly<Element<Base>> out = s;
  Element<Base> pw = a;
  for (std::size_t e = n; e <= deg; e += n) {
    for (std::size_t i = 0; i + e <= deg; ++i)
      if (!s[i].is_zero()) out[i + e] += s[i] * pw;
    pw *= a;
  }
  return out;
}

}  // namespace detail

/// Witt sum: product of series.
template <class Base>
WittVector<Base> witt_add(const WittVector<Base>& u, const WittVector<Base>& v) {
  detail::check_same(u, v);
  return WittVector<Base>::from_series(u.series() * v.series());
}

/// Additive inverse: the inverse series.
template <class Base>
WittVector<Base> witt_neg(const WittVector<Base>& u) {
  return WittVector<Base>::from_series(u.series().inverse_of_one_plus());
}

template <class Base>
WittVector<Base> witt_sub(const WittVector<Base>& u, const WittVector<Base>& v) {
  return witt_add(u, witt_neg(v));
}

/// k-fold Witt sum u + ... + u (k may be negative).
template <class Base>
WittVector<Base> witt_multiple(const WittVector<Base>& u, std::int64_t k) {
  WittVector<Base> base = k < 0 ? witt_neg(u) : u;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  WittVector<Base> acc(u.ring(), u.level());
  while (e) {
    if (e & 1) acc = witt_add(acc, base);
    base = witt_add(base, base);
    e >>= 1;
  }
  return acc;
}

/// Coefficients (n, a_n), n = 1..N, with u = prod_n (1 - a_n t^n) mod t^{N+1}.
template <class Base>
std::vector<Element<Base>> basic_factorization(const WittVector<Base>& u) {
  const std::size_t level = u.level();
  std::vector<Element<Base>> a(level + 1, u.ring()->zero());
  TruncPoly<Element<Base>> cur = u.series();
  for (std::size_t n = 1; n <= level; ++n) {
    a[n] = -cur[n];
    if (!a[n].is_zero()) cur = detail::divide_by_basic(cur, a[n], n);
  }
  return a;
}

/// prod_n (1 - a_n t^n) at the given level, from a factorization vector.
template <class Base>
WittVector<Base> from_basic_factorization(const RingPtr<Base>& ring, const std::vector<Element<Base>>& a,
                                          std::size_t level) {
  TruncPoly<Element<Base>> s = TruncPoly<Element<Base>>::constant(ring->one(), level);
  for (std::size_t n = 1; n < a.size() && n <= level; ++n)
    if (!a[n].is_zero()) s = detail::times_basic_power(s, a[n], n, 1);
  return WittVector<Base>::from_series(std::move(s));
}

template <class Base>
WittVector<Base> witt_mul(const WittVector<Base>& u, const WittVector<Base>& v) {
  detail::check_same(u, v);
  const std::size_t level = u.level();
  const auto a = basic_factorization(u);
  const auto b = basic_factorization(v);
  TruncPoly<Element<Base>> s = TruncPoly<Element<Base>>::constant(u.ring()->one(), level);
  for (std::size_t n = 1; n <= level; ++n) {
    if (a[n].is_zero()) continue;
    for (std::size_t m = 1; m <= level; ++m) {
      if (b[m].is_zero()) continue;
      const std::size_t d = std::gcd(n, m), k = n / d * m;
      if (k > level) continue;
      Element<Base> c = a[n].pow(m / d) * b[m].pow(n / d);
      s = detail::times_basic_power(s, c, k, d);
    }
  }
  return WittVector<Base>::from_series(std::move(s));
}

/// V_n: u(t) -> u(t^n), at `out_level` (defaults to u's level).
template <class Base>
WittVector<Base> verschiebung(std::size_t n, const WittVector<Base>& u, std::size_t out_level = 0) {
  if (n == 0) throw Error("verschiebung: n must be at least 1");
  if (out_level == 0) out_level = u.level();
  if (out_level / n > u.level())
    throw Error("verschiebung: V_" + std::to_string(n) + " of a level-" + std::to_string(u.level()) +
                " vector is determined only up to level " + std::to_string(n * (u.level() + 1) - 1));
  WittVector<Base> out(u.ring(), out_level);
  TruncPoly<Element<Base>> s = out.series();
  for (std::size_t k = 1; k * n <= out_level; ++k) s[k * n] = u.coefficient(k);
  return WittVector<Base>::from_series(std::move(s));
}

/// F_n, via F_n(1 - a t^m) = (1 - a^{n/d} t^{m/d})^d; result at level floor(N/n).
template <class Base>
WittVector<Base> frobenius(std::size_t n, const WittVector<Base>& u) {
  if (n == 0) throw Error("frobenius: n must be at least 1");
  const std::size_t level = u.level() / n;
  if (level == 0)
    throw Error("frobenius: F_" + std::to_string(n) + " of a level-" + std::to_string(u.level()) +
                " vector carries no information");
  const auto a = basic_factorization(u);
  TruncPoly<Element<Base>> s = TruncPoly<Element<Base>>::constant(u.ring()->one(), level);
  for (std::size_t m = 1; m <= u.level(); ++m) {
    if (a[m].is_zero()) continue;
    const std::size_t d = std::gcd(n, m);
    if (m / d > level) continue;
    s = detail::times_basic_power(s, a[m].pow(n / d), m / d, d);
  }
  return WittVector<Base>::from_series(std::move(s));
}

/// Ghost components w_1..w_N: coefficients of -t u'(t)/u(t). Q-algebras only.
template <class Base>
std::vector<Element<Base>> ghost(const WittVector<Base>& u) {
  if constexpr (Base::finite) {
    throw Unsupported("ghost: components are defined only over torsion-free rings");
  } else {
    const std::size_t level = u.level();
    const auto& s = u.series();
    TruncPoly<Element<Base>> deriv(u.ring()->zero(), level);
    for (std::size_t k = 1; k <= level; ++k) deriv[k - 1] = s[k].scaled(Rational(static_cast<long long>(k)));
    TruncPoly<Element<Base>> q = deriv * s.inverse_of_one_plus();
    std::vector<Element<Base>> w;
    for (std::size_t k = 1; k <= level; ++k) w.push_back(-q[k - 1]);
    return w;
  }
}

/// The Witt vector with ghost components w (Newton's identities). Q-algebras only.
template <class Base>
WittVector<Base> from_ghost(const RingPtr<Base>& ring, const std::vector<Element<Base>>& w) {
  static_assert(!Base::finite, "from_ghost requires a Q-algebra");
  const std::size_t level = w.size();
  WittVector<Base> out(ring, level);
  TruncPoly<Element<Base>> c = out.series();
  for (std::size_t n = 1; n <= level; ++n) {
    Element<Base> acc = ring->zero();
    for (std::size_t j = 1; j <= n; ++j) acc += w[j - 1] * c[n - j];
    c[n] = -acc.scaled(Rational(1, static_cast<long long>(n)));
  }
  return WittVector<Base>::from_series(std::move(c));
}

/// Square matrix over A representing [A^n, M] - [A^n, 0] in End_0(A).
template <class Base>
using EndClass = Matrix<Element<Base>>;

/// det(1 - tM) mod t^{N+1}, via the division-free characteristic polynomial.
template <class Base>
WittVector<Base> almkvist(const RingPtr<Base>& ring, const EndClass<Base>& m, std::size_t level) {
  const std::vector<Element<Base>> p = char_poly(m, ring->one());
  WittVector<Base> out(ring, level);
  TruncPoly<Element<Base>> s = out.series();
  for (std::size_t k = 1; k < p.size() && k <= level; ++k) s[k] = p[k];
  return WittVector<Base>::from_series(std::move(s));
}

}  // namespace relk
