#pragma once

/**
 * @file ring.hpp
 * @brief Commutative rings presented by structure constants.
 *
 * A ring is a finitely generated module over its base (Z or Q) with basis
 * b_0..b_{r-1} and multiplication b_i b_j = sum_k c_ijk b_k.
 *
 *  - Finite rings (ModularBase) are abelian groups Z/d_0 + ... + Z/d_{r-1};
 *    the orders d_i may differ, which is what lets localizations and
 *    quotients of Z/n-algebras (e.g. the component Z/3 of Z/12) be
 *    represented exactly. Coordinates are kept in [0, d_i).
 *  - Rational rings (RationalBase) are finite-dimensional Q-algebras with
 *    coordinates as reduced fractions.
 *
 * Rings are immutable after construction; elements hold a shared pointer to
 * their ring.
 */

#include "relk/integer.hpp"
#include "relk/smith.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace relk {

struct ModularBase {
  using Coeff = std::int64_t;
  static constexpr bool finite = true;
  static constexpr const char* name = "modular";
};

struct RationalBase {
  using Coeff = Rational;
  static constexpr bool finite = false;
  static constexpr const char* name = "rational";
};

enum class RingKind { IntegersModN, PrimeField, Rationals, Algebra };

inline const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::IntegersModN: return "integers-mod";
    case RingKind::PrimeField: return "prime-field";
    case RingKind::Rationals: return "rationals";
    case RingKind::Algebra: return "algebra";
  }
  return "?";
}

/// Structure constants violate a ring axiom; the message names the basis elements.
class StructureError : public Error {
 public:
  using Error::Error;
};

template <class Base>
class Ring;
template <class Base>
class Element;
template <class Base>
using RingPtr = std::shared_ptr<const Ring<Base>>;

template <class Base>
class Ring : public std::enable_shared_from_this<Ring<Base>> {
 public:
  using Coeff = typename Base::Coeff;
  using Vec = std::vector<Coeff>;

  struct Presentation {
    std::string name;
    RingKind kind = RingKind::Algebra;
    std::vector<std::string> labels;
    std::vector<std::int64_t> orders;  // finite rings only
    std::vector<Vec> products;         // rank*rank entries, row-major in (i, j)
    Vec one;
  };

  static RingPtr<Base> create(Presentation p) {
    auto ring = std::shared_ptr<Ring>(new Ring(std::move(p)));
    ring->validate();
    return ring;
  }

  const std::string& name() const { return p_.name; }
  RingKind kind() const { return p_.kind; }
  std::size_t rank() const { return p_.labels.size(); }
  const std::vector<std::string>& labels() const { return p_.labels; }
  const std::vector<std::int64_t>& orders() const { return p_.orders; }
  const Presentation& presentation() const { return p_; }

  /// Additive order of 1 (0 for Q-algebras).
  std::int64_t characteristic() const {
    if constexpr (!Base::finite) {
      return 0;
    } else {
      std::int64_t c = 1;
      for (auto d : p_.orders) c = lcm64(c, d);
      return c;
    }
  }

  /// Number of elements of a finite ring.
  Integer cardinality() const {
    static_assert(Base::finite, "cardinality is defined for finite rings only");
    Integer c = 1;
    for (auto d : p_.orders) c *= d;
    return c;
  }

  bool is_zero_ring() const { return rank() == 0; }

  Coeff reduce_at(std::size_t i, Coeff v) const {
    if constexpr (Base::finite) return mod_floor(v, p_.orders[i]);
    else return v;
  }

  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = reduce_at(i, std::move(v[i]));
    return v;
  }

  Vec zero_vec() const { return Vec(rank(), Coeff(0)); }

  Vec add(const Vec& a, const Vec& b) const {
    Vec c(rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce_at(i, a[i] + b[i]);
    return c;
  }
  Vec sub(const Vec& a, const Vec& b) const {
    Vec c(rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce_at(i, a[i] - b[i]);
    return c;
  }
  Vec neg(const Vec& a) const {
    Vec c(rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce_at(i, -a[i]);
    return c;
  }
  Vec scale(const Vec& a, const Coeff& k) const {
    Vec c(rank());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if constexpr (Base::finite) {
        c[i] = mod_floor(mod_floor(k, p_.orders[i]) * a[i], p_.orders[i]);
      } else {
        c[i] = k * a[i];
      }
    }
    return c;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    const std::size_t r = rank();
    Vec c(r, Coeff(0));
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (b[j] == 0) continue;
        const Vec& pij = p_.products[i * r + j];
        for (std::size_t k = 0; k < r; ++k) {
          if (pij[k] == 0) continue;
          if constexpr (Base::finite) {
            const std::int64_t d = p_.orders[k];
            c[k] = (c[k] + ((a[i] % d) * (b[j] % d) % d) * pij[k]) % d;
          } else {
            c[k] += a[i] * b[j] * pij[k];
          }
        }
      }
    }
    return c;
  }
  bool is_zero(const Vec& a) const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  Element<Base> element(Vec v) const;
  Element<Base> zero() const;
  Element<Base> one() const;
  Element<Base> basis(std::size_t i) const;
  Element<Base> from_integer(std::int64_t k) const;

  std::string format(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const bool unit_label = v.size() == 1 || p_.labels[i] == "1";
      Coeff c = v[i];
      bool negative = false;
      if constexpr (!Base::finite) {
        if (c < 0) negative = true, c = -c;
      }
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      if (unit_label) {
        os << c;
      } else if (c == 1) {
        os << p_.labels[i];
      } else {
        os << c << "*" << p_.labels[i];
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

  std::size_t hash(const Vec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
      std::size_t e;
      if constexpr (Base::finite) e = std::hash<std::int64_t>{}(x);
      else e = std::hash<std::string>{}(x.str());
      h = (h ^ e) * 1099511628211ull;
    }
    return h;
  }

  RingPtr<Base> ptr() const { return this->shared_from_this(); }

 private:
  explicit Ring(Presentation p) : p_(std::move(p)) {}

  std::string triple_name(std::size_t i, std::size_t j, std::size_t k) const {
    return "(" + p_.labels[i] + ", " + p_.labels[j] + ", " + p_.labels[k] + ")";
  }

  void validate() {
    const std::size_t r = rank();
    if constexpr (Base::finite) {
      if (p_.orders.size() != r) throw StructureError(p_.name + ": one additive order per basis element required");
      for (auto d : p_.orders)
        if (d < 2 || d >= (std::int64_t{1} << 31)) throw StructureError(p_.name + ": additive orders must lie in [2, 2^31)");
    }
    if (p_.products.size() != r * r) throw StructureError(p_.name + ": expected rank^2 products");
    if (p_.one.size() != r) throw StructureError(p_.name + ": unit vector has the wrong length");
    for (auto& v : p_.products) {
      if (v.size() != r) throw StructureError(p_.name + ": product vector has the wrong length");
      v = reduce(std::move(v));
    }
    p_.one = reduce(std::move(p_.one));
    if constexpr (Base::finite) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k)
            if ((p_.orders[i] % p_.orders[k]) * p_.products[i * r + j][k] % p_.orders[k] != 0)
              throw StructureError(p_.name + ": product " + p_.labels[i] + "*" + p_.labels[j] +
                                   " is incompatible with the additive order of " + p_.labels[i]);
    }
    auto b = [&](std::size_t i) {
      Vec v = zero_vec();
      v[i] = 1;
      return v;
    };
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (p_.products[i * r + j] != p_.products[j * r + i])
          throw StructureError(p_.name + ": not commutative on basis pair (" + p_.labels[i] + ", " + p_.labels[j] + ")");
    for (std::size_t i = 0; i < r; ++i)
      if (mul(p_.one, b(i)) != b(i))
        throw StructureError(p_.name + ": unit law fails on basis element " + p_.labels[i]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          Vec left = mul(p_.products[i * r + j], b(k));
          Vec right = mul(b(i), p_.products[j * r + k]);
          if (left != right)
            throw StructureError(p_.name + ": not associative on basis triple " + triple_name(i, j, k));
        }
  }

  Presentation p_;
};

template <class Base>
class Element {
 public:
  using Coeff = typename Base::Coeff;
  using Vec = std::vector<Coeff>;

  Element() = default;
  Element(RingPtr<Base> ring, Vec coords) : ring_(std::move(ring)), c_(ring_->reduce(std::move(coords))) {
    if (c_.size() != ring_->rank()) throw Error("Element: coordinate vector length differs from ring rank");
  }

  const RingPtr<Base>& ring() const { return ring_; }
  const Vec& coords() const { return c_; }
  const Coeff& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const { return ring_->is_zero(c_); }
  bool is_one() const { return c_ == ring_->one().coords(); }

  Element operator+(const Element& o) const { return {ring_, ring_->add(c_, same(o).c_), raw}; }
  Element operator-(const Element& o) const { return {ring_, ring_->sub(c_, same(o).c_), raw}; }
  Element operator*(const Element& o) const { return {ring_, ring_->mul(c_, same(o).c_), raw}; }
  Element operator-() const { return {ring_, ring_->neg(c_), raw}; }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  /// Multiplication by a base scalar (integer for finite rings).
  Element scaled(const Coeff& k) const { return {ring_, ring_->scale(c_, k), raw}; }

  Element pow(std::uint64_t e) const {
    Element result = ring_->one(), b = *this;
    while (e > 0) {
      if (e & 1) result *= b;
      b *= b;
      e >>= 1;
    }
    return result;
  }

  bool operator==(const Element& o) const { return ring_ == o.ring_ && c_ == o.c_; }

  std::string str() const { return ring_ ? ring_->format(c_) : "<null>"; }

 private:
  struct Raw {};
  static constexpr Raw raw{};
  Element(RingPtr<Base> ring, Vec coords, Raw) : ring_(std::move(ring)), c_(std::move(coords)) {}

  const Element& same(const Element& o) const {
    if (ring_ != o.ring_)
      throw OwnerMismatch("operands belong to different rings (" + (ring_ ? ring_->name() : "?") + " vs " +
                          (o.ring_ ? o.ring_->name() : "?") + ")");
    return o;
  }

  RingPtr<Base> ring_;
  Vec c_;
};

template <class Base>
std::ostream& operator<<(std::ostream& os, const Element<Base>& e) {
  return os << e.str();
}

template <class Base>
Element<Base> Ring<Base>::element(Vec v) const {
  return Element<Base>(ptr(), std::move(v));
}
template <class Base>
Element<Base> Ring<Base>::zero() const {
  return element(zero_vec());
}
template <class Base>
Element<Base> Ring<Base>::one() const {
  return element(p_.one);
}
template <class Base>
Element<Base> Ring<Base>::basis(std::size_t i) const {
  Vec v = zero_vec();
  v.at(i) = 1;
  return element(std::move(v));
}
template <class Base>
Element<Base> Ring<Base>::from_integer(std::int64_t k) const {
  return one().scaled(Coeff(k));
}

using ModRing = Ring<ModularBase>;
using QRing = Ring<RationalBase>;
using ModElement = Element<ModularBase>;
using QElement = Element<RationalBase>;

}  // namespace relk

template <class Base>
struct std::hash<relk::Element<Base>> {
  std::size_t operator()(const relk::Element<Base>& e) const { return e.ring()->hash(e.coords()); }
};

namespace relk {

/**
 * Solves sum_j x_j g_j = target for fixed generators g_j of a submodule of
 * the ring's coordinate module (over Z with the per-coordinate orders, or
 * over Q). The factorization is computed once per generator set.
 */
template <class Base>
class SpanSolver {
 public:
  using Coeff = typename Base::Coeff;
  using Vec = std::vector<Coeff>;

  SpanSolver(const Ring<Base>& ring, std::vector<Vec> generators)
      : rank_(ring.rank()), gens_(std::move(generators)) {
    if constexpr (Base::finite) {
      std::vector<std::vector<Integer>> cols;
      for (const auto& g : gens_) cols.emplace_back(g.begin(), g.end());
      for (std::size_t i = 0; i < rank_; ++i) {
        std::vector<Integer> c(rank_, 0);
        c[i] = ring.orders()[i];
        cols.push_back(std::move(c));
      }
      orders_ = ring.orders();
      smith_ = smith_normal_form(IntMatrix::from_columns(rank_, cols));
    } else {
      factor_rational();
    }
  }

  std::optional<Vec> solve(const Vec& target) const {
    if constexpr (Base::finite) {
      std::vector<Integer> b(target.begin(), target.end());
      auto x = solve_integer(*smith_, b);
      if (!x) return std::nullopt;
      Vec out(gens_.size());
      for (std::size_t j = 0; j < gens_.size(); ++j) out[j] = to_int64((*x)[j]);
      return out;
    } else {
      Vec y(rank_, Coeff(0));
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t k = 0; k < rank_; ++k) y[i] += transform_[i][k] * target[k];
      for (std::size_t i = pivots_.size(); i < rank_; ++i)
        if (y[i] != 0) return std::nullopt;
      Vec x(gens_.size(), Coeff(0));
      for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
      return x;
    }
  }

  bool contains(const Vec& target) const { return solve(target).has_value(); }

  /// Number of elements of the span (finite) -- requires finite base.
  Integer span_size() const {
    static_assert(Base::finite);
    Integer total = 1, quotient = 1;
    for (auto d : orders_) total *= d;
    for (std::size_t i = 0; i < rank_; ++i) quotient *= smith_->d(i);
    return total / quotient;
  }

  /// Dimension of the span over Q -- requires rational base.
  std::size_t dimension() const {
    static_assert(!Base::finite);
    return pivots_.size();
  }

 private:
  void factor_rational() {
    const std::size_t m = gens_.size();
    std::vector<Vec> a(rank_, Vec(m, Coeff(0)));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < rank_; ++i) a[i][j] = gens_[j][i];
    transform_.assign(rank_, Vec(rank_, Coeff(0)));
    for (std::size_t i = 0; i < rank_; ++i) transform_[i][i] = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < rank_; ++col) {
      std::size_t p = row;
      while (p < rank_ && a[p][col] == 0) ++p;
      if (p == rank_) continue;
      std::swap(a[p], a[row]);
      std::swap(transform_[p], transform_[row]);
      Coeff inv = Coeff(1) / a[row][col];
      for (auto& v : a[row]) v *= inv;
      for (auto& v : transform_[row]) v *= inv;
      for (std::size_t i = 0; i < rank_; ++i) {
        if (i == row || a[i][col] == 0) continue;
        Coeff f = a[i][col];
        for (std::size_t k = 0; k < m; ++k) a[i][k] -= f * a[row][k];
        for (std::size_t k = 0; k < rank_; ++k) transform_[i][k] -= f * transform_[row][k];
      }
      pivots_.push_back(col);
      ++row;
    }
  }

  std::size_t rank_;
  std::vector<Vec> gens_;
  // finite
  std::vector<std::int64_t> orders_;
  std::optional<SmithForm> smith_;
  // rational: transform_ * G is in reduced row echelon form with the given pivot columns
  std::vector<Vec> transform_;
  std::vector<std::size_t> pivots_;
};

/// A unital ring homomorphism given by the images of the source basis.
template <class Base>
class RingMap {
 public:
  using Coeff = typename Base::Coeff;
  using Vec = std::vector<Coeff>;

  RingMap(RingPtr<Base> source, RingPtr<Base> target, std::vector<Element<Base>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->rank()) throw StructureError("RingMap: one image per source basis element required");
    for (const auto& im : images_)
      if (im.ring() != target_) throw OwnerMismatch("RingMap: image does not lie in the target ring");
    if constexpr (Base::finite) {
      for (std::size_t i = 0; i < images_.size(); ++i)
        if (!images_[i].scaled(source_->orders()[i]).is_zero())
          throw StructureError("RingMap: image of " + source_->labels()[i] + " violates its additive order");
    }
    if (!(*this)(source_->one()).is_one()) throw StructureError("RingMap: 1 must map to 1");
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i; j < images_.size(); ++j)
        if ((*this)(source_->basis(i) * source_->basis(j)) != images_[i] * images_[j])
          throw StructureError("RingMap: not multiplicative on (" + source_->labels()[i] + ", " +
                               source_->labels()[j] + ")");
    std::vector<Vec> gens;
    for (const auto& im : images_) gens.push_back(im.coords());
    solver_ = std::make_shared<SpanSolver<Base>>(*target_, std::move(gens));
  }

  static RingMap identity(const RingPtr<Base>& r) {
    std::vector<Element<Base>> ims;
    for (std::size_t i = 0; i < r->rank(); ++i) ims.push_back(r->basis(i));
    return RingMap(r, r, std::move(ims));
  }

  const RingPtr<Base>& source() const { return source_; }
  const RingPtr<Base>& target() const { return target_; }
  const std::vector<Element<Base>>& images() const { return images_; }

  Element<Base> operator()(const Element<Base>& x) const {
    if (x.ring() != source_) throw OwnerMismatch("RingMap: argument is not in the source ring");
    Element<Base> y = target_->zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (x[i] != 0) y += images_[i].scaled(x[i]);
    return y;
  }

  /// Composite g o f.
  friend RingMap compose(const RingMap& g, const RingMap& f) {
    std::vector<Element<Base>> ims;
    for (const auto& im : f.images_) ims.push_back(g(im));
    return RingMap(f.source_, g.target_, std::move(ims));
  }

  /// x with f(x) = y, if y lies in the image.
  std::optional<Element<Base>> preimage(const Element<Base>& y) const {
    auto x = solver_->solve(y.coords());
    if (!x) return std::nullopt;
    return source_->element(*x);
  }

  bool in_image(const Element<Base>& y) const { return solver_->contains(y.coords()); }

  /// A nonzero element of the kernel, or nullopt when f is injective.
  std::optional<Element<Base>> kernel_witness() const {
    const std::size_t m = source_->rank(), r = target_->rank();
    if constexpr (Base::finite) {
      std::vector<std::vector<Integer>> cols;
      for (const auto& im : images_) cols.emplace_back(im.coords().begin(), im.coords().end());
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Integer> c(r, 0);
        c[i] = target_->orders()[i];
        cols.push_back(std::move(c));
      }
      IntMatrix ker = integer_kernel(IntMatrix::from_columns(r, cols));
      for (std::size_t j = 0; j < ker.cols(); ++j) {
        Vec v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = to_int64(mod_floor(ker(i, j), Integer(source_->orders()[i])));
        Element<Base> x = source_->element(v);
        if (!x.is_zero()) return x;
      }
      return std::nullopt;
    } else {
      // null space of the r x m image matrix over Q
      std::vector<Vec> a(r, Vec(m, Coeff(0)));
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < r; ++i) a[i][j] = images_[j][i];
      std::vector<std::size_t> pivot_cols;
      std::size_t row = 0;
      for (std::size_t col = 0; col < m && row < r; ++col) {
        std::size_t p = row;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[row]);
        Coeff inv = Coeff(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t i = 0; i < r; ++i) {
          if (i == row || a[i][col] == 0) continue;
          Coeff f = a[i][col];
          for (std::size_t k = 0; k < m; ++k) a[i][k] -= f * a[row][k];
        }
        pivot_cols.push_back(col);
        ++row;
      }
      for (std::size_t free = 0; free < m; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        Vec v(m, Coeff(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
        return source_->element(v);
      }
      return std::nullopt;
    }
  }

  bool is_injective() const { return !kernel_witness().has_value(); }

 private:
  RingPtr<Base> source_, target_;
  std::vector<Element<Base>> images_;
  std::shared_ptr<SpanSolver<Base>> solver_;
};

}  // namespace relk
