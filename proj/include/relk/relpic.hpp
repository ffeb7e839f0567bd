#pragma once

/**
 * @file relpic.hpp
 * @brief Pic(f) as B^x / f(A^x), the truncated nil-unit groups NU and NPic,
 *        and the W(A)-module structure on NPic.
 *
 * Nil-units are polynomials 1 + c_1 t + ... + c_D t^D with nilpotent c_i,
 * i.e. elements of NU(R) = (R[t])^x / R^x truncated mod t^{D+1}.
 *
 * The basic vector (1 - a t^m) acts on a nil-unit p(t) over B through
 * S = A[s]/(s^m - a): the series p(st) lies in B[t] tensor S, which is free
 * of rank m over B[t] with basis 1, s, ..., s^{m-1}, and the action is its
 * norm (determinant of multiplication). A general Witt vector acts through
 * its basic factorization.
 */

#include "relk/extension.hpp"
#include "relk/matrix.hpp"
#include "relk/poly.hpp"
#include "relk/witt.hpp"

#include <map>

namespace relk {

template <class Base>
using NilUnit = TruncPoly<Element<Base>>;

struct NilUnitHash {
  std::size_t operator()(const NilUnit<ModularBase>& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& c : p.coefficients()) h = (h ^ std::hash<ModElement>{}(c)) * 1099511628211ull;
    return h;
  }
};

/// 1 + c_1 t + ... + c_D t^D from c_1..c_D; every c_i must be nilpotent.
template <class Base>
NilUnit<Base> make_nil_unit(const RingPtr<Base>& r, const std::vector<Element<Base>>& c) {
  NilUnit<Base> p = NilUnit<Base>::constant(r->one(), c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!is_nilpotent(c[k])) throw Error("nil-unit coefficient " + c[k].str() + " is not nilpotent");
    p[k + 1] = c[k];
  }
  return p;
}

template <class Base>
bool is_nil_unit(const NilUnit<Base>& p) {
  if (!p[0].is_one()) return false;
  for (std::size_t k = 1; k <= p.degree(); ++k)
    if (!is_nilpotent(p[k])) return false;
  return true;
}

/// f applied coefficientwise.
template <class Base>
NilUnit<Base> apply_map(const RingMap<Base>& f, const NilUnit<Base>& p) {
  NilUnit<Base> q(f.target()->zero(), p.degree());
  for (std::size_t k = 0; k <= p.degree(); ++k) q[k] = f(p[k]);
  return q;
}

/// The generators 1 + nu t^k (nu in a generating set of Nil(R), 1 <= k <= D).
template <class Base>
std::vector<NilUnit<Base>> nil_unit_generators(const RingPtr<Base>& r, const Nilradical<Base>& nil, std::size_t degree) {
  std::vector<NilUnit<Base>> gens;
  for (std::size_t k = 1; k <= degree; ++k)
    for (const auto& nu : nil.basis) {
      NilUnit<Base> p = NilUnit<Base>::constant(r->one(), degree);
      p[k] = nu;
      gens.push_back(std::move(p));
    }
  return gens;
}

using NilUnitGroup = FiniteGroup<NilUnit<ModularBase>>;

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// A nil unit 1 + c_1 t + ... + c_D t^D as the concatenated coordinates of c_1..c_D.
using NilKey = std::vector<std::int64_t>;

inline NilKey nil_key(const NilUnit<ModularBase>& p) {
  NilKey k;
  for (std::size_t i = 1; i <= p.degree(); ++i) k.insert(k.end(), p[i].coords().begin(), p[i].coords().end());
  return k;
}

inline NilUnit<ModularBase> from_nil_key(const RingPtr<ModularBase>& r, const NilKey& k, std::size_t degree) {
  NilUnit<ModularBase> p = NilUnit<ModularBase>::constant(r->one(), degree);
  const std::size_t n = r->rank();
  for (std::size_t i = 1; i <= degree; ++i)
    p[i] = r->element(std::vector<std::int64_t>(k.begin() + static_cast<std::ptrdiff_t>((i - 1) * n),
                                                k.begin() + static_cast<std::ptrdiff_t>(i * n)));
  return p;
}

inline NilKey nil_key_mul(const ModRing& r, std::size_t degree, const NilKey& a, const NilKey& b) {
  const std::size_t n = r.rank();
  const auto& prod = r.presentation().products;
  const auto& ord = r.orders();
  NilKey out(a.size());
  for (std::size_t k = 1; k <= degree; ++k) {
    std::int64_t* c = out.data() + (k - 1) * n;
    for (std::size_t x = 0; x < n; ++x) c[x] = (a[(k - 1) * n + x] + b[(k - 1) * n + x]) % ord[x];
    for (std::size_t i = 1; i < k; ++i) {
      const std::int64_t* u = a.data() + (i - 1) * n;
      const std::int64_t* v = b.data() + (k - i - 1) * n;
      for (std::size_t p = 0; p < n; ++p) {
        if (u[p] == 0) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (v[q] == 0) continue;
          const std::int64_t uv = u[p] * v[q];
          const auto& pq = prod[p * n + q];
          for (std::size_t x = 0; x < n; ++x)
            if (pq[x] != 0) c[x] = static_cast<std::int64_t>((c[x] + static_cast<__int128>(uv % ord[x]) * pq[x]) % ord[x]);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// NU(R) truncated at degree D, for a finite ring.
inline NilUnitGroup nu_group(const RingPtr<ModularBase>& r, const Nilradical<ModularBase>& nil, std::size_t degree,
                             std::size_t bound = kDefaultEnumerationBound) {
  if (degree < 1) throw Error("nu_group: truncation degree must be at least 1");
  std::vector<detail::NilKey> gens;
  for (const auto& g : nil_unit_generators(r, nil, degree)) gens.push_back(detail::nil_key(g));
  auto keyed = std::make_shared<FiniteGroup<detail::NilKey>>(group_from_generators<detail::NilKey, detail::KeyHash>(
      gens, detail::NilKey(degree * r->rank(), 0),
      [r, degree](const detail::NilKey& a, const detail::NilKey& b) { return detail::nil_key_mul(*r, degree, a, b); },
      bound));
  auto coords = [keyed, r, degree](const NilUnit<ModularBase>& p) -> std::optional<std::vector<std::int64_t>> {
    if (p.degree() != degree || p[0].ring() != r || !p[0].is_one()) return std::nullopt;
    detail::NilKey k = detail::nil_key(p);
    if (!keyed->contains(k)) return std::nullopt;
    return keyed->coordinates(k);
  };
  auto element = [keyed, r, degree](const std::vector<std::int64_t>& c) {
    return detail::from_nil_key(r, keyed->element(c), degree);
  };
  return NilUnitGroup(keyed->structure(), NilUnit<ModularBase>::constant(r->one(), degree),
                      std::multiplies<NilUnit<ModularBase>>{}, std::move(coords), std::move(element));
}

inline NilUnitGroup nu_group(const RingPtr<ModularBase>& r, std::size_t degree,
                             std::size_t bound = kDefaultEnumerationBound) {
  return nu_group(r, nilradical(r, bound), degree, bound);
}

/// NPic(f) truncated at degree D: NU(B) / f(NU(A)).
inline NilUnitGroup npic_group(const ModExtension& e, std::size_t degree, std::size_t bound = kDefaultEnumerationBound) {
  NilUnitGroup nub = nu_group(e.target(), e.target_nilradical(), degree, bound);
  std::vector<NilUnit<ModularBase>> image;
  for (const auto& g : nil_unit_generators(e.source(), e.source_nilradical(), degree)) image.push_back(apply_map(e.map(), g));
  return quotient(nub, image);
}

/**
 * Logarithmic coordinates on NU(R) for a Q-algebra R: log p in t Nil(R)[t],
 * written in a basis of Nil(R) degree by degree. This identifies the
 * truncated NU(R) with a Q-vector space of dimension D * dim Nil(R).
 */
class NilLogChart {
 public:
  NilLogChart(RingPtr<RationalBase> r, const Nilradical<RationalBase>& nil, std::size_t degree)
      : r_(std::move(r)), basis_(nil.basis), degree_(degree) {
    std::vector<std::vector<Rational>> cols;
    for (const auto& b : basis_) cols.push_back(b.coords());
    solver_ = std::make_shared<SpanSolver<RationalBase>>(*r_, cols);
  }

  std::size_t dimension() const { return degree_ * basis_.size(); }
  std::size_t degree() const { return degree_; }

  static NilUnit<RationalBase> log(const NilUnit<RationalBase>& p) {
    const std::size_t d = p.degree();
    NilUnit<RationalBase> x = p - NilUnit<RationalBase>::constant(p[0].ring()->one(), d);
    NilUnit<RationalBase> out(p[0].ring()->zero(), d), power = x;
    for (std::size_t k = 1; k <= d; ++k) {
      Rational c(k % 2 ? 1 : -1, static_cast<long long>(k));
      for (std::size_t i = 0; i <= d; ++i) out[i] += power[i].scaled(c);
      power = power * x;
    }
    return out;
  }

  static NilUnit<RationalBase> exp(const NilUnit<RationalBase>& x) {
    const std::size_t d = x.degree();
    NilUnit<RationalBase> out = NilUnit<RationalBase>::constant(x[0].ring()->one(), d), power = out;
    Rational fact = 1;
    for (std::size_t k = 1; k <= d; ++k) {
      power = power * x;
      fact *= static_cast<long long>(k);
      for (std::size_t i = 0; i <= d; ++i) out[i] += power[i].scaled(Rational(1) / fact);
    }
    return out;
  }

  /// Coordinates of log p: block k-1 holds the t^k coefficient in the nil basis.
  std::vector<Rational> coordinates(const NilUnit<RationalBase>& p) const {
    if (p.degree() != degree_) throw OwnerMismatch("NilLogChart: truncation degree differs");
    NilUnit<RationalBase> l = log(p);
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= degree_; ++k) {
      auto c = solver_->solve(l[k].coords());
      if (!c) throw Error("NilLogChart: coefficient " + l[k].str() + " is not nilpotent");
      out.insert(out.end(), c->begin(), c->end());
    }
    return out;
  }

  NilUnit<RationalBase> element(const std::vector<Rational>& coords) const {
    if (coords.size() != dimension()) throw Error("NilLogChart: coordinate length mismatch");
    NilUnit<RationalBase> x(r_->zero(), degree_);
    for (std::size_t k = 1; k <= degree_; ++k)
      for (std::size_t i = 0; i < basis_.size(); ++i)
        x[k] += basis_[i].scaled(coords[(k - 1) * basis_.size() + i]);
    return exp(x);
  }

 private:
  RingPtr<RationalBase> r_;
  std::vector<QElement> basis_;
  std::size_t degree_;
  std::shared_ptr<SpanSolver<RationalBase>> solver_;
};

/// dim NU(R) truncated at D, for a Q-algebra.
inline std::size_t nu_dimension(const RingPtr<RationalBase>& r, std::size_t degree) {
  return NilLogChart(r, nilradical(r), degree).dimension();
}

/// dim NPic(f) truncated at D, for Q-algebras: dim NU(B) - dim f(NU(A)).
inline std::size_t npic_dimension(const QExtension& e, std::size_t degree) {
  NilLogChart chart(e.target(), e.target_nilradical(), degree);
  std::vector<std::vector<Rational>> image;
  for (const auto& g : nil_unit_generators(e.source(), e.source_nilradical(), degree))
    image.push_back(chart.coordinates(apply_map(e.map(), g)));
  std::size_t rank = 0;
  if (!image.empty()) {
    // rank of the image vectors via a throwaway ring-free elimination
    std::vector<std::vector<Rational>> rows = image;
    const std::size_t n = chart.dimension();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
      std::size_t p = row;
      while (p < rows.size() && rows[p][col] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[row]);
      for (std::size_t i = row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Rational fct = rows[i][col] / rows[row][col];
        for (std::size_t k = col; k < n; ++k) rows[i][k] -= fct * rows[row][k];
      }
      ++row;
    }
    rank = row;
  }
  return chart.dimension() - rank;
}

/// Action of the basic Witt vector (1 - a t^m), a in A, on a nil-unit over B.
template <class Base>
NilUnit<Base> basic_action(const Extension<Base>& e, const Element<Base>& a, std::size_t m, const NilUnit<Base>& x) {
  if (a.ring() != e.source()) throw OwnerMismatch("witt_action: Witt coefficient is not in the source ring");
  if (x[0].ring() != e.target()) throw OwnerMismatch("witt_action: nil-unit is not over the target ring");
  if (m == 0) throw Error("witt_action: basic index must be at least 1");
  using P = NilUnit<Base>;
  const std::size_t d = x.degree();
  const auto& b = e.target();
  if (m > d) return P::constant(b->one(), d);  // only powers of t divisible by m survive the norm
  const Element<Base> fa = e(a);

  // x(st) = sum_j s^j P_j(t), P_j = sum_{k = j mod m} c_k fa^{k div m} t^k
  std::vector<P> parts(m, P(b->zero(), d));
  Element<Base> pw = b->one();
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0 && k % m == 0) pw *= fa;
    parts[k % m][k] = x[k] * pw;
  }
  const P zero(b->zero(), d), one = P::constant(b->one(), d);
  const P fa_const = P::constant(fa, d);
  Matrix<P> mult(m, m, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t r = (i + j) % m;
      mult(r, i) += i + j >= m ? parts[j] * fa_const : parts[j];
    }
  return determinant(mult, one);
}

/// w * x for a Witt vector w over A (level >= D) and a nil-unit x over B.
template <class Base>
NilUnit<Base> witt_action(const Extension<Base>& e, const WittVector<Base>& w, const NilUnit<Base>& x) {
  const std::size_t d = x.degree();
  if (w.ring() != e.source()) throw OwnerMismatch("witt_action: Witt vector is not over the source ring");
  if (w.level() < d)
    throw OwnerMismatch("witt_action: Witt vector level " + std::to_string(w.level()) + " is below the truncation " +
                        std::to_string(d));
  const auto a = basic_factorization(w.truncated(d));
  NilUnit<Base> out = NilUnit<Base>::constant(e.target()->one(), d);
  for (std::size_t n = 1; n <= d; ++n)
    if (!a[n].is_zero()) out = out * basic_action(e, a[n], n, x);
  return out;
}

/// Elements of A used as generators in the continuity search.
inline std::vector<ModElement> continuity_generators(const RingPtr<ModularBase>& a) {
  if (a->cardinality() <= 256) return elements(a);
  std::vector<ModElement> gens;
  for (std::size_t i = 0; i < a->rank(); ++i) gens.push_back(a->basis(i));
  return gens;
}

/**
 * Least m such that (1 - a t^n) * x is trivial in NPic for every generator a
 * and every m <= n <= ceiling; nullopt when none exists below the ceiling.
 * Basics with n > D act trivially in the degree-D truncation.
 */
inline std::optional<std::size_t> continuity_bound(const ModExtension& e, const NilUnitGroup& npic,
                                                   const NilUnit<ModularBase>& x, std::size_t ceiling) {
  const std::size_t d = x.degree();
  std::size_t m = 1;
  const auto gens = continuity_generators(e.source());
  for (std::size_t n = std::min(ceiling, d); n >= 1; --n) {
    bool trivial = true;
    for (const auto& a : gens)
      if (!npic.is_identity(basic_action(e, a, n, x))) {
        trivial = false;
        break;
      }
    if (!trivial) {
      m = n + 1;
      break;
    }
  }
  if (m > ceiling) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------- Pic(f)

struct PicGroup {
  FiniteGroup<ModElement> units_a;
  FiniteGroup<ModElement> units_b;
  FiniteGroup<ModElement> pic;  // B^x / f(A^x), classes represented by units of B

  /// The boundary U(B) -> Pic(f), b -> [O, b].
  std::vector<std::int64_t> boundary(const ModElement& b) const { return pic.coordinates(b); }
};

inline PicGroup pic_group(const ModExtension& e, std::size_t bound = kDefaultEnumerationBound) {
  FiniteGroup<ModElement> ua = unit_group(e.source(), bound);
  FiniteGroup<ModElement> ub = unit_group(e.target(), bound);
  std::vector<ModElement> image;
  for (std::size_t i = 0; i < ua.rank(); ++i) image.push_back(e(ua.generator(i)));
  FiniteGroup<ModElement> pic = quotient(ub, image);
  return PicGroup{std::move(ua), std::move(ub), std::move(pic)};
}

/// Whether units b1, b2 of B define the same class A.b1 = A.b2 in Pic(f),
/// i.e. differ by a unit coming from A.
template <class Base>
bool same_class(const Extension<Base>& e, const Element<Base>& b1, const Element<Base>& b2) {
  auto inv = try_invert(b2);
  if (!inv || !is_unit(b1)) throw Error("same_class: representatives must be units of " + e.target()->name());
  auto pre = e.map().preimage(b1 * *inv);
  return pre && is_unit(*pre);
}

struct SequenceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PicSequenceReport {
  std::string extension;
  AbGroup units_a, units_b, pic;
  std::vector<SequenceCheck> checks;
  bool exact() const {
    return std::all_of(checks.begin(), checks.end(), [](const SequenceCheck& c) { return c.passed; });
  }
};

/**
 * Exactness of U(A) -> U(B) -> Pic(f) -> Pic(A) = 0 with Pic(A) = Pic(B) = 0:
 * the boundary is onto and its kernel is exactly f(U(A)). Kernel membership
 * is decided independently of the quotient coordinates, by solving f(a) = b
 * and testing that a is a unit.
 */
inline PicSequenceReport verify_pic_sequence(const ModExtension& e, std::size_t bound = kDefaultEnumerationBound) {
  PicGroup pg = pic_group(e, bound);
  PicSequenceReport rep{e.name(), pg.units_a.structure(), pg.units_b.structure(), pg.pic.structure(), {}};

  bool hom = true;
  for (const auto& x : pg.units_a.elements())
    if (!is_unit(e(x))) hom = false;
  rep.checks.push_back({"f maps U(A) into U(B)", hom, ""});

  std::map<std::vector<std::int64_t>, std::size_t> hit;
  bool kernel_ok = true;
  std::size_t kernel_size = 0;
  for (const auto& b : pg.units_b.elements()) {
    auto c = pg.boundary(b);
    ++hit[c];
    const bool in_kernel = std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
    auto pre = e.map().preimage(b);
    const bool from_a = pre && is_unit(*pre);
    if (in_kernel != from_a) kernel_ok = false;
    kernel_size += in_kernel;
  }
  rep.checks.push_back({"ker(boundary) = im(U(A))", kernel_ok, "kernel order " + std::to_string(kernel_size)});

  const bool onto = hit.size() == static_cast<std::size_t>(pg.pic.order());
  rep.checks.push_back({"boundary onto Pic(f)", onto, "Pic(f) = " + pg.pic.structure().to_string()});

  const bool orders = static_cast<std::int64_t>(kernel_size) * pg.pic.order() == pg.units_b.order();
  rep.checks.push_back({"|U(B)| = |im U(A)| * |Pic(f)|", orders, ""});

  // f is injective, so U(A) -> U(B) is injective and |im U(A)| = |U(A)|
  rep.checks.push_back({"U(A) -> U(B) injective", static_cast<std::int64_t>(kernel_size) == pg.units_a.order(),
                        "|U(A)| = " + std::to_string(pg.units_a.order())});
  return rep;
}

}  // namespace relk
