#pragma once

/**
 * @file relk0.hpp
 * @brief Relative K_0 of an extension f: A -> B of artinian rings.
 *
 * Elements are triples [A^n, alpha, A^n] with alpha in GL_n(B). Over a
 * finite product of local rings every projective is free, and
 * reduce() brings alpha to diag(u, 1, ..., 1) by elementary operations on
 * each local component, so K_0(f) is read off as the class of u in
 * B^x / f(A^x) (SK_0(f) = 0 in this setting).
 */

#include "relk/matrix.hpp"
#include "relk/relpic.hpp"

#include <random>
#include <set>
#include <unordered_set>

namespace relk {

template <class Base>
using BMatrix = Matrix<Element<Base>>;

template <class Base>
struct K0Triple {
  BMatrix<Base> alpha;  // invertible over B; represents [A^n, alpha, A^n]
  std::size_t size() const { return alpha.rows(); }
};

/// Whether det(alpha) is a unit of B.
template <class Base>
bool is_invertible(const RingPtr<Base>& b, const BMatrix<Base>& alpha) {
  if (alpha.rows() != alpha.cols()) return false;
  if (alpha.rows() == 0) return true;
  return is_unit(determinant(alpha, b->one()));
}

/// The triple [A^n, g, A^n] for g in GL_n(B).
template <class Base>
K0Triple<Base> boundary(const Extension<Base>& e, const BMatrix<Base>& g) {
  if (!is_invertible(e.target(), g)) throw Error("boundary: matrix is not invertible over " + e.target()->name());
  return K0Triple<Base>{g};
}

/// Inverse of x inside the component eR (identity e), if x e is a unit there.
template <class Base>
std::optional<Element<Base>> component_inverse(const Element<Base>& x, const Element<Base>& e) {
  const auto& r = x.ring();
  auto inv = try_invert(x * e + (r->one() - e));
  if (!inv) return std::nullopt;
  return *inv * e;
}

/// A unit u of B with [A^n, alpha, A^n] = [A, u, A]: the product of the pivots
/// left after eliminating alpha by elementary row operations on every local
/// component. The pivot in each column is the first unit at or below the
/// diagonal.
template <class Base>
Element<Base> reduce(const Extension<Base>& e, const K0Triple<Base>& t,
                     std::size_t bound = kDefaultEnumerationBound) {
  const auto& b = e.target();
  const std::size_t n = t.size();
  Element<Base> u = b->zero();
  for (const auto& comp : idempotents(b, bound).primitive) {
    BMatrix<Base> m = t.alpha.mapped([&](const Element<Base>& x) { return x * comp; });
    Element<Base> prod = comp;
    for (std::size_t c = 0; c < n; ++c) {
      std::optional<std::size_t> pivot;
      for (std::size_t r = c; r < n && !pivot; ++r)
        if (component_inverse(m(r, c), comp)) pivot = r;
      if (!pivot) throw Error("reduce: no unit pivot in column " + std::to_string(c) + " over " + b->name() +
                              " (matrix not invertible, or ring not semilocal)");
      if (*pivot != c) {
        // row_c += row_pivot keeps the determinant; in a local ring the new entry is a unit
        for (std::size_t j = 0; j < n; ++j) m(c, j) += m(*pivot, j);
      }
      auto pinv = component_inverse(m(c, c), comp);
      if (!pinv) throw Error("reduce: component " + comp.str() + " of " + b->name() + " is not local");
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) continue;
        Element<Base> q = m(r, c) * *pinv;
        for (std::size_t j = 0; j < n; ++j) m(r, j) -= q * m(c, j);
      }
      prod *= m(c, c);
    }
    u += prod;
  }
  if (n == 0) return b->one();
  return u;
}

/// det(alpha), a representative of the class det[A^n, alpha, A^n] in B^x / f(A^x).
template <class Base>
Element<Base> det_map(const K0Triple<Base>& t) {
  if (t.size() == 0) throw Error("det_map: empty triple has no ring");
  return determinant(t.alpha, t.alpha(0, 0).ring()->one());
}

/// lambda^i [A^n, alpha, A^n] = [Lambda^i A^n, Lambda^i alpha, Lambda^i A^n].
template <class Base>
K0Triple<Base> lambda_op(std::size_t i, const K0Triple<Base>& t, const RingPtr<Base>& b) {
  return K0Triple<Base>{compound(t.alpha, i, b->one())};
}

/**
 * Whitney sum law at the matrix level: Lambda^k(alpha + beta) equals the
 * block sum over i + j = k of Lambda^i alpha (x) Lambda^j beta, once the
 * k-subsets of the disjoint union are matched with pairs of subsets.
 */
template <class Base>
bool whitney_sum_holds(const RingPtr<Base>& b, const BMatrix<Base>& alpha, const BMatrix<Base>& beta, std::size_t k) {
  const std::size_t n = alpha.rows(), m = beta.rows();
  const Element<Base> one = b->one();
  BMatrix<Base> lhs = compound(block_sum(alpha, beta), k, one);
  auto subs = subsets(n + m, k);
  // position of each k-subset (I, n + J) inside the block for |I| = i
  for (std::size_t x = 0; x < subs.size(); ++x)
    for (std::size_t y = 0; y < subs.size(); ++y) {
      auto split = [&](const std::vector<std::size_t>& s) {
        std::vector<std::size_t> i_part, j_part;
        for (auto v : s) (v < n ? i_part : j_part).push_back(v < n ? v : v - n);
        return std::make_pair(i_part, j_part);
      };
      auto [ix, jx] = split(subs[x]);
      auto [iy, jy] = split(subs[y]);
      Element<Base> expected = b->zero();
      if (ix.size() == iy.size()) {
        BMatrix<Base> la = compound(alpha, ix.size(), one), lb = compound(beta, jx.size(), one);
        auto sa = subsets(n, ix.size()), sb = subsets(m, jx.size());
        auto pos = [](const auto& list, const auto& v) {
          return static_cast<std::size_t>(std::find(list.begin(), list.end(), v) - list.begin());
        };
        expected = la(pos(sa, ix), pos(sa, iy)) * lb(pos(sb, jx), pos(sb, jy));
      }
      if (lhs(x, y) != expected) return false;
    }
  return true;
}

/// Uniformly random n x n matrix over a finite ring, or with small integer
/// coordinates over a Q-algebra.
template <class Base>
BMatrix<Base> random_matrix(const RingPtr<Base>& r, std::size_t n, std::mt19937_64& rng) {
  BMatrix<Base> m(n, n, r->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename Base::Coeff> c(r->rank());
      for (std::size_t k = 0; k < r->rank(); ++k) {
        if constexpr (Base::finite) {
          c[k] = std::uniform_int_distribution<std::int64_t>(0, r->orders()[k] - 1)(rng);
        } else {
          c[k] = Rational(std::uniform_int_distribution<int>(-3, 3)(rng));
        }
      }
      m(i, j) = r->element(std::move(c));
    }
  return m;
}

template <class Base>
BMatrix<Base> random_invertible(const RingPtr<Base>& r, std::size_t n, std::mt19937_64& rng, int attempts = 10000) {
  for (int i = 0; i < attempts; ++i) {
    BMatrix<Base> m = random_matrix(r, n, rng);
    if (is_invertible(r, m)) return m;
  }
  throw Error("random_invertible: no invertible matrix found over " + r->name());
}

// ------------------------------------------------------------ boundary exactness

namespace detail {

struct MatrixKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

inline std::vector<std::int64_t> matrix_key(const BMatrix<ModularBase>& m) {
  std::vector<std::int64_t> k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.insert(k.end(), m(i, j).coords().begin(), m(i, j).coords().end());
  return k;
}

inline std::vector<BMatrix<ModularBase>> all_matrices(const RingPtr<ModularBase>& r, std::size_t n, std::size_t bound) {
  auto elems = elements(r, bound);
  const std::size_t cells = n * n;
  double total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<double>(elems.size());
  if (total > static_cast<double>(bound)) throw EnumerationBoundExceeded("all_matrices: too many matrices");
  std::vector<BMatrix<ModularBase>> out;
  std::vector<std::size_t> idx(cells, 0);
  for (;;) {
    BMatrix<ModularBase> m(n, n, r->zero());
    for (std::size_t c = 0; c < cells; ++c) m(c / n, c % n) = elems[idx[c]];
    out.push_back(std::move(m));
    std::size_t c = 0;
    while (c < cells && ++idx[c] == elems.size()) idx[c++] = 0;
    if (c == cells) break;
  }
  return out;
}

}  // namespace detail

struct BoundaryExactnessReport {
  std::size_t n = 0;
  std::size_t gl_order = 0;       // |GL_n(B)|
  std::size_t kernel_order = 0;   // |ker(reduce o boundary)|
  std::size_t subgroup_order = 0; // |<f(GL_n(A)), E_n(B)>|
  bool exact() const { return kernel_order == subgroup_order; }
};

/**
 * Compares, by enumeration, the kernel of reduce o boundary on GL_n(B) with
 * the subgroup generated by f(GL_n(A)) and the elementary matrices of B.
 */
inline BoundaryExactnessReport verify_boundary_exactness(const ModExtension& e, std::size_t n,
                                                         std::size_t bound = kDefaultEnumerationBound) {
  const auto& b = e.target();
  const ModElement one = b->one();
  BoundaryExactnessReport rep;
  rep.n = n;
  std::unordered_set<std::vector<std::int64_t>, detail::MatrixKeyHash> kernel;
  for (const auto& m : detail::all_matrices(b, n, bound)) {
    if (!is_invertible(b, m)) continue;
    ++rep.gl_order;
    if (same_class(e, reduce(e, K0Triple<ModularBase>{m}, bound), one)) kernel.insert(detail::matrix_key(m));
  }
  rep.kernel_order = kernel.size();

  std::vector<BMatrix<ModularBase>> gens;
  for (const auto& m : detail::all_matrices(e.source(), n, bound))
    if (is_invertible(e.source(), m)) gens.push_back(m.mapped([&](const ModElement& x) { return e(x); }));
  for (const auto& x : elements(b, bound))
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        BMatrix<ModularBase> el = BMatrix<ModularBase>::identity(n, one);
        el(i, j) = x;
        gens.push_back(std::move(el));
      }
  std::unordered_set<std::vector<std::int64_t>, detail::MatrixKeyHash> seen;
  std::vector<BMatrix<ModularBase>> frontier{BMatrix<ModularBase>::identity(n, one)};
  seen.insert(detail::matrix_key(frontier.front()));
  while (!frontier.empty()) {
    std::vector<BMatrix<ModularBase>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        BMatrix<ModularBase> p = m * g;
        if (seen.insert(detail::matrix_key(p)).second) {
          if (!kernel.count(detail::matrix_key(p))) {
            rep.subgroup_order = seen.size();
            return rep;  // a generated element outside the kernel: inexact
          }
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  rep.subgroup_order = seen.size();
  return rep;
}

// ------------------------------------------------------------ excision

struct ExcisionReport {
  std::string config;
  AbGroup k0_f, k0_fbar;
  bool ideal_ok = false;
  bool iso = false;
  std::string detail;
};

/**
 * For an ideal I of A (given by generators) whose image is an ideal of B:
 * compares K_0(f) = B^x / A^x with K_0(fbar) = (B/I)^x / (A/I)^x through the
 * map induced by B -> B/I, and decides whether it is an isomorphism.
 */
inline ExcisionReport excision_check(const ModExtension& e, const std::vector<ModElement>& ideal,
                                     std::string config = {}, std::size_t bound = kDefaultEnumerationBound) {
  ExcisionReport rep;
  rep.config = config.empty() ? e.name() : std::move(config);
  const auto& a = e.source();
  const auto& b = e.target();
  std::vector<ModElement> ia = ideal_generators(a, ideal);
  std::vector<ModElement> fi;
  for (const auto& x : ia) fi.push_back(e(x));
  // f(I) must already be closed under multiplication by B
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& x : fi) cols.push_back(x.coords());
  bool ideal_ok = true;
  if (!cols.empty()) {
    SpanSolver<ModularBase> span(*b, cols);
    for (const auto& x : fi)
      for (std::size_t i = 0; i < b->rank(); ++i)
        if (!span.contains((x * b->basis(i)).coords())) ideal_ok = false;
  }
  rep.ideal_ok = ideal_ok;
  if (!ideal_ok) {
    rep.detail = "f(I) is not an ideal of " + b->name();
    return rep;
  }
  PicGroup pg = pic_group(e, bound);
  rep.k0_f = pg.pic.structure();

  QuotientRing qa = quotient_ring(a, ia, a->name() + "/I");
  QuotientRing qb = quotient_ring(b, fi, b->name() + "/I");
  if (qa.ring->is_zero_ring() || qb.ring->is_zero_ring()) {
    // I is the unit ideal: both quotients vanish and so does K_0(fbar)
    rep.k0_fbar = AbGroup();
    rep.iso = pg.pic.order() == 1;
    rep.detail = "unit ideal";
    return rep;
  }
  std::vector<ModElement> images;
  for (std::size_t i = 0; i < qa.ring->rank(); ++i) {
    auto lift = qa.projection.preimage(qa.ring->basis(i));
    images.push_back(qb.projection(e(*lift)));
  }
  ModExtension ebar(e.name() + "/I", RingMap<ModularBase>(qa.ring, qb.ring, std::move(images)), bound);
  PicGroup pgbar = pic_group(ebar, bound);
  rep.k0_fbar = pgbar.pic.structure();

  // the induced map on classes, checked to be a bijective homomorphism
  std::set<std::vector<std::int64_t>> hit;
  for (const auto& cls : pg.pic.elements()) hit.insert(pgbar.pic.coordinates(qb.projection(cls)));
  bool hom = true;
  for (std::size_t i = 0; i < pg.pic.rank(); ++i)
    for (std::size_t j = 0; j < pg.pic.rank(); ++j) {
      auto gi = pg.pic.generator(i), gj = pg.pic.generator(j);
      auto lhs = pgbar.pic.coordinates(qb.projection(gi * gj));
      auto x = pgbar.pic.coordinates(qb.projection(gi)), y = pgbar.pic.coordinates(qb.projection(gj));
      for (std::size_t k = 0; k < x.size(); ++k)
        if (lhs[k] != mod_floor(x[k] + y[k], pgbar.pic.dims()[k])) hom = false;
    }
  rep.iso = hom && hit.size() == static_cast<std::size_t>(pgbar.pic.order()) && pg.pic.order() == pgbar.pic.order();
  rep.detail = "map on classes " + std::string(rep.iso ? "bijective" : "not bijective");
  return rep;
}

// ------------------------------------------------------------ subintegrality

struct SubintegralReport {
  std::string extension;
  bool subintegral = false;
  std::string reason;
  std::size_t components_a = 0, components_b = 0;
  IntMatrix k0_map;           // K_0(A) = Z^{r_A} -> K_0(B) = Z^{r_B}
  AbGroup kernel_k0, cokernel_k0;
  AbGroup pic;                // B^x / f(A^x)
  std::size_t triples_checked = 0;
  bool det_iso = false;       // reduce agrees with det on every sampled triple
  bool sequence_exact = false;
  bool passed() const { return subintegral && det_iso && sequence_exact; }
};

/// Residue field size of the local ring eR: |eR| / |e Nil(R)|.
inline Integer residue_field_size(const RingPtr<ModularBase>& r, const Nilradical<ModularBase>& nil, const ModElement& e) {
  std::vector<std::vector<std::int64_t>> all, nilpart;
  for (std::size_t i = 0; i < r->rank(); ++i) all.push_back((e * r->basis(i)).coords());
  for (const auto& x : nil.basis) nilpart.push_back((e * x).coords());
  Integer whole = SpanSolver<ModularBase>(*r, all).span_size();
  Integer rad = nilpart.empty() ? Integer(1) : SpanSolver<ModularBase>(*r, nilpart).span_size();
  return whole / rad;
}

inline SubintegralReport subintegral_report(const ModExtension& e, std::size_t triples, std::uint64_t seed,
                                            std::size_t bound = kDefaultEnumerationBound) {
  SubintegralReport rep;
  rep.extension = e.name();
  const auto comps_a = idempotents(e.source(), bound).primitive;
  const auto comps_b = idempotents(e.target(), bound).primitive;
  rep.components_a = comps_a.size();
  rep.components_b = comps_b.size();

  rep.k0_map = IntMatrix(comps_b.size(), comps_a.size());
  bool bijective = true, fields_equal = true;
  for (std::size_t i = 0; i < comps_a.size(); ++i) {
    const ModElement fe = e(comps_a[i]);
    std::size_t above = 0;
    for (std::size_t j = 0; j < comps_b.size(); ++j)
      if (fe * comps_b[j] == comps_b[j]) {
        rep.k0_map(j, i) = 1;
        ++above;
        Integer ka = residue_field_size(e.source(), e.source_nilradical(), comps_a[i]);
        Integer kb = residue_field_size(e.target(), e.target_nilradical(), comps_b[j]);
        if (ka != kb) {
          fields_equal = false;
          rep.reason = "residue field grows from order " + ka.str() + " to " + kb.str();
        }
      }
    if (above != 1) {
      bijective = false;
      rep.reason = "Spec(B) -> Spec(A) is not bijective (" + std::to_string(above) + " primes over one prime)";
    }
  }
  rep.subintegral = bijective && fields_equal;
  if (rep.subintegral) rep.reason = "Spec bijection with equal residue fields";

  // 1 -> B^x/A^x -> K_0(f) -> K_0(A) -> K_0(B) -> 0
  rep.kernel_k0 = homology(AbComplex{{IntMatrix(comps_a.size(), 0), IntMatrix(comps_b.size(), 0)}, {rep.k0_map}}, 0);
  rep.cokernel_k0 = AbGroup::from_relations(comps_b.size(), rep.k0_map);
  rep.pic = pic_group(e, bound).pic.structure();

  if (!rep.subintegral) return rep;
  // K_0(f) -> K_0(A) has image ker(K_0(A) -> K_0(B)); both ends vanish exactly
  // when K_0(A) -> K_0(B) is an isomorphism, leaving K_0(f) = B^x/A^x.
  rep.sequence_exact = rep.kernel_k0.is_trivial() && rep.cokernel_k0.is_trivial();

  std::mt19937_64 rng(seed);
  bool agree = true;
  for (std::size_t k = 0; k < triples; ++k) {
    const std::size_t n = 1 + k % 3;
    K0Triple<ModularBase> t{random_invertible(e.target(), n, rng)};
    if (!same_class(e, reduce(e, t, bound), det_map(t))) agree = false;
  }
  rep.triples_checked = triples;
  rep.det_iso = agree;
  return rep;
}

}  // namespace relk
