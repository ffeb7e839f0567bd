#pragma once

/**
 * @file ring_ops.hpp
 * @brief Units, nilradicals, idempotents, component rings, quotients and
 *        localizations of artinian rings.
 *
 * Finite rings are handled by exact enumeration (bounded by an explicit
 * cap) and integer linear algebra. Q-algebras use linear algebra over Q:
 * the nilradical is the kernel of the trace form, and primitive idempotents
 * are found by splitting minimal polynomials of generic elements.
 */

#include "relk/abelian.hpp"
#include "relk/ring.hpp"

#include <algorithm>
#include <random>

namespace relk {

/// b with a*b = 1, or nullopt when a is not a unit.
template <class Base>
std::optional<Element<Base>> try_invert(const Element<Base>& a) {
  const auto& r = a.ring();
  std::vector<std::vector<typename Base::Coeff>> cols;
  for (std::size_t i = 0; i < r->rank(); ++i) cols.push_back((a * r->basis(i)).coords());
  SpanSolver<Base> solver(*r, std::move(cols));
  auto x = solver.solve(r->one().coords());
  if (!x) return std::nullopt;
  return r->element(*x);
}

template <class Base>
bool is_unit(const Element<Base>& a) {
  return try_invert(a).has_value();
}

/// Every element of a finite ring, in mixed-radix coordinate order.
inline std::vector<ModElement> elements(const RingPtr<ModularBase>& r, std::size_t bound = kDefaultEnumerationBound) {
  if (r->cardinality() > bound)
    throw EnumerationBoundExceeded(r->name() + " has " + r->cardinality().str() + " elements, above the bound " +
                                   std::to_string(bound));
  std::vector<ModElement> out;
  const auto& d = r->orders();
  std::vector<std::int64_t> c(r->rank(), 0);
  for (;;) {
    out.push_back(r->element(c));
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == d[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

template <class Base>
bool is_nilpotent(const Element<Base>& a) {
  const auto& r = a.ring();
  std::uint64_t e;
  if constexpr (Base::finite) {
    // strictly decreasing chain aR > a^2R > ... has length at most log2 |R|
    e = static_cast<std::uint64_t>(msb(r->cardinality())) + 2;
  } else {
    e = r->rank() + 1;
  }
  return a.pow(e).is_zero();
}

/// Greedy subset of `candidates` spanning the same submodule.
template <class Base>
std::vector<Element<Base>> spanning_subset(const RingPtr<Base>& r, const std::vector<Element<Base>>& candidates) {
  std::vector<Element<Base>> kept;
  std::vector<std::vector<typename Base::Coeff>> cols;
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    if (!cols.empty() && SpanSolver<Base>(*r, cols).contains(c.coords())) continue;
    kept.push_back(c);
    cols.push_back(c.coords());
  }
  return kept;
}

template <class Base>
struct Nilradical {
  std::vector<Element<Base>> basis;  // generating set of Nil(R) over the base
  std::size_t index = 1;             // least e with Nil^e = 0
};

namespace detail {

template <class Base>
std::size_t nilpotency_index(const RingPtr<Base>& r, const std::vector<Element<Base>>& gens) {
  std::size_t e = 1;
  std::vector<Element<Base>> power = gens;
  while (!power.empty()) {
    std::vector<Element<Base>> next;
    for (const auto& x : power)
      for (const auto& y : gens) next.push_back(x * y);
    power = spanning_subset(r, next);
    ++e;
    if (e > 64 + r->rank() * 64) throw Error("nilpotency_index: ideal powers do not vanish");
  }
  return e;
}

/// Null space of a square matrix over Q (rows given), as basis vectors.
inline std::vector<std::vector<Rational>> rational_null_space(std::vector<std::vector<Rational>> a, std::size_t n) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

template <class Base>
typename Base::Coeff trace(const Element<Base>& x) {
  const auto& r = x.ring();
  typename Base::Coeff t = 0;
  for (std::size_t k = 0; k < r->rank(); ++k) t += (x * r->basis(k))[k];
  return t;
}

}  // namespace detail

template <class Base>
Nilradical<Base> nilradical(const RingPtr<Base>& r, std::size_t bound = kDefaultEnumerationBound) {
  Nilradical<Base> out;
  if constexpr (Base::finite) {
    std::vector<ModElement> nil;
    for (const auto& x : elements(r, bound))
      if (!x.is_zero() && is_nilpotent(x)) nil.push_back(x);
    out.basis = spanning_subset(r, nil);
  } else {
    // char 0: Nil(R) is the radical of the trace form Tr(xy)
    const std::size_t n = r->rank();
    std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) form[i][j] = detail::trace(r->basis(i) * r->basis(j));
    for (auto& v : detail::rational_null_space(std::move(form), n)) out.basis.push_back(r->element(v));
  }
  out.index = detail::nilpotency_index(r, out.basis);
  return out;
}

template <class Base>
struct Idempotents {
  std::vector<Element<Base>> all;        // every idempotent
  std::vector<Element<Base>> primitive;  // the components; pairwise orthogonal, summing to 1
  std::size_t components() const { return primitive.size(); }
};

namespace detail {

// dense polynomials over Q, coefficients low to high
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly qmonic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

/// (g, u, v) with u a + v b = g = gcd(a, b), g monic.
inline std::tuple<QPoly, QPoly, QPoly> qxgcd(QPoly a, QPoly b) {
  QPoly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = qdivmod(a, b);
    QPoly u2 = qsub(u0, qmul(q, u1)), v2 = qsub(v0, qmul(q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  Rational lead = a.back();
  for (auto* p : {&a, &u0, &v0})
    for (auto& c : *p) c /= lead;
  return {a, u0, v0};
}

inline QPoly qderivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
  trim(d);
  return d;
}

inline Rational qeval(const QPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer(1'000'000'000'000LL)) throw Unsupported("rational root search: coefficient too large to factor");
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Distinct rational roots of p.
inline std::vector<Rational> rational_roots(QPoly p) {
  trim(p);
  std::vector<Rational> roots;
  while (!p.empty() && p.front() == 0) {
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
    p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  Integer den = 1;
  for (const auto& c : p) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  std::vector<Integer> ip;
  for (const auto& c : p) ip.push_back(boost::multiprecision::numerator(Rational(c * den)));
  for (const auto& a : divisors(ip.front()))
    for (const auto& b : divisors(ip.back()))
      for (int sgn : {1, -1}) {
        Rational cand(Integer(sgn) * a, b);
        if (qeval(p, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  return roots;
}

/// q(x) in the component ring eR, with e acting as 1.
template <class Base>
Element<Base> evaluate(const QPoly& q, const Element<Base>& x, const Element<Base>& e) {
  Element<Base> acc = x.ring()->zero();
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * x + e.scaled(q[i]);
  return acc;
}

/// Minimal polynomial of x acting on eR (monic), via the Krylov sequence of e.
inline QPoly minimal_polynomial(const QElement& x, const QElement& e) {
  const auto& r = x.ring();
  std::vector<std::vector<Rational>> cols;
  QElement p = e;
  for (std::size_t k = 0; k <= r->rank(); ++k) {
    if (!cols.empty()) {
      SpanSolver<RationalBase> s(*r, cols);
      if (auto c = s.solve(p.coords())) {
        QPoly mu(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) mu[i] = -(*c)[i];
        mu[k] = 1;
        return mu;
      }
    } else if (p.is_zero()) {
      return {Rational(1)};
    }
    cols.push_back(p.coords());
    p = p * x;
  }
  throw Error("minimal_polynomial: Krylov sequence did not terminate");
}

/// Splits the component eR of a Q-algebra, or confirms it is local.
inline std::vector<QElement> split_rational_component(const QElement& e, const Nilradical<RationalBase>& nil) {
  const auto& r = e.ring();
  std::vector<QElement> spanning, nil_part;
  for (std::size_t i = 0; i < r->rank(); ++i) spanning.push_back(e * r->basis(i));
  for (const auto& n : nil.basis) nil_part.push_back(e * n);
  const std::size_t dim = spanning_subset(r, spanning).size();
  const std::size_t reduced_dim = dim - spanning_subset(r, nil_part).size();
  if (reduced_dim <= 1) return {e};

  std::mt19937_64 rng(0x5eedULL + r->rank());
  std::uniform_int_distribution<int> coeff(-5, 5);
  bool undecided = false;
  for (int attempt = 0; attempt < 40; ++attempt) {
    QElement x = r->zero();
    if (attempt < static_cast<int>(r->rank())) {
      x = e * r->basis(attempt);
    } else {
      for (std::size_t i = 0; i < r->rank(); ++i) x += r->basis(i).scaled(Rational(coeff(rng)));
      x = e * x;
    }
    QPoly mu = minimal_polynomial(x, e);
    QPoly sq = qdivmod(mu, qgcd(mu, qderivative(mu))).first;
    sq = qmonic(sq);
    std::vector<Rational> roots = rational_roots(sq);
    // coprime factorization of mu: (T - root)^mult for each root, and the rest
    std::vector<QPoly> parts;
    QPoly rest = mu;
    for (const auto& root : roots) {
      QPoly lin{-root, Rational(1)}, part{Rational(1)};
      for (;;) {
        auto [q, rem] = qdivmod(rest, lin);
        if (!rem.empty()) break;
        rest = q;
        part = qmul(part, lin);
      }
      parts.push_back(part);
    }
    QPoly rest_sq = qmonic(sq);
    for (const auto& root : roots) rest_sq = qdivmod(rest_sq, QPoly{-root, Rational(1)}).first;
    if (rest.size() > 1) parts.push_back(qmonic(rest));
    if (parts.size() >= 2) {
      std::vector<QElement> pieces;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto [q, other] = qdivmod(mu, parts[i]);
        (void)other;
        auto [g, u, v] = qxgcd(parts[i], q);
        pieces.push_back(evaluate(qmul(v, q), x, e));
      }
      return pieces;
    }
    const std::size_t irreducible_degree = rest_sq.size() - 1;
    if (roots.empty() && irreducible_degree >= 4) {
      undecided = true;
      continue;
    }
    if (roots.empty() && irreducible_degree == reduced_dim) return {e};
  }
  if (undecided)
    throw Unsupported(r->name() + ": residue fields of degree >= 4 over Q are not decided");
  throw Unsupported(r->name() + ": could not split a component over Q");
}

}  // namespace detail

template <class Base>
Idempotents<Base> idempotents(const RingPtr<Base>& r, std::size_t bound = kDefaultEnumerationBound) {
  Idempotents<Base> out;
  if (r->is_zero_ring()) {
    out.all = {r->zero()};
    return out;
  }
  if constexpr (Base::finite) {
    for (const auto& x : elements(r, bound))
      if (x * x == x) out.all.push_back(x);
    for (const auto& e : out.all) {
      if (e.is_zero()) continue;
      bool minimal = true;
      for (const auto& f : out.all)
        if (!f.is_zero() && f != e && f * e == f) {
          minimal = false;
          break;
        }
      if (minimal) out.primitive.push_back(e);
    }
  } else {
    Nilradical<Base> nil = nilradical(r, bound);
    std::vector<QElement> work{r->one()};
    while (!work.empty()) {
      QElement e = work.back();
      work.pop_back();
      auto pieces = detail::split_rational_component(e, nil);
      if (pieces.size() == 1) out.primitive.push_back(e);
      else work.insert(work.end(), pieces.begin(), pieces.end());
    }
    if (out.primitive.size() > 20) throw EnumerationBoundExceeded("idempotents: too many components to list");
    const std::size_t n = out.primitive.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      QElement s = r->zero();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s += out.primitive[i];
      out.all.push_back(s);
    }
  }
  return out;
}

/// The ring eR (identity e) with the canonical surjection R -> eR, x -> ex.
template <class Base>
struct ComponentRing {
  RingPtr<Base> ring;
  std::optional<RingMap<Base>> projection;
  Element<Base> idempotent;  // e, in R
  /// The element ex of R written in the coordinates of eR.
  std::function<Element<Base>(const Element<Base>&)> to_component;
};

template <class Base>
ComponentRing<Base> component_ring(const RingPtr<Base>& r, const Element<Base>& e, std::string name = {}) {
  using Coeff = typename Base::Coeff;
  using Vec = std::vector<Coeff>;
  if (e * e != e) throw Error("component_ring: element is not idempotent");
  if (name.empty()) name = r->name() + "[" + e.str() + "]";
  const std::size_t n = r->rank();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back((e * r->basis(i)).coords());

  typename Ring<Base>::Presentation p;
  p.name = name;
  p.kind = RingKind::Algebra;
  std::vector<Element<Base>> new_basis;  // as elements of R
  std::function<Vec(const Element<Base>&)> coords;

  if constexpr (Base::finite) {
    auto solver = std::make_shared<SpanSolver<Base>>(*r, gens);
    // relations among the generators: kernel of [gens | diag(orders)], first n rows
    std::vector<std::vector<Integer>> cols;
    for (const auto& g : gens) cols.emplace_back(g.begin(), g.end());
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> c(n, 0);
      c[i] = r->orders()[i];
      cols.push_back(std::move(c));
    }
    IntMatrix ker = integer_kernel(IntMatrix::from_columns(n, cols));
    IntMatrix rel(n, ker.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) rel(i, j) = ker(i, j);
    auto chart = std::make_shared<detail::InvariantChart>(detail::InvariantChart::from_relations(rel));
    for (std::size_t a = 0; a < chart->dims.size(); ++a) {
      std::vector<std::int64_t> y(chart->dims.size(), 0);
      y[a] = 1;
      std::vector<Integer> c = chart->lift(y);
      Element<Base> h = r->zero();
      for (std::size_t j = 0; j < n; ++j) h += r->element(gens[j]).scaled(to_int64(mod_floor(c[j], Integer(r->characteristic()))));
      new_basis.push_back(h);
      p.orders.push_back(chart->dims[a]);
    }
    coords = [solver, chart, r](const Element<Base>& x) -> Vec {
      auto c = solver->solve(x.coords());
      if (!c) throw Error("component_ring: element not in the component");
      return chart->chart(*c);
    };
  } else {
    std::vector<Element<Base>> cand;
    for (const auto& g : gens) cand.push_back(r->element(g));
    new_basis = spanning_subset(r, cand);
    std::vector<Vec> cols;
    for (const auto& b : new_basis) cols.push_back(b.coords());
    auto solver = std::make_shared<SpanSolver<Base>>(*r, cols);
    coords = [solver](const Element<Base>& x) -> Vec {
      auto c = solver->solve(x.coords());
      if (!c) throw Error("component_ring: element not in the component");
      return *c;
    };
  }
  const std::size_t m = new_basis.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (m == 1 && new_basis[a] == e) p.labels.push_back("1");
    else p.labels.push_back("g" + std::to_string(a));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) p.products.push_back(coords(new_basis[a] * new_basis[b]));
  p.one = coords(e);
  RingPtr<Base> sub = Ring<Base>::create(std::move(p));

  std::vector<Element<Base>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(sub->element(coords(e * r->basis(i))));
  ComponentRing<Base> out{sub, RingMap<Base>(r, sub, std::move(images)), e, {}};
  out.to_component = [coords, sub, e](const Element<Base>& x) { return sub->element(coords(e * x)); };
  return out;
}

/// R/I for the ideal generated by `ideal_gens`, with the projection R -> R/I.
struct QuotientRing {
  RingPtr<ModularBase> ring;
  RingMap<ModularBase> projection;
  std::vector<ModElement> ideal_span;  // generating set of I over Z
};

inline std::vector<ModElement> ideal_generators(const RingPtr<ModularBase>& r, const std::vector<ModElement>& gens) {
  std::vector<ModElement> span;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < r->rank(); ++i) span.push_back(g * r->basis(i));
  return spanning_subset(r, span);
}

inline QuotientRing quotient_ring(const RingPtr<ModularBase>& r, const std::vector<ModElement>& gens, std::string name = {}) {
  if (name.empty()) name = r->name() + "/I";
  const std::size_t n = r->rank();
  std::vector<ModElement> ideal = ideal_generators(r, gens);
  std::vector<std::vector<Integer>> cols;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> c(n, 0);
    c[i] = r->orders()[i];
    cols.push_back(std::move(c));
  }
  for (const auto& g : ideal) cols.emplace_back(g.coords().begin(), g.coords().end());
  auto chart = std::make_shared<detail::InvariantChart>(
      detail::InvariantChart::from_relations(IntMatrix::from_columns(n, cols)));
  auto project = [chart, n](const ModElement& x) {
    return chart->chart(std::vector<std::int64_t>(x.coords().begin(), x.coords().end()));
  };
  ModRing::Presentation p;
  p.name = name;
  p.kind = RingKind::Algebra;
  std::vector<ModElement> lifts;
  for (std::size_t a = 0; a < chart->dims.size(); ++a) {
    std::vector<std::int64_t> y(chart->dims.size(), 0);
    y[a] = 1;
    std::vector<Integer> c = chart->lift(y);
    std::vector<std::int64_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = to_int64(mod_floor(c[j], Integer(r->orders()[j])));
    lifts.push_back(r->element(v));
    p.orders.push_back(chart->dims[a]);
    p.labels.push_back("q" + std::to_string(a));
  }
  if (lifts.size() == 1 && project(r->one()) == std::vector<std::int64_t>{1}) p.labels[0] = "1";
  for (const auto& a : lifts)
    for (const auto& b : lifts) p.products.push_back(project(a * b));
  p.one = project(r->one());
  auto q = ModRing::create(std::move(p));
  std::vector<ModElement> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(q->element(project(r->basis(i))));
  return QuotientRing{q, RingMap<ModularBase>(r, q, std::move(images)), std::move(ideal)};
}

/// R_s for artinian R: the product of the components on which s is a unit.
template <class Base>
struct Localization {
  RingPtr<Base> ring;
  RingMap<Base> map;
  Element<Base> idempotent;
};

template <class Base>
Localization<Base> localize(const RingPtr<Base>& r, const Element<Base>& s, std::size_t bound = kDefaultEnumerationBound) {
  if (s.ring() != r) throw OwnerMismatch("localize: element not in ring");
  Idempotents<Base> idem = idempotents(r, bound);
  Element<Base> e = r->zero();
  for (const auto& p : idem.primitive)
    if (!is_nilpotent(s * p)) e += p;
  if (e.is_one()) return Localization<Base>{r, RingMap<Base>::identity(r), e};
  if (e.is_zero()) {
    typename Ring<Base>::Presentation p;
    p.name = r->name() + "_0";
    auto zero_ring = Ring<Base>::create(std::move(p));
    std::vector<Element<Base>> ims(r->rank(), zero_ring->zero());
    return Localization<Base>{zero_ring, RingMap<Base>(r, zero_ring, std::move(ims)), e};
  }
  ComponentRing<Base> c = component_ring(r, e, r->name() + "_" + s.str());
  return Localization<Base>{c.ring, *c.projection, e};
}

/// The unit group of a finite ring with canonical coordinates.
inline FiniteGroup<ModElement> unit_group(const RingPtr<ModularBase>& r, std::size_t bound = kDefaultEnumerationBound) {
  std::vector<ModElement> units;
  for (const auto& x : elements(r, bound))
    if (is_unit(x)) units.push_back(x);
  return group_from_generators<ModElement>(units, r->one(), std::multiplies<ModElement>{}, bound);
}

}  // namespace relk
