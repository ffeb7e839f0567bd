#pragma once

/**
 * @file verify.hpp
 * @brief Property checks for every structural statement, grouped in suites.
 *
 * Each check returns a CheckResult with a case count and its wall time.
 * Random inputs come from std::mt19937_64 seeded by the caller, so every
 * report is reproducible from (seed, config).
 */

#include "relk/catalog.hpp"
#include "relk/negk.hpp"
#include "relk/relk0.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <unordered_set>

namespace relk {

struct SessionConfig {
  std::size_t N = 8;
  std::size_t D = 6;
  std::size_t bound = kDefaultEnumerationBound;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool skipped = false;  // the enumeration bound was hit; nothing was refuted
  std::size_t cases = 0;
  std::string detail;
  double seconds = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"witt-identities", "pic-sequence", "npic-module", "cech-exactness",
                                                 "k0-laws",         "excision",     "subintegral", "negk"};
  return names;
}

/// Accepts full suite names and the short forms witt, pic, npic, cech, k0.
inline std::string canonical_suite(const std::string& s) {
  static const std::map<std::string, std::string> alias = {
      {"witt", "witt-identities"}, {"pic", "pic-sequence"}, {"npic", "npic-module"},
      {"cech", "cech-exactness"},  {"k0", "k0-laws"}};
  if (auto it = alias.find(s); it != alias.end()) return it->second;
  for (const auto& n : suite_names())
    if (n == s) return n;
  throw InputError(0, "unknown suite '" + s + "'");
}

namespace detail {

template <class F>
CheckResult timed(std::string suite, std::string name, F&& body) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const EnumerationBoundExceeded& ex) {
    r.pass = true;
    r.skipped = true;
    r.detail = std::string("skipped: ") + ex.what();
  } catch (const Error& ex) {
    r.pass = false;
    r.detail = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// First failure wins the detail line.
inline void fail(CheckResult& r, const std::string& why) {
  if (r.pass || r.detail.empty()) r.detail = why;
  r.pass = false;
}

}  // namespace detail

template <class Base>
Element<Base> random_element(const RingPtr<Base>& r, std::mt19937_64& rng, int span = 3) {
  std::vector<typename Base::Coeff> c(r->rank());
  for (std::size_t k = 0; k < r->rank(); ++k) {
    if constexpr (Base::finite) {
      c[k] = std::uniform_int_distribution<std::int64_t>(0, r->orders()[k] - 1)(rng);
    } else {
      const int num = std::uniform_int_distribution<int>(-span, span)(rng);
      const int den = std::uniform_int_distribution<int>(1, 3)(rng);
      c[k] = Rational(num, den);
    }
  }
  return r->element(std::move(c));
}

template <class Base>
WittVector<Base> random_witt(const RingPtr<Base>& r, std::size_t level, std::mt19937_64& rng) {
  std::vector<Element<Base>> a;
  for (std::size_t k = 0; k < level; ++k) a.push_back(random_element(r, rng));
  return WittVector<Base>::from_coefficients(r, a);
}

// ------------------------------------------------------------------ witt

/// ghost(u * v) = ghost(u) . ghost(v) over Q.
inline CheckResult check_ghost_homomorphism(std::size_t level, std::size_t pairs, std::uint64_t seed) {
  return detail::timed("witt-identities", "ghost-homomorphism", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    auto q = rationals();
    r.pass = true;
    for (std::size_t i = 0; i < pairs; ++i, ++r.cases) {
      auto u = random_witt(q, level, rng), v = random_witt(q, level, rng);
      auto gu = ghost(u), gv = ghost(v), guv = ghost(witt_mul(u, v));
      for (std::size_t k = 0; k < level; ++k)
        if (guv[k] != gu[k] * gv[k]) {
          detail::fail(r, "pair " + std::to_string(i) + ": ghost component " + std::to_string(k + 1) + " differs");
          break;
        }
      auto gs = ghost(witt_add(u, v));
      for (std::size_t k = 0; k < level; ++k)
        if (gs[k] != gu[k] + gv[k]) {
          detail::fail(r, "pair " + std::to_string(i) + ": ghost of sum differs at " + std::to_string(k + 1));
          break;
        }
    }
    if (r.pass) r.detail = std::to_string(pairs) + " pairs over Q at N=" + std::to_string(level);
  });
}

namespace detail {

template <class Base>
void fv_identities(CheckResult& r, const RingPtr<Base>& ring, std::size_t level, std::size_t samples,
                   std::mt19937_64& rng) {
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t n = 1; n <= 4; ++n, ++r.cases) {
      const std::string where = ring->name() + " n=" + std::to_string(n) + " sample " + std::to_string(i);
      auto u = random_witt(ring, level, rng), v = random_witt(ring, level, rng);
      const std::size_t low = level / n;
      if (frobenius(n, verschiebung(n, u)) != witt_multiple(u, static_cast<std::int64_t>(n)).truncated(low))
        fail(r, "F_n V_n u != n u (" + where + ")");
      if (verschiebung(n, witt_add(u, v)) != witt_add(verschiebung(n, u), verschiebung(n, v)))
        fail(r, "V_n not additive (" + where + ")");
      if (frobenius(n, witt_add(u, v)) != witt_add(frobenius(n, u), frobenius(n, v)))
        fail(r, "F_n not additive (" + where + ")");
      if (frobenius(n, witt_mul(u, v)) != witt_mul(frobenius(n, u), frobenius(n, v)))
        fail(r, "F_n not multiplicative (" + where + ")");
      if (frobenius(n, WittVector<Base>::one(ring, level)) != WittVector<Base>::one(ring, low))
        fail(r, "F_n(1) != 1 (" + where + ")");
      // 1 - a t^n = V_n([a] - [0]) via characteristic series of 1x1 matrices
      const Element<Base> a = random_element(ring, rng);
      EndClass<Base> ma(1, 1, ring->zero()), m0(1, 1, ring->zero());
      ma(0, 0) = a;
      auto cls = witt_sub(almkvist(ring, ma, level), almkvist(ring, m0, level));
      if (WittVector<Base>::basic(a, n, level) != verschiebung(n, cls))
        fail(r, "1 - a t^n != V_n([a] - [0]) (" + where + ")");
    }
  }
}

template <class Base>
void projection(CheckResult& r, const RingPtr<Base>& ring, std::size_t level, std::size_t samples, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < samples; ++i, ++r.cases) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    auto alpha = random_witt(ring, level, rng), beta = random_witt(ring, level, rng);
    auto lhs = witt_mul(verschiebung(n, alpha), beta);
    auto rhs = verschiebung(n, witt_mul(alpha.truncated(level / n), frobenius(n, beta)), level);
    if (lhs != rhs) fail(r, ring->name() + " sample " + std::to_string(i) + " n=" + std::to_string(n));
  }
}

template <class Base>
void almkvist_laws(CheckResult& sum, CheckResult& prod, const RingPtr<Base>& ring, std::size_t level,
                   std::size_t samples, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    auto a = random_matrix(ring, n, rng), b = random_matrix(ring, m, rng);
    auto wa = almkvist(ring, a, level), wb = almkvist(ring, b, level);
    ++sum.cases, ++prod.cases;
    const std::string where = ring->name() + " sample " + std::to_string(i) + " (" + std::to_string(n) + "x" +
                              std::to_string(n) + ", " + std::to_string(m) + "x" + std::to_string(m) + ")";
    if (almkvist(ring, block_sum(a, b), level) != witt_add(wa, wb)) fail(sum, where);
    if (almkvist(ring, kronecker(a, b), level) != witt_mul(wa, wb)) fail(prod, where);
  }
}

}  // namespace detail

/// F_n V_n = n, V_n additive, F_n a ring map, 1 - a t^n = V_n([a] - [0]); over Q, Z/4, F_5.
inline CheckResult check_frobenius_verschiebung(std::size_t level, std::size_t samples, std::uint64_t seed) {
  return detail::timed("witt-identities", "frobenius-verschiebung", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    detail::fv_identities(r, rationals(), level, samples, rng);
    detail::fv_identities(r, integers_mod(4), level, samples, rng);
    detail::fv_identities(r, prime_field(5), level, samples, rng);
    if (r.pass) r.detail = "n <= 4 over Q, Z/4, F5 at N=" + std::to_string(level);
  });
}

/// (V_n a) * b = V_n(a * F_n b) in W_N, over Q, Z/4 and F_5.
inline CheckResult check_projection_formula(std::size_t level, std::size_t samples, std::uint64_t seed) {
  return detail::timed("witt-identities", "projection-formula", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    detail::projection(r, rationals(), level, samples, rng);
    detail::projection(r, integers_mod(4), level, samples, rng);
    detail::projection(r, prime_field(5), level, samples, rng);
    if (r.pass) r.detail = std::to_string(samples) + " triples per ring over Q, Z/4, F5 at N=" + std::to_string(level);
  });
}

/// det(1 - t(M + M')) and det(1 - t(M (x) M')) against Witt sum and product, over Z/6 and Q.
inline std::vector<CheckResult> check_almkvist(std::size_t level, std::size_t samples, std::uint64_t seed) {
  CheckResult sum, prod;
  sum.suite = prod.suite = "witt-identities";
  sum.name = "almkvist-sum";
  prod.name = "almkvist-product";
  sum.pass = prod.pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::mt19937_64 rng(seed);
    detail::almkvist_laws(sum, prod, integers_mod(6), level, samples, rng);
    detail::almkvist_laws(sum, prod, rationals(), level, samples, rng);
  } catch (const Error& ex) {
    detail::fail(sum, ex.what());
    detail::fail(prod, ex.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  sum.seconds = prod.seconds = s / 2;
  for (auto* r : {&sum, &prod})
    if (r->pass) r->detail = std::to_string(samples) + " matrix pairs (size <= 4) per ring over Z/6, Q";
  return {sum, prod};
}

// ------------------------------------------------------------------ pic

inline CheckResult check_pic_sequence(const ModExtension& e, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("pic-sequence", "pic-sequence[" + e.name() + "]", [&](CheckResult& r) {
    PicSequenceReport rep = verify_pic_sequence(e, bound);
    r.pass = rep.exact();
    r.cases = rep.checks.size();
    r.detail = "Pic(f) = " + rep.pic.to_string();
    for (const auto& c : rep.checks)
      if (!c.passed) detail::fail(r, c.name + ": " + c.detail);
  });
}

// ------------------------------------------------------------------ npic

/// Equality in NPic_D(f) by membership of x y^-1 in the image of NU(A).
class NPicComparator {
 public:
  NPicComparator(const ModExtension& e, std::size_t degree, std::size_t bound)
      : e_(&e),
        degree_(degree),
        image_(group_from_generators<NilUnit<ModularBase>, NilUnitHash>(
            image_generators(e, degree), NilUnit<ModularBase>::constant(e.target()->one(), degree),
            std::multiplies<NilUnit<ModularBase>>{}, bound)) {}

  bool equal(const NilUnit<ModularBase>& x, const NilUnit<ModularBase>& y) const {
    return image_.contains(x * y.inverse_of_one_plus());
  }
  bool trivial(const NilUnit<ModularBase>& x) const { return image_.contains(x); }

 private:
  static std::vector<NilUnit<ModularBase>> image_generators(const ModExtension& e, std::size_t degree) {
    std::vector<NilUnit<ModularBase>> out;
    for (const auto& g : nil_unit_generators(e.source(), e.source_nilradical(), degree))
      out.push_back(apply_map(e.map(), g));
    return out;
  }
  const ModExtension* e_;
  std::size_t degree_;
  FiniteGroup<NilUnit<ModularBase>> image_;
};

/**
 * Module axioms on NPic_D(f) for all basic pairs (1 - a t^m), (1 - a' t^m'),
 * a, a' in A (all elements when |A| <= 256, else a basis), m, m' <= max_m:
 * (w w') x = w (w' x), (w + w') x = (w x)(w' x), (1 - t) x = x, 1 x = 1,
 * and w (x y) = (w x)(w y), on the generators 1 + nu t^k of NU(B).
 */
inline CheckResult check_module_axioms(const ModExtension& e, std::size_t degree, std::size_t max_m = 4,
                                       std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("npic-module", "module-axioms[" + e.name() + ",D=" + std::to_string(degree) + "]",
                       [&](CheckResult& r) {
    using W = WittVector<ModularBase>;
    const NPicComparator cmp(e, degree, bound);
    const auto xs = nil_unit_generators(e.target(), e.target_nilradical(), degree);
    std::vector<W> basics;
    for (const auto& a : continuity_generators(e.source()))
      for (std::size_t m = 1; m <= max_m; ++m) basics.push_back(W::basic(a, m, degree));
    std::vector<std::vector<NilUnit<ModularBase>>> acted(basics.size());
    for (std::size_t i = 0; i < basics.size(); ++i)
      for (const auto& x : xs) acted[i].push_back(witt_action(e, basics[i], x));
    r.pass = true;
    const W one = W::one(e.source(), degree), zero(e.source(), degree);
    const auto unit = NilUnit<ModularBase>::constant(e.target()->one(), degree);
    for (const auto& x : xs) {
      ++r.cases;
      if (!cmp.equal(witt_action(e, one, x), x)) detail::fail(r, "(1 - t) x != x for x = " + x.str());
      if (!cmp.equal(witt_action(e, zero, x), unit)) detail::fail(r, "1 x != 1 for x = " + x.str());
    }
    for (std::size_t i = 0; i < basics.size(); ++i)
      for (std::size_t j = 0; j < basics.size(); ++j) {
        const W prod = witt_mul(basics[i], basics[j]), sum = witt_add(basics[i], basics[j]);
        for (std::size_t k = 0; k < xs.size(); ++k, ++r.cases) {
          if (!cmp.equal(witt_action(e, prod, xs[k]), witt_action(e, basics[i], acted[j][k])))
            detail::fail(r, "associativity fails for " + basics[i].str() + ", " + basics[j].str() + " on " + xs[k].str());
          if (!cmp.equal(witt_action(e, sum, xs[k]), acted[i][k] * acted[j][k]))
            detail::fail(r, "distributivity fails for " + basics[i].str() + ", " + basics[j].str() + " on " + xs[k].str());
        }
      }
    for (std::size_t i = 0; i < basics.size(); ++i)
      for (std::size_t k = 0; k < xs.size(); ++k)
        for (std::size_t l = k; l < xs.size(); ++l, ++r.cases)
          if (!cmp.equal(witt_action(e, basics[i], xs[k] * xs[l]), acted[i][k] * acted[i][l]))
            detail::fail(r, "not an endomorphism: " + basics[i].str() + " on " + xs[k].str() + ", " + xs[l].str());
    if (r.pass)
      r.detail = std::to_string(basics.size()) + " basics, " + std::to_string(xs.size()) + " generators";
  });
}

/**
 * continuity_bound is finite for every element of NPic_D(f) and unchanged
 * when the search ceiling is doubled (ceiling D + 1, since basics of degree
 * above D act trivially in the truncation).
 */
inline CheckResult check_continuity(const ModExtension& e, std::size_t degree,
                                    std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("npic-module", "continuity[" + e.name() + ",D=" + std::to_string(degree) + "]",
                       [&](CheckResult& r) {
    const NilUnitGroup g = npic_group(e, degree, bound);
    const std::size_t ceiling = degree + 1;
    std::size_t worst = 1;
    r.pass = true;
    for (const auto& x : g.elements()) {
      ++r.cases;
      const auto m = continuity_bound(e, g, x, ceiling);
      const auto m2 = continuity_bound(e, g, x, 2 * ceiling);
      if (!m) {
        detail::fail(r, "no bound below " + std::to_string(ceiling) + " for " + x.str());
      } else if (m != m2) {
        detail::fail(r, "bound for " + x.str() + " moves from " + std::to_string(*m) + " when the ceiling doubles");
      } else {
        worst = std::max(worst, *m);
      }
    }
    if (r.pass) r.detail = std::to_string(g.order()) + " elements, largest bound " + std::to_string(worst);
  });
}

/// Every element of NPic_D(f) has p-power order when char B is a power of p.
inline CheckResult check_p_group(const ModExtension& e, std::size_t degree, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("npic-module", "p-group[" + e.name() + ",D=" + std::to_string(degree) + "]", [&](CheckResult& r) {
    const auto primes = prime_divisors(e.target()->characteristic());
    if (primes.size() != 1) throw Error("characteristic " + std::to_string(e.target()->characteristic()) + " is not a prime power");
    const std::int64_t p = primes.front();
    const NilUnitGroup g = npic_group(e, degree, bound);
    r.pass = true;
    for (const auto& x : g.elements()) {
      ++r.cases;
      std::int64_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o != 1) detail::fail(r, x.str() + " has order " + std::to_string(g.element_order(x)));
    }
    if (r.pass) r.detail = "NPic = " + g.structure().to_string() + ", all orders powers of " + std::to_string(p);
  });
}

/**
 * Over Q: dim NU_D(B) = D dim Nil(B), dim NPic_D(f) = D (dim Nil B - dim f(Nil A)),
 * and in log coordinates x -> (1 - a t) x is additive, Q-homogeneous, acts as
 * t -> f(a) t, and a -> (1 - a t) is multiplicative in a.
 */
inline CheckResult check_rational_npic(const QExtension& e, std::size_t degree, std::size_t samples, std::uint64_t seed) {
  return detail::timed("npic-module", "q-module[" + e.name() + ",D=" + std::to_string(degree) + "]", [&](CheckResult& r) {
    using W = WittVector<RationalBase>;
    using P = NilUnit<RationalBase>;
    const auto& b = e.target();
    const std::size_t nil_b = e.target_nilradical().basis.size();
    std::vector<std::vector<Rational>> image;
    for (const auto& v : e.source_nilradical().basis) image.push_back(e(v).coords());
    const std::size_t nil_a = image.empty() ? 0 : SpanSolver<RationalBase>(*b, image).dimension();
    r.pass = true;
    const NilLogChart chart(b, e.target_nilradical(), degree);
    if (nu_dimension(b, degree) != degree * nil_b) detail::fail(r, "dim NU != D dim Nil(B)");
    if (npic_dimension(e, degree) != degree * (nil_b - nil_a)) detail::fail(r, "dim NPic != D (dim Nil B - dim Nil A)");
    std::mt19937_64 rng(seed);
    auto random_nil_unit = [&] {
      std::vector<Rational> c(chart.dimension());
      for (auto& v : c) v = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
      return chart.element(c);
    };
    for (std::size_t i = 0; i < samples && nil_b > 0; ++i, ++r.cases) {
      const QElement a = random_element(e.source(), rng), a2 = random_element(e.source(), rng);
      const P x = random_nil_unit(), y = random_nil_unit();
      const W w = W::basic(a, 1, degree), w2 = W::basic(a2, 1, degree);
      const auto act = [&](const W& v, const P& p) { return chart.coordinates(witt_action(e, v, p)); };
      const auto lx = act(w, x), ly = act(w, y), lxy = act(w, x * y);
      for (std::size_t k = 0; k < lx.size(); ++k)
        if (lxy[k] != lx[k] + ly[k]) detail::fail(r, "(1 - at) not additive in log coordinates");
      const Rational c(std::uniform_int_distribution<int>(-4, 4)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
      std::vector<Rational> cx = chart.coordinates(x);
      for (auto& v : cx) v *= c;
      const auto lcx = act(w, chart.element(cx));
      for (std::size_t k = 0; k < lx.size(); ++k)
        if (lcx[k] != c * lx[k]) detail::fail(r, "(1 - at) not Q-homogeneous in log coordinates");
      // t -> f(a) t on log x
      P logx = NilLogChart::log(x), expected = logx;
      QElement pw = b->one();
      for (std::size_t k = 1; k <= degree; ++k) {
        pw *= e(a);
        expected[k] = logx[k] * pw;
      }
      if (NilLogChart::log(witt_action(e, w, x)) != expected) detail::fail(r, "(1 - at) x is not log x (a t)");
      if (witt_action(e, w, witt_action(e, w2, x)) != witt_action(e, W::basic(a * a2, 1, degree), x))
        detail::fail(r, "(1 - at)(1 - a't) x != (1 - aa't) x");
    }
    r.detail = "dim NPic = " + std::to_string(npic_dimension(e, degree)) + " = " + std::to_string(degree) + " * " +
               std::to_string(nil_b - nil_a) + (r.pass ? "" : "; " + r.detail);
  });
}

// ------------------------------------------------------------------ cech

inline CheckResult check_cech(const ModExtension& e, const std::string& cover_name, const Cover& cover, CechFunctor functor,
                              std::size_t degree, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("cech-exactness",
                       "exactness[" + cover_name + "," + e.name() + "," + to_string(functor) + ",D=" + std::to_string(degree) + "]",
                       [&](CheckResult& r) {
                         const CechComplex cx = build_complex(e, cover, functor, degree, true, bound);
                         const ExactnessReport rep = verify_exactness(cx);
                         r.pass = rep.exact();
                         r.cases = rep.homology.size();
                         std::string terms;
                         for (const auto& t : cx.terms) terms += (terms.empty() ? "" : " -> ") + t.to_string();
                         r.detail = terms;
                         for (std::size_t i = 0; i < rep.homology.size(); ++i)
                           if (!rep.homology[i].is_trivial())
                             detail::fail(r, "H at position " + std::to_string(i) + " = " + rep.homology[i].to_string());
                       });
}

/// Zeroing the first nonzero differential must produce nonzero homology.
inline CheckResult check_cech_negative_control(const ModExtension& e, const Cover& cover, CechFunctor functor, std::size_t degree) {
  return detail::timed("cech-exactness", "negative-control[" + e.name() + "," + to_string(functor) + "]", [&](CheckResult& r) {
    const CechComplex bad = corrupt_differential(build_complex(e, cover, functor, degree));
    const ExactnessReport rep = verify_exactness(bad);
    r.cases = rep.homology.size();
    r.pass = !rep.exact();
    for (std::size_t i = 0; i < rep.homology.size(); ++i)
      if (!rep.homology[i].is_trivial())
        r.detail += (r.detail.empty() ? "" : ", ") + ("H" + std::to_string(i) + " = " + rep.homology[i].to_string());
    if (!r.pass) r.detail = "corrupted complex still exact";
  });
}

/// NU(A_s) computed on the localization agrees with the colimit of NU(A) under t -> st.
inline CheckResult check_nu_colimit(const RingPtr<ModularBase>& a, const ModElement& s, std::size_t degree,
                                    std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("cech-exactness", "colimit[" + a->name() + ",s=" + s.str() + ",D=" + std::to_string(degree) + "]",
                       [&](CheckResult& r) {
                         const AbGroup direct = nu_group(localize(a, s, bound).ring, degree, bound).structure();
                         const AbGroup colim = nu_colimit(a, s, degree, bound);
                         r.cases = 1;
                         r.pass = direct == colim;
                         r.detail = "NU(A_s) = " + direct.to_string() + ", colimit = " + colim.to_string();
                       });
}

/// H^0 of the unaugmented complex is unchanged when 1 is added to the cover.
inline CheckResult check_refinement(const ModExtension& e, const std::string& cover_name, const Cover& cover,
                                    CechFunctor functor, std::size_t degree, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("cech-exactness", "refinement[" + cover_name + "," + e.name() + "," + to_string(functor) + "]",
                       [&](CheckResult& r) {
                         auto elems = cover.elements;
                         elems.push_back(cover.ring->one());
                         const Cover bigger = make_cover(cover.ring, elems);
                         const AbGroup h0 = homology(build_complex(e, cover, functor, degree, false, bound).complex, 0);
                         const AbGroup h0b = homology(build_complex(e, bigger, functor, degree, false, bound).complex, 0);
                         r.cases = 1;
                         r.pass = h0 == h0b;
                         r.detail = "H0 = " + h0.to_string() + " before and " + h0b.to_string() + " after adding 1";
                       });
}

// ------------------------------------------------------------------ k0

/// reduce(t) and det_map(t) give the same class in B^x/A^x on random triples, n <= 3.
inline CheckResult check_reduce_det(const std::vector<std::shared_ptr<const ModExtension>>& exts, std::size_t triples,
                                    std::uint64_t seed, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("k0-laws", "reduce-equals-det", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    for (std::size_t i = 0; i < triples; ++i, ++r.cases) {
      const ModExtension& e = *exts[i % exts.size()];
      const std::size_t n = 1 + i / exts.size() % 3;
      const K0Triple<ModularBase> t{random_invertible(e.target(), n, rng)};
      if (!same_class(e, reduce(e, t, bound), det_map(t)))
        detail::fail(r, e.name() + ": reduce and det disagree on " + t.alpha.str());
    }
    if (r.pass) r.detail = std::to_string(triples) + " triples over " + std::to_string(exts.size()) + " extensions";
  });
}

/// Block sums add, products multiply, and f-images vanish under reduce.
inline CheckResult check_k0_relations(const std::vector<std::shared_ptr<const ModExtension>>& exts, std::size_t samples,
                                      std::uint64_t seed, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("k0-laws", "relations", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    for (std::size_t i = 0; i < samples; ++i) {
      const ModExtension& e = *exts[i % exts.size()];
      const std::size_t n = 1 + i % 3, m = 1 + (i / 3) % 3;
      const auto a = random_invertible(e.target(), n, rng), b = random_invertible(e.target(), m, rng);
      const auto c = random_invertible(e.target(), n, rng);
      const auto ra = reduce(e, K0Triple<ModularBase>{a}, bound), rb = reduce(e, K0Triple<ModularBase>{b}, bound);
      ++r.cases;
      if (!same_class(e, reduce(e, K0Triple<ModularBase>{block_sum(a, b)}, bound), ra * rb))
        detail::fail(r, e.name() + ": block sum is not additive");
      if (!same_class(e, reduce(e, K0Triple<ModularBase>{a * c}, bound), ra * reduce(e, K0Triple<ModularBase>{c}, bound)))
        detail::fail(r, e.name() + ": composition is not additive");
      const auto a0 = random_invertible(e.source(), n, rng);
      if (!same_class(e, reduce(e, K0Triple<ModularBase>{a0.mapped([&](const ModElement& x) { return e(x); })}, bound),
                      e.target()->one()))
        detail::fail(r, e.name() + ": image of GL_n(A) is not zero");
    }
    if (r.pass) r.detail = std::to_string(samples) + " samples, n <= 3";
  });
}

/// Lambda^k(a + b) = sum_{i+j=k} Lambda^i a (x) Lambda^j b for every k, on random pairs.
inline CheckResult check_whitney(const std::vector<std::shared_ptr<const ModExtension>>& exts, std::size_t pairs,
                                 std::uint64_t seed) {
  return detail::timed("k0-laws", "whitney-sum", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    for (std::size_t i = 0; i < pairs; ++i, ++r.cases) {
      const auto& b = exts[i % exts.size()]->target();
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      const auto alpha = random_invertible(b, n, rng), beta = random_invertible(b, m, rng);
      for (std::size_t k = 0; k <= n + m; ++k)
        if (!whitney_sum_holds(b, alpha, beta, k)) detail::fail(r, b->name() + ": Whitney law fails at k=" + std::to_string(k));
    }
    if (r.pass) r.detail = std::to_string(pairs) + " pairs, sizes <= 3, all k";
  });
}

/// lambda^1 = id, lambda^n = det, lambda^i = 0 for i > n.
inline CheckResult check_lambda_rank(const std::vector<std::shared_ptr<const ModExtension>>& exts, std::size_t samples,
                                     std::uint64_t seed) {
  return detail::timed("k0-laws", "lambda-above-rank", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    r.pass = true;
    for (std::size_t i = 0; i < samples; ++i, ++r.cases) {
      const auto& b = exts[i % exts.size()]->target();
      const std::size_t n = 1 + i % 4;
      const K0Triple<ModularBase> t{random_invertible(b, n, rng)};
      if (!(lambda_op(1, t, b).alpha == t.alpha)) detail::fail(r, "lambda^1 != id");
      const auto top = lambda_op(n, t, b);
      if (top.size() != 1 || top.alpha(0, 0) != det_map(t)) detail::fail(r, "lambda^n != det");
      for (std::size_t k = n + 1; k <= n + 2; ++k)
        if (lambda_op(k, t, b).size() != 0) detail::fail(r, "lambda^" + std::to_string(k) + " nonzero at rank " + std::to_string(n));
    }
    if (r.pass) r.detail = std::to_string(samples) + " triples, n <= 4";
  });
}

inline CheckResult check_boundary_exactness(const ModExtension& e, std::size_t n, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("k0-laws", "boundary-exactness[" + e.name() + ",n=" + std::to_string(n) + "]", [&](CheckResult& r) {
    const BoundaryExactnessReport rep = verify_boundary_exactness(e, n, bound);
    r.cases = rep.gl_order;
    r.pass = rep.exact();
    r.detail = "|GL| = " + std::to_string(rep.gl_order) + ", kernel " + std::to_string(rep.kernel_order) +
               ", generated " + std::to_string(rep.subgroup_order);
  });
}

// ------------------------------------------------------------------ excision, subintegral, negk

inline CheckResult check_excision(const ExcisionConfig& cfg, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("excision", "excision[" + cfg.name + "]", [&](CheckResult& r) {
    const auto e = catalog().finite(cfg.extension);
    std::vector<ModElement> ideal;
    for (const auto& g : cfg.ideal) ideal.push_back(parse_element(e->source(), g));
    const ExcisionReport rep = excision_check(*e, ideal, cfg.name, bound);
    r.cases = 1;
    r.pass = rep.ideal_ok && rep.iso;
    r.detail = "K0(f) = " + rep.k0_f.to_string() + ", K0(fbar) = " + rep.k0_fbar.to_string() +
               (rep.detail.empty() ? "" : "; " + rep.detail);
  });
}

/// expect_subintegral: the report must pass; otherwise it must decline.
inline CheckResult check_subintegral(const ModExtension& e, bool expect_subintegral, std::size_t triples,
                                     std::uint64_t seed, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("subintegral", (expect_subintegral ? "comparison[" : "declines[") + e.name() + "]",
                       [&](CheckResult& r) {
                         const SubintegralReport rep = subintegral_report(e, triples, seed, bound);
                         r.cases = rep.triples_checked + 1;
                         if (expect_subintegral) {
                           r.pass = rep.passed();
                           r.detail = "K0(f) = Pic(f) = " + rep.pic.to_string() + ", " +
                                      std::to_string(rep.triples_checked) + " triples";
                           if (!r.pass) r.detail = rep.reason.empty() ? "determinant comparison failed" : rep.reason;
                         } else {
                           r.pass = !rep.subintegral;
                           r.detail = rep.subintegral ? "accepted a non-subintegral extension" : "declined: " + rep.reason;
                         }
                       });
}

/// K_{-1}(f) has rank r - 1 (r counted from the 2^r idempotents of B), K_0 row = Pic(f), K_n = 0 below.
inline CheckResult check_negk(const ModExtension& e, std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("negk", "negative-k[" + e.name() + "]", [&](CheckResult& r) {
    const NegKTable t = neg_k_table(e, -3, bound);
    std::size_t idem = 0;
    for (const auto& b : elements(e.target(), bound))
      if (b * b == b) ++idem;
    std::size_t components = 0;
    while ((std::size_t{1} << components) < idem) ++components;
    r.cases = t.groups.size();
    r.pass = (std::size_t{1} << components) == idem && t.groups.at(-1) == AbGroup::free(components - 1) &&
             t.groups.at(0) == pic_group(e, bound).pic.structure();
    for (const auto& [n, g] : t.groups)
      if (n <= -2 && !g.is_trivial()) r.pass = false;
    r.detail = "r = " + std::to_string(components) + ", K0 = " + t.groups.at(0).to_string() +
               ", K-1 = " + t.groups.at(-1).to_string();
  });
}

/// is_anodal agrees with expectation; a witness b is re-checked against the enumerated set f(A).
inline CheckResult check_anodal(const ModExtension& e, bool expect_anodal, const std::string& expected_witness = {},
                                std::size_t bound = kDefaultEnumerationBound) {
  return detail::timed("negk", "anodal[" + e.name() + "]", [&](CheckResult& r) {
    const AnodalResult res = is_anodal(e, bound);
    std::unordered_set<ModElement> image;
    for (const auto& a : elements(e.source(), bound)) image.insert(e(a));
    r.cases = 1;
    r.pass = res.anodal == expect_anodal;
    if (res.witness) {
      const ModElement& b = *res.witness;
      const bool verified = !image.count(b) && image.count(b * b - b) && image.count(b * b * b - b * b);
      r.pass = r.pass && verified && (expected_witness.empty() || b == parse_element(e.target(), expected_witness));
      r.detail = "not anodal, witness b = " + b.str() + (verified ? " (re-checked)" : " (re-check FAILED)");
    } else {
      r.detail = "anodal";
    }
  });
}

// ------------------------------------------------------------------ suites

struct VerifyTargets {
  std::vector<std::string> suites;   // empty: all
  std::optional<std::string> example;
  std::shared_ptr<const ModExtension> extension;  // resolved example; catalog lookup when null
  std::optional<std::string> cover;  // comma-separated elements of the example's source ring
  std::vector<std::pair<std::string, Cover>> covers;  // named covers from an input document
};

namespace detail {

inline bool char_p_power(const ModExtension& e) { return prime_divisors(e.target()->characteristic()).size() == 1; }

inline std::vector<std::shared_ptr<const ModExtension>> select(const VerifyTargets& t) {
  if (t.extension) return {t.extension};
  if (t.example) return {catalog().finite(*t.example)};
  return catalog().finite_extensions();
}

inline bool is_local_source(const ModExtension& e, std::size_t bound) {
  try {
    return is_local(e.source(), bound);
  } catch (const EnumerationBoundExceeded&) {
    return false;
  }
}

}  // namespace detail

inline std::vector<CheckResult> run_suite(const std::string& suite, const SessionConfig& cfg, const VerifyTargets& t,
                                          const std::function<void(const CheckResult&)>& sink = {}) {
  std::vector<CheckResult> out;
  auto emit = [&](CheckResult r) {
    if (sink) sink(r);
    out.push_back(std::move(r));
  };
  const auto exts = detail::select(t);
  const std::uint64_t seed = cfg.seed;
  if (suite == "witt-identities") {
    emit(check_ghost_homomorphism(cfg.N, 200, seed));
    emit(check_frobenius_verschiebung(cfg.N, 10, seed + 1));
    emit(check_projection_formula(cfg.N, 100, seed + 2));
    for (auto& r : check_almkvist(cfg.N, 100, seed + 3)) emit(std::move(r));
  } else if (suite == "pic-sequence") {
    for (const auto& e : exts) emit(check_pic_sequence(*e, cfg.bound));
  } else if (suite == "npic-module") {
    const std::size_t d = std::min<std::size_t>(cfg.D, 4);
    for (const auto& e : exts) {
      for (std::size_t deg : {d, d + 1}) emit(check_module_axioms(*e, deg, 4, cfg.bound));
      emit(check_continuity(*e, d, cfg.bound));
      if (detail::char_p_power(*e)) emit(check_p_group(*e, d, cfg.bound));
    }
    if (!t.example)
      for (const auto& q : catalog().rational_extensions()) emit(check_rational_npic(*q, cfg.D, 20, seed));
  } else if (suite == "cech-exactness") {
    std::vector<std::pair<std::string, Cover>> covers;
    if (t.cover) {
      if (exts.size() != 1) throw InputError(0, "--cover needs --example");
      std::vector<ModElement> el;
      for (const auto& s : detail::split_list(*t.cover)) el.push_back(parse_element(exts[0]->source(), s));
      covers.emplace_back("{" + *t.cover + "}", make_cover(exts[0]->source(), el));
    } else {
      covers = t.covers;
      for (const auto& n : catalog().doc.cover_order) covers.emplace_back(n, catalog().doc.covers.at(n).cover);
    }
    const std::size_t d = std::min<std::size_t>(cfg.D, 4);
    for (const auto& [name, cover] : covers)
      for (const auto& e : exts) {
        if (e->source() != cover.ring) continue;
        for (auto f : {CechFunctor::NU, CechFunctor::NPic})
          for (std::size_t deg = 2; deg <= d; ++deg) emit(check_cech(*e, name, cover, f, deg, cfg.bound));
        emit(check_refinement(*e, name, cover, CechFunctor::NU, 2, cfg.bound));
        for (const auto& s : cover.elements) emit(check_nu_colimit(cover.ring, s, 3, cfg.bound));
      }
    if (!t.example) {
      const auto& c = catalog().doc.covers.at("z12-4-9").cover;
      emit(check_cech_negative_control(*catalog().finite("z12"), c, CechFunctor::NU, 2));
    }
  } else if (suite == "k0-laws") {
    emit(check_reduce_det(exts, 200, seed, cfg.bound));
    emit(check_k0_relations(exts, 60, seed + 1, cfg.bound));
    emit(check_whitney(exts, 50, seed + 2));
    emit(check_lambda_rank(exts, 40, seed + 3));
    for (const auto& e : exts)
      for (std::size_t n : {1, 2})
        if (e->target()->cardinality() <= (n == 1 ? 16u : 9u)) emit(check_boundary_exactness(*e, n, cfg.bound));
  } else if (suite == "excision") {
    for (const auto& c : catalog().excision)
      if (!t.example || c.extension == *t.example) emit(check_excision(c, cfg.bound));
  } else if (suite == "subintegral") {
    if (t.example) {
      const auto e = exts.front();
      const bool sub = subintegral_report(*e, 0, seed, cfg.bound).subintegral;
      emit(check_subintegral(*e, sub, 50, seed, cfg.bound));
    } else {
      for (const char* n : {"dual-f2", "dual-f3", "dual-f2-self", "z4-dual"})
        emit(check_subintegral(*catalog().finite(n), true, 50, seed, cfg.bound));
      for (const char* n : {"f2-f4", "split-f2", "f3-mixed"})
        emit(check_subintegral(*catalog().finite(n), false, 50, seed, cfg.bound));
    }
  } else if (suite == "negk") {
    for (const auto& e : exts)
      if (detail::is_local_source(*e, cfg.bound)) emit(check_negk(*e, cfg.bound));
    if (t.example) {
      const auto e = exts.front();
      emit(check_anodal(*e, is_anodal(*e, cfg.bound).anodal, {}, cfg.bound));
    } else {
      emit(check_anodal(*catalog().finite("split-f2"), false, "1_1", cfg.bound));
      emit(check_anodal(*catalog().finite("dual-f2-self"), true, {}, cfg.bound));
      emit(check_anodal(*catalog().finite("dual-f2"), true, {}, cfg.bound));
    }
  } else {
    throw InputError(0, "unknown suite '" + suite + "'");
  }
  return out;
}

inline std::vector<CheckResult> run_verify(const VerifyTargets& t, const SessionConfig& cfg,
                                           const std::function<void(const CheckResult&)>& sink = {}) {
  std::vector<CheckResult> out;
  const auto suites = t.suites.empty() ? suite_names() : t.suites;
  for (const auto& s : suites)
    for (auto& r : run_suite(canonical_suite(s), cfg, t, sink)) out.push_back(std::move(r));
  return out;
}

}  // namespace relk
