#include "relk/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace relk;

namespace {

std::shared_ptr<const ModExtension> ext(const std::string& n) { return catalog().finite(n); }

// Units by exhaustive search for an inverse.
std::size_t brute_units(const RingPtr<ModularBase>& r) {
  const auto all = elements(r);
  std::size_t n = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      if ((x * y).is_one()) {
        ++n;
        break;
      }
  return n;
}

std::size_t brute_image_units(const ModExtension& e) {
  std::set<std::vector<std::int64_t>> img;
  const auto all = elements(e.source());
  for (const auto& x : all)
    for (const auto& y : all)
      if ((x * y).is_one()) {
        img.insert(e(x).coords());
        break;
      }
  return img.size();
}

std::size_t brute_nilpotents(const RingPtr<ModularBase>& r) {
  std::size_t n = 0;
  for (const auto& x : elements(r)) {
    ModElement p = x;
    for (int k = 0; k < 16; ++k, p = p * x)
      if (p.is_zero()) {
        ++n;
        break;
      }
  }
  return n;
}

}  // namespace

TEST(Pic, KnownGroups) {
  const std::map<std::string, std::string> expected = {
      {"dual-f2", "Z/2"}, {"dual-f3", "Z/3"}, {"f2-f4", "Z/3"},     {"f3-f9", "Z/4"},
      {"split-f2", "0"},  {"z4-dual", "Z/4"}, {"z12-dual", "Z/12"}, {"f3-mixed", "Z/24"},
  };
  for (const auto& [name, group] : expected) EXPECT_EQ(pic_group(*ext(name)).pic.structure().to_string(), group) << name;
}

TEST(Pic, OrderMatchesUnitCounts) {
  for (const auto& e : catalog().finite_extensions()) {
    if (e->target()->cardinality() > 64) continue;
    const auto pg = pic_group(*e);
    EXPECT_EQ(static_cast<std::size_t>(pg.units_b.order()), brute_units(e->target())) << e->name();
    EXPECT_EQ(static_cast<std::size_t>(pg.pic.order()), brute_units(e->target()) / brute_image_units(*e)) << e->name();
  }
}

TEST(Pic, SequenceExactOnCatalog) {
  for (const auto& e : catalog().finite_extensions()) {
    const auto rep = verify_pic_sequence(*e);
    EXPECT_TRUE(rep.exact()) << e->name();
    EXPECT_GE(rep.checks.size(), 4u);
  }
}

TEST(Pic, SameClass) {
  auto e = ext("dual-f3");
  const auto& b = e->target();
  EXPECT_TRUE(same_class(*e, parse_element(b, "2"), b->one()));
  EXPECT_FALSE(same_class(*e, parse_element(b, "1 + e"), b->one()));
  EXPECT_TRUE(same_class(*e, parse_element(b, "2 + 2*e"), parse_element(b, "1 + e")));
}

TEST(NilUnits, OrderIsNilpotentCountToTheD) {
  for (const char* n : {"dual-f2", "dual-f3", "z4-dual", "f2dual-x4", "z6-dual"}) {
    auto e = ext(n);
    const std::size_t nil = brute_nilpotents(e->target());
    for (std::size_t d : {1, 2, 3}) {
      const auto g = nu_group(e->target(), e->target_nilradical(), d);
      std::size_t expect = 1;
      for (std::size_t k = 0; k < d; ++k) expect *= nil;
      EXPECT_EQ(static_cast<std::size_t>(g.order()), expect) << n << " D=" << d;
    }
  }
}

TEST(NPic, DualNumbersOverFp) {
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_EQ(npic_group(*ext("dual-f2"), d).structure(), AbGroup(std::vector<Integer>(d, 2)));
    EXPECT_EQ(npic_group(*ext("dual-f3"), d).structure(), AbGroup(std::vector<Integer>(d, 3)));
  }
}

TEST(NPic, ReducedTargetGivesZero) {
  for (const char* n : {"f2-f4", "f3-f9", "split-f2", "split3-f2", "z30-split"})
    for (std::size_t d : {1, 3, 6}) EXPECT_TRUE(npic_group(*ext(n), d).structure().is_trivial()) << n;
}

TEST(NPic, OrderIsQuotientOfNilUnitCounts) {
  for (const char* n : {"z4-dual", "f2dual-x4", "f4-dual-sub", "dual-f2-self"}) {
    auto e = ext(n);
    for (std::size_t d : {2, 3}) {
      const auto nub = nu_group(e->target(), e->target_nilradical(), d);
      const auto nua = nu_group(e->source(), e->source_nilradical(), d);
      EXPECT_EQ(npic_group(*e, d).order() * nua.order(), nub.order()) << n << " D=" << d;
    }
  }
}

// (1 - a t) acts by t -> f(a) t.
TEST(Action, DegreeOneBasicIsSubstitution) {
  std::mt19937_64 rng(8);
  for (const char* n : {"z4-dual", "z12-dual", "f2dual-x4", "f4-dual-sub"}) {
    auto e = ext(n);
    const auto as = elements(e->source());
    const auto nil = e->target_nilradical();
    for (int i = 0; i < 20; ++i) {
      std::vector<ModElement> c;
      for (std::size_t k = 0; k < 4; ++k) {
        ModElement v = e->target()->zero();
        for (const auto& g : nil.basis) v = v + g.scaled(static_cast<std::int64_t>(rng() % 5));
        c.push_back(v);
      }
      const auto x = make_nil_unit(e->target(), c);
      const auto& a = as[rng() % as.size()];
      auto expect = x;
      ModElement pw = e->target()->one();
      for (std::size_t k = 1; k <= 4; ++k) {
        pw = pw * (*e)(a);
        expect[k] = x[k] * pw;
      }
      EXPECT_EQ(basic_action(*e, a, 1, x), expect) << n;
    }
  }
}

TEST(Action, IdentityAndTruncation) {
  auto e = ext("z4-dual");
  const auto x = make_nil_unit(e->target(), {parse_element(e->target(), "e"), parse_element(e->target(), "2"),
                                             parse_element(e->target(), "3*e")});
  EXPECT_EQ(witt_action(*e, WittVector<ModularBase>::one(e->source(), 3), x), x);
  EXPECT_EQ(basic_action(*e, e->source()->one(), 4, x), NilUnit<ModularBase>::constant(e->target()->one(), 3));
  EXPECT_THROW(witt_action(*e, WittVector<ModularBase>::one(e->source(), 2), x), OwnerMismatch);
}

TEST(Action, ModuleAxiomsOnSmallExtensions) {
  for (const char* n : {"dual-f2", "dual-f3", "z4-dual", "f2dual-x4"})
    for (std::size_t d : {3, 4}) {
      const auto r = check_module_axioms(*ext(n), d, 3);
      EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
      EXPECT_GT(r.cases, 0u);
    }
}

TEST(Action, ComparatorDetectsDifferentClasses) {
  auto e = ext("dual-f2");
  const NPicComparator cmp(*e, 3, kDefaultEnumerationBound);
  const auto x = make_nil_unit(e->target(), {parse_element(e->target(), "e"), e->target()->zero(), e->target()->zero()});
  const auto y = make_nil_unit(e->target(), {e->target()->zero(), parse_element(e->target(), "e"), e->target()->zero()});
  EXPECT_TRUE(cmp.equal(x, x));
  EXPECT_FALSE(cmp.equal(x, y));
  EXPECT_FALSE(cmp.trivial(x));
}

TEST(Continuity, BoundsAreFiniteAndStable) {
  for (const char* n : {"dual-f2", "dual-f3", "z4-dual", "f3-mixed", "f2dual-x4"}) {
    const auto r = check_continuity(*ext(n), 4);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}

// Over F_p[e], (1 - a t^n) sends 1 + e t^k to 1 + e Tr(s^k) a^(k/n) t^k with s^n = 1, and
// Tr(s^k) = n when n | k, else 0: the bound is 1 + the largest divisor of k prime to p.
TEST(Continuity, TraceOracleForDualNumbers) {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::size_t>>{{"dual-f2", 2}, {"dual-f3", 3}}) {
    auto e = ext(name);
    const auto g = npic_group(*e, 6);
    for (std::size_t k = 1; k <= 6; ++k) {
      std::size_t largest = 1;
      for (std::size_t n = 1; n <= k; ++n)
        if (k % n == 0 && n % p != 0) largest = n;
      std::vector<ModElement> c(6, e->target()->zero());
      c[k - 1] = parse_element(e->target(), "e");
      EXPECT_EQ(continuity_bound(*e, g, make_nil_unit(e->target(), c), 7), largest + 1) << name << " k=" << k;
    }
  }
}

TEST(PGroup, CharPEntries) {
  for (const char* n : {"dual-f2", "dual-f3", "z4-dual", "f2dual-x4", "f3-mixed"}) {
    const auto r = check_p_group(*ext(n), 4);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}

TEST(Rational, Dimensions) {
  auto dq = std::get<1>(catalog().extension("dual-q"));
  auto x3 = std::get<1>(catalog().extension("qdual-x3"));
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_EQ(npic_dimension(*dq, d), d);
    EXPECT_EQ(nu_dimension(x3->target(), d), 2 * d);
    EXPECT_EQ(npic_dimension(*x3, d), d);
  }
  for (const auto& q : catalog().rational_extensions()) {
    const auto r = check_rational_npic(*q, 5, 10, 3);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}
