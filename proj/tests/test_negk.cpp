#include "relk/verify.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

using namespace relk;

namespace {

std::shared_ptr<const ModExtension> ext(const std::string& n) { return catalog().finite(n); }

bool brute_local(const RingPtr<ModularBase>& r) {
  const auto all = elements(r);
  std::size_t idem = 0;
  for (const auto& x : all) {
    if (x * x == x) ++idem;
    bool unit = false, nil = false;
    for (const auto& y : all) unit = unit || (x * y).is_one();
    ModElement p = x;
    for (int k = 0; k < 16 && !nil; ++k, p = p * x) nil = p.is_zero();
    if (!unit && !nil) return false;
  }
  return idem == 2;
}

}  // namespace

TEST(Local, AgainstBruteForce) {
  for (const auto& [name, r] : catalog().doc.rings) {
    if (r.index() != 0) continue;
    const auto& m = std::get<0>(r);
    if (m->cardinality() > 64) continue;
    EXPECT_EQ(is_local(m), brute_local(m)) << name;
  }
  for (std::int64_t n : {2, 4, 8, 9, 6, 12, 25}) EXPECT_EQ(is_local(integers_mod(n)), brute_local(integers_mod(n))) << n;
}

TEST(NegK, RankFromComponents) {
  const std::map<std::string, std::size_t> components = {{"dual-f2", 1}, {"split-f2", 2}, {"split3-f2", 3},
                                                         {"f3-mixed", 2}, {"dual-f2-diag", 2}};
  for (const auto& [name, r] : components) {
    const NegKTable t = neg_k_table(*ext(name));
    EXPECT_EQ(t.components, r) << name;
    EXPECT_EQ(t.groups.at(-1), AbGroup::free(r - 1)) << name;
    EXPECT_TRUE(t.groups.at(-2).is_trivial());
    EXPECT_TRUE(t.groups.at(-3).is_trivial());
    EXPECT_EQ(t.groups.at(0), pic_group(*ext(name)).pic.structure()) << name;
  }
}

TEST(NegK, FloorDegree) {
  const NegKTable t = neg_k_table(*ext("split3-f2"), -6);
  EXPECT_EQ(t.groups.size(), 7u);
  EXPECT_EQ(t.groups.at(-1).to_string(), "Z^2");
}

TEST(NegK, RequiresLocalSource) {
  for (const char* n : {"z12", "z12-dual", "z6-dual", "z30-split"}) EXPECT_THROW(neg_k_table(*ext(n)), NotLocal) << n;
}

TEST(NegK, SuiteCheck) {
  for (const char* n : {"dual-f2", "split-f2", "split3-f2"}) {
    const auto r = check_negk(*ext(n));
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}

TEST(Anodal, SplitExampleHasWitness) {
  auto e = ext("split-f2");
  const AnodalResult res = is_anodal(*e);
  ASSERT_FALSE(res.anodal);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(*res.witness, parse_element(e->target(), "1_1"));
  // independent re-check against the enumerated image of A
  std::unordered_set<ModElement> image;
  for (const auto& a : elements(e->source())) image.insert((*e)(a));
  const ModElement& b = *res.witness;
  EXPECT_FALSE(image.count(b));
  EXPECT_TRUE(image.count(b * b - b));
  EXPECT_TRUE(image.count(b * b * b - b * b));
}

TEST(Anodal, IdentityAndDualNumbers) {
  EXPECT_TRUE(is_anodal(*ext("dual-f2-self")).anodal);
  EXPECT_TRUE(is_anodal(*ext("z12")).anodal);
  // e is not in F_2, e^2 - e = e is not either
  EXPECT_TRUE(is_anodal(*ext("dual-f2")).anodal);
  EXPECT_FALSE(is_anodal(*ext("split3-f2")).anodal);
}

TEST(Anodal, SuiteCheck) {
  EXPECT_TRUE(check_anodal(*ext("split-f2"), false, "1_1").pass);
  EXPECT_FALSE(check_anodal(*ext("split-f2"), true).pass);
  EXPECT_TRUE(check_anodal(*ext("dual-f2-self"), true).pass);
}
