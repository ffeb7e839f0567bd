#include "relk/verify.hpp"

#include <gtest/gtest.h>

using namespace relk;

namespace {

std::shared_ptr<const ModExtension> ext(const std::string& n) { return catalog().finite(n); }

Cover cover_of(const RingPtr<ModularBase>& a, const std::vector<std::string>& s) {
  std::vector<ModElement> el;
  for (const auto& x : s) el.push_back(parse_element(a, x));
  return make_cover(a, el);
}

}  // namespace

TEST(Cover, RejectsProperIdeal) {
  auto z12 = integers_mod(12);
  EXPECT_THROW(cover_of(z12, {"2", "4"}), NotUnitIdeal);
  EXPECT_THROW(cover_of(z12, {"3", "6", "9"}), NotUnitIdeal);
  EXPECT_NO_THROW(cover_of(z12, {"4", "9"}));
}

TEST(Cover, CertificateSumsToOne) {
  auto z30 = integers_mod(30);
  const Cover c = cover_of(z30, {"6", "10", "15"});
  ModElement s = z30->zero();
  for (std::size_t i = 0; i < c.elements.size(); ++i) s = s + c.certificate[i] * c.elements[i];
  EXPECT_TRUE(s.is_one());
}

// Z/12 = Z/3 x Z/4: D(4) is Spec Z/3, D(9) is Spec Z/4, D(36) is empty.
TEST(Cech, TermsForZ12WithFourAndNine) {
  auto e = ext("z12");
  const Cover c = catalog().doc.covers.at("z12-4-9").cover;
  for (std::size_t d : {2, 3, 4}) {
    const CechComplex cx = build_complex(*e, c, CechFunctor::NU, d);
    ASSERT_EQ(cx.terms.size(), 3u);
    EXPECT_EQ(*cx.terms[0].order(), Integer(1) << d);  // NU(Z/12) = NU(Z/4) = (1 + 2tZ/4[t]) has 2^D elements
    EXPECT_EQ(*cx.terms[1].order(), Integer(1) << d);
    EXPECT_TRUE(cx.terms[2].is_trivial());
    EXPECT_TRUE(verify_exactness(cx).exact());
  }
}

TEST(Cech, ExactOverCatalogCovers) {
  for (const auto& name : catalog().doc.cover_order) {
    const Cover& c = catalog().doc.covers.at(name).cover;
    for (const auto& e : catalog().extensions_over(c)) {
      if (e->target()->cardinality() > 100) continue;
      for (auto f : {CechFunctor::NU, CechFunctor::NPic, CechFunctor::Pic})
        for (std::size_t d : {2, 3}) {
          const auto r = check_cech(*e, name, c, f, d);
          EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
        }
    }
  }
}

TEST(Cech, DifferentialsCompose) {
  auto e = ext("z30-split");
  const Cover c = catalog().doc.covers.at("z30-6-10-15").cover;
  const CechComplex cx = build_complex(*e, c, CechFunctor::Pic, 2);
  EXPECT_NO_THROW(cx.complex.validate());
  EXPECT_EQ(cx.complex.length(), 4u);
  EXPECT_EQ(cx.labels[3].size(), 1u);
}

TEST(Cech, NegativeControlIsNotExact) {
  const Cover c = catalog().doc.covers.at("z12-4-9").cover;
  const auto r = check_cech_negative_control(*ext("z12"), c, CechFunctor::NU, 2);
  EXPECT_TRUE(r.pass) << r.detail;
  const CechComplex bad = corrupt_differential(build_complex(*ext("z6-dual"), catalog().doc.covers.at("z6-2-3").cover,
                                                             CechFunctor::NPic, 2));
  EXPECT_FALSE(verify_exactness(bad).exact());
}

TEST(Cech, UnaugmentedH0IsGlobalSections) {
  for (const char* cover : {"z12-4-9", "z12-3-4-7", "z6-2-3-5"}) {
    const Cover& c = catalog().doc.covers.at(cover).cover;
    for (const auto& e : catalog().extensions_over(c)) {
      const AbGroup h0 = homology(build_complex(*e, c, CechFunctor::NPic, 2, false).complex, 0);
      EXPECT_EQ(h0, npic_group(*e, 2).structure()) << cover << " " << e->name();
    }
  }
}

TEST(Cech, ColimitMatchesLocalization) {
  auto z12 = integers_mod(12);
  for (const char* s : {"2", "3", "4", "6", "9", "5"}) {
    const auto r = check_nu_colimit(z12, parse_element(z12, s), 3);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
  auto z4e = std::get<0>(catalog().doc.rings.at("Z4e"));
  for (const char* s : {"1 + e", "2", "e", "3"}) {
    const auto r = check_nu_colimit(z4e, parse_element(z4e, s), 2);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}

TEST(Cech, RefinementKeepsH0) {
  const auto r = check_refinement(*ext("z12-dual"), "z12-2-5", catalog().doc.covers.at("z12-2-5").cover, CechFunctor::NU, 2);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Cech, CoverMustLiveOnSource) {
  const Cover c = catalog().doc.covers.at("z6-2-3").cover;
  EXPECT_THROW(build_complex(*ext("z12"), c, CechFunctor::NU, 2), OwnerMismatch);
}
