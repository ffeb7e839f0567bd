#include "relk/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace relk;

namespace {

std::shared_ptr<const ModExtension> ext(const std::string& n) { return catalog().finite(n); }

BMatrix<ModularBase> mat(const RingPtr<ModularBase>& r, const std::vector<std::vector<std::string>>& rows) {
  BMatrix<ModularBase> m(rows.size(), rows.size(), r->zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_element(r, rows[i][j]);
  return m;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(K0, DeterminantOfTwoByTwo) {
  auto e = ext("z4-dual");
  const auto& b = e->target();
  const auto m = mat(b, {{"1 + e", "2"}, {"e", "3"}});
  const K0Triple<ModularBase> t{m};
  EXPECT_EQ(det_map(t), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

TEST(K0, ReduceOfOneByOneIsTheEntry) {
  for (const auto& e : catalog().finite_extensions()) {
    if (e->target()->cardinality() > 64) continue;
    for (const auto& u : unit_group(e->target()).elements()) {
      BMatrix<ModularBase> m(1, 1, e->target()->zero());
      m(0, 0) = u;
      EXPECT_TRUE(same_class(*e, reduce(*e, K0Triple<ModularBase>{m}), u)) << e->name();
    }
  }
}

TEST(K0, ReduceEqualsDetOnRandomTriples) {
  const auto r = check_reduce_det(catalog().finite_extensions(), 200, 17);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(r.cases, 200u);
}

TEST(K0, RelationsHold) {
  const auto r = check_k0_relations(catalog().finite_extensions(), 40, 19);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(K0, BoundaryRejectsSingularMatrix) {
  auto e = ext("dual-f2");
  EXPECT_THROW(boundary(*e, mat(e->target(), {{"e", "0"}, {"0", "1"}})), Error);
}

TEST(Lambda, WhitneySum) {
  const auto r = check_whitney(catalog().finite_extensions(), 50, 23);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Lambda, VanishesAboveRankAndTopIsDet) {
  const auto r = check_lambda_rank(catalog().finite_extensions(), 40, 29);
  EXPECT_TRUE(r.pass) << r.detail;
}

// det(Lambda^k alpha) = det(alpha)^C(n-1, k-1).
TEST(Lambda, SylvesterFranke) {
  std::mt19937_64 rng(31);
  for (const char* n : {"z12-dual", "f3-f9", "z4-dual", "f4-dual-sub"}) {
    auto e = ext(n);
    for (int i = 0; i < 10; ++i) {
      for (std::size_t size = 2; size <= 4; ++size) {
        const K0Triple<ModularBase> t{random_invertible(e->target(), size, rng)};
        const auto det = det_map(t);
        for (std::size_t k = 1; k <= size; ++k) {
          const auto lk = lambda_op(k, t, e->target());
          ASSERT_EQ(lk.size(), binom(size, k));
          EXPECT_EQ(det_map(lk), det.pow(binom(size - 1, k - 1))) << n << " n=" << size << " k=" << k;
        }
      }
    }
  }
}

TEST(Boundary, ExactOnSmallTargets) {
  for (const char* n : {"dual-f2", "dual-f3", "f2-f4", "split-f2"})
    for (std::size_t size : {1, 2}) {
      const auto rep = verify_boundary_exactness(*ext(n), size);
      EXPECT_TRUE(rep.exact()) << n << " n=" << size;
    }
}

TEST(Excision, CatalogConfigurations) {
  for (const auto& c : catalog().excision) {
    const auto r = check_excision(c);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
}

TEST(Excision, RejectsIdealNotSharedWithTarget) {
  // f(F_2) = {0, 1} is not an ideal of F_4
  auto e = ext("f2-f4");
  const auto rep = excision_check(*e, {e->source()->one()});
  EXPECT_FALSE(rep.ideal_ok);
  EXPECT_FALSE(check_excision({"bad", "f2-f4", {"1"}}).pass);
}

TEST(Subintegral, DualNumbersPassAndFieldExtensionDeclines) {
  for (const char* n : {"dual-f2", "dual-f3"}) {
    const auto rep = subintegral_report(*ext(n), 50, 37);
    EXPECT_TRUE(rep.subintegral) << n;
    EXPECT_TRUE(rep.passed()) << n;
    EXPECT_EQ(rep.pic, pic_group(*ext(n)).pic.structure());
  }
  const auto no = subintegral_report(*ext("f2-f4"), 50, 37);
  EXPECT_FALSE(no.subintegral);
  EXPECT_NE(no.reason.find("residue field"), std::string::npos) << no.reason;
  const auto split = subintegral_report(*ext("split-f2"), 50, 37);
  EXPECT_FALSE(split.subintegral);
  EXPECT_NE(split.reason.find("bijective"), std::string::npos) << split.reason;
}
