#include "relk/abelian.hpp"
#include "relk/ring_ops.hpp"
#include "relk/rings.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace relk;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Integer gcd_int(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Smith, TextbookExample) {
  const SmithForm sf = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(sf.d(0), 2);
  EXPECT_EQ(sf.d(1), 6);
  EXPECT_EQ(sf.d(2), 12);
  EXPECT_EQ(sf.rank, 3u);
}

TEST(Smith, ZeroAndRectangular) {
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).rank, 0u);
  const SmithForm sf = smith_normal_form(from_rows({{0, 0, 6}, {0, 4, 0}}));
  EXPECT_EQ(sf.d(0), 2);
  EXPECT_EQ(sf.d(1), 12);
}

// U M V = D with unimodular U, V and d_1 | d_2 | ...; d_1 is the gcd of the
// entries and d_1 d_2 the gcd of the 2x2 minors.
TEST(Smith, RandomFactorizationsAgainstMinors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, 9);
    const SmithForm sf = smith_normal_form(m);
    ASSERT_EQ(sf.left * m * sf.right, sf.diagonal);
    ASSERT_EQ(sf.left * sf.left_inverse, IntMatrix::identity(r));
    ASSERT_EQ(sf.right * sf.right_inverse, IntMatrix::identity(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(sf.diagonal(i, j), 0);
    for (std::size_t i = 0; i + 1 < sf.rank; ++i) ASSERT_EQ(sf.d(i + 1) % sf.d(i), 0);

    Integer g1 = 0, g2 = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g1 = gcd_int(g1, m(i, j));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = i + 1; k < r; ++k)
        for (std::size_t j = 0; j < c; ++j)
          for (std::size_t l = j + 1; l < c; ++l) g2 = gcd_int(g2, m(i, j) * m(k, l) - m(i, l) * m(k, j));
    if (sf.rank >= 1) EXPECT_EQ(detail::abs_int(sf.d(0)), g1);
    if (sf.rank >= 2) EXPECT_EQ(detail::abs_int(sf.d(0) * sf.d(1)), g2);
    if (sf.rank == 0) EXPECT_EQ(g1, 0);
  }
}

TEST(Smith, DeterminantOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, n, n, 6);
    const Integer det = determinant(m);
    const SmithForm sf = smith_normal_form(m);
    if (det == 0) {
      EXPECT_LT(sf.rank, n);
      continue;
    }
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= sf.d(i);
    EXPECT_EQ(detail::abs_int(prod), detail::abs_int(det));
  }
}

TEST(Smith, IntegerKernelIsKernel) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, 2, 4, 5);
    const IntMatrix k = integer_kernel(m);
    const IntMatrix prod = m * k;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);
    EXPECT_EQ(k.cols(), 4 - smith_normal_form(m).rank);
  }
}

TEST(AbGroup, FromRelations) {
  EXPECT_EQ(AbGroup::from_relations(2, IntMatrix::diagonal({2, 3})).to_string(), "Z/6");
  EXPECT_EQ(AbGroup::from_relations(2, IntMatrix::diagonal({2, 4})).to_string(), "Z/2 x Z/4");
  EXPECT_EQ(AbGroup::from_relations(3, IntMatrix::diagonal({1, 0, 5})).to_string(), "Z/5 x Z^1");
  EXPECT_TRUE(AbGroup::from_relations(1, IntMatrix::diagonal({1})).is_trivial());
  EXPECT_EQ(*AbGroup::from_relations(2, IntMatrix::diagonal({6, 10})).order(), 60);
}

TEST(AbGroup, RejectsBadInvariants) {
  EXPECT_THROW(AbGroup(std::vector<Integer>{4, 2}), Error);
  EXPECT_THROW(AbGroup(std::vector<Integer>{1}), Error);
}

TEST(Homology, MultiplicationByTwoOnZ) {
  AbComplex cx;
  cx.relations = {IntMatrix(1, 0), IntMatrix(1, 0)};
  cx.differentials = {IntMatrix::diagonal({2})};
  cx.validate();
  EXPECT_TRUE(homology(cx, 0).is_trivial());
  EXPECT_EQ(homology(cx, 1).to_string(), "Z/2");
}

TEST(Homology, MultiplicationByTwoOnZ4) {
  AbComplex cx;
  cx.relations = {IntMatrix::diagonal({4}), IntMatrix::diagonal({4})};
  cx.differentials = {IntMatrix::diagonal({2})};
  cx.validate();
  EXPECT_EQ(homology(cx, 0).to_string(), "Z/2");
  EXPECT_EQ(homology(cx, 1).to_string(), "Z/2");
}

TEST(Homology, ShortExactSequenceIsExact) {
  // 0 -> Z/2 -> Z/4 -> Z/2 -> 0 with 1 -> 2 and 1 -> 1
  AbComplex cx;
  cx.relations = {IntMatrix::diagonal({2}), IntMatrix::diagonal({4}), IntMatrix::diagonal({2})};
  cx.differentials = {IntMatrix::diagonal({2}), IntMatrix::diagonal({1})};
  cx.validate();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(homology(cx, i).is_trivial()) << i;
}

TEST(Homology, RejectsNonComplex) {
  AbComplex cx;
  cx.relations = {IntMatrix(1, 0), IntMatrix(1, 0), IntMatrix(1, 0)};
  cx.differentials = {IntMatrix::diagonal({1}), IntMatrix::diagonal({1})};
  EXPECT_THROW(cx.validate(), IllFormedComplex);
}

TEST(FiniteGroup, UnitGroupsOfZn) {
  for (std::int64_t n : {2, 4, 8, 9, 12, 15, 16, 30}) {
    const auto g = unit_group(integers_mod(n));
    std::int64_t phi = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++phi;
    EXPECT_EQ(g.order(), phi) << n;
  }
  EXPECT_EQ(unit_group(integers_mod(12)).structure().to_string(), "Z/2 x Z/2");
  EXPECT_EQ(unit_group(integers_mod(9)).structure().to_string(), "Z/6");
  EXPECT_EQ(unit_group(integers_mod(16)).structure().to_string(), "Z/2 x Z/4");
}

TEST(FiniteGroup, CoordinatesRoundTrip) {
  const auto g = unit_group(integers_mod(21));
  for (const auto& x : g.elements()) EXPECT_EQ(g.element(g.coordinates(x)), x);
  EXPECT_EQ(static_cast<std::int64_t>(g.elements().size()), g.order());
}

TEST(FiniteGroup, GeneratedSubgroupOfIntegersModN) {
  using I = std::int64_t;
  const auto add = [](const I& a, const I& b) { return (a + b) % 60; };
  const auto g = group_from_generators<I>({12, 20}, 0, add);
  EXPECT_EQ(g.order(), 15);
  EXPECT_EQ(g.structure().to_string(), "Z/15");
  EXPECT_TRUE(g.contains(24));
  EXPECT_FALSE(g.contains(5));
  EXPECT_EQ(g.element_order(20), 3);
}

TEST(FiniteGroup, BoundIsEnforced) {
  using I = std::int64_t;
  const auto add = [](const I& a, const I& b) { return (a + b) % 1000; };
  EXPECT_THROW(group_from_generators<I>({1}, 0, add, 100), EnumerationBoundExceeded);
}
