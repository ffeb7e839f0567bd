#include "relk/catalog.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace relk;

namespace {

ModElement elem(const RingPtr<ModularBase>& r, const std::string& s) { return parse_element(r, s); }

std::size_t brute_force_idempotents(const RingPtr<ModularBase>& r) {
  std::size_t n = 0;
  for (const auto& x : elements(r))
    if (x * x == x) ++n;
  return n;
}

}  // namespace

TEST(Ring, IntegersModN) {
  auto z12 = integers_mod(12);
  EXPECT_EQ(z12->characteristic(), 12);
  EXPECT_EQ(z12->cardinality(), 12);
  const auto a = elem(z12, "7"), b = elem(z12, "9");
  EXPECT_EQ((a * b).str(), "3");
  EXPECT_EQ((a + b).str(), "4");
  EXPECT_EQ((-a).str(), "5");
  for (const auto& x : elements(z12)) {
    const std::int64_t v = to_int64(x[0]);
    EXPECT_EQ(is_unit(x), std::gcd(v, std::int64_t{12}) == 1) << v;
  }
}

TEST(Ring, FiniteFieldOfOrderFour) {
  auto f4 = std::get<0>(catalog().doc.rings.at("F4"));
  EXPECT_EQ(f4->cardinality(), 4);
  const auto x = elem(f4, "x");
  EXPECT_TRUE(x.pow(3).is_one());
  EXPECT_EQ((x * x).str(), "1 + x");
  for (const auto& y : elements(f4))
    if (!y.is_zero()) EXPECT_TRUE(is_unit(y));
  EXPECT_EQ(unit_group(f4).structure().to_string(), "Z/3");
  EXPECT_EQ(idempotents(f4).components(), 1u);
}

TEST(Ring, DualNumbers) {
  auto f3e = std::get<0>(catalog().doc.rings.at("F3e"));
  const auto e = elem(f3e, "e");
  EXPECT_TRUE((e * e).is_zero());
  EXPECT_TRUE(is_nilpotent(e));
  EXPECT_FALSE(is_unit(e));
  EXPECT_TRUE(is_unit(elem(f3e, "1 + e")));
  EXPECT_EQ(*try_invert(elem(f3e, "1 + e")), elem(f3e, "1 + 2*e"));
  const auto nil = nilradical(f3e);
  EXPECT_EQ(nil.basis.size(), 1u);
  EXPECT_EQ(nil.index, 2u);
  EXPECT_EQ(unit_group(f3e).structure().to_string(), "Z/6");
}

TEST(Ring, NilradicalAgainstBruteForce) {
  for (const char* name : {"Z12e", "Z4e", "F2x4", "F4e", "F3e_x_F9"}) {
    auto r = std::get<0>(catalog().doc.rings.at(name));
    const auto nil = nilradical(r);
    SpanSolver<ModularBase> span(*r, [&] {
      std::vector<std::vector<std::int64_t>> cols;
      for (const auto& v : nil.basis) cols.push_back(v.coords());
      return cols;
    }());
    for (const auto& x : elements(r)) {
      bool nilpotent = false;
      ModElement p = x;
      for (int k = 0; k < 16 && !nilpotent; ++k, p = p * x) nilpotent = p.is_zero();
      EXPECT_EQ(span.contains(x.coords()), nilpotent) << name << " " << x.str();
    }
  }
}

TEST(Ring, IdempotentsAgainstBruteForce) {
  for (const char* name : {"F2xF2", "F2xF2xF2", "Z30xZ30", "F3e_x_F9", "F2e_x_F2"}) {
    auto r = std::get<0>(catalog().doc.rings.at(name));
    const auto id = idempotents(r);
    EXPECT_EQ(id.all.size(), brute_force_idempotents(r)) << name;
    EXPECT_EQ(std::size_t{1} << id.components(), id.all.size()) << name;
    ModElement sum = r->zero();
    for (const auto& e : id.primitive) sum = sum + e;
    EXPECT_TRUE(sum.is_one()) << name;
  }
  for (std::int64_t n : {6, 12, 30, 16}) EXPECT_EQ(idempotents(integers_mod(n)).all.size(), brute_force_idempotents(integers_mod(n)));
}

TEST(Ring, RationalAlgebras) {
  auto qx3 = std::get<1>(catalog().doc.rings.at("Qx3"));
  EXPECT_EQ(nilradical(qx3).basis.size(), 2u);
  EXPECT_EQ(nilradical(qx3).index, 3u);
  auto qxqe = std::get<1>(catalog().doc.rings.at("QxQe"));
  EXPECT_EQ(idempotents(qxqe).components(), 2u);
  EXPECT_EQ(nilradical(qxqe).basis.size(), 1u);
  const auto half = parse_element(qx3, "1 + 1/2*x");
  EXPECT_TRUE((half * *try_invert(half)).is_one());
}

TEST(Ring, NonAssociativeRejectedWithTriple) {
  // basis 1, a, b with a a = b, a b = 0, b b = a: (a a) a = b a = 0 but a (a a) = a b = 0,
  // (a a) b = b b = a while a (a b) = 0
  Ring<ModularBase>::Presentation p;
  p.name = "bad";
  p.labels = {"1", "a", "b"};
  p.orders = {2, 2, 2};
  p.one = {1, 0, 0};
  auto v = [](std::int64_t x, std::int64_t y, std::int64_t z) { return std::vector<std::int64_t>{x, y, z}; };
  p.products = {v(1, 0, 0), v(0, 1, 0), v(0, 0, 1), v(0, 1, 0), v(0, 0, 1), v(0, 0, 0),
                v(0, 0, 1), v(0, 0, 0), v(0, 1, 0)};
  try {
    Ring<ModularBase>::create(p);
    FAIL() << "accepted a non-associative table";
  } catch (const StructureError& ex) {
    EXPECT_NE(std::string(ex.what()).find("basis triple"), std::string::npos) << ex.what();
  }
}

TEST(Ring, LocalizationSplitsOffComponents) {
  auto z12 = integers_mod(12);
  EXPECT_EQ(localize(z12, elem(z12, "4")).ring->cardinality(), 3);
  EXPECT_EQ(localize(z12, elem(z12, "9")).ring->cardinality(), 4);
  EXPECT_EQ(localize(z12, elem(z12, "5")).ring->cardinality(), 12);
  EXPECT_EQ(localize(z12, elem(z12, "6")).ring->cardinality(), 1);
  // the localization map sends s to a unit
  for (const char* s : {"2", "3", "4", "9", "10"}) {
    auto loc = localize(z12, elem(z12, s));
    if (loc.ring->is_zero_ring()) continue;
    EXPECT_TRUE(is_unit(loc.map(elem(z12, s)))) << s;
  }
}

TEST(Ring, QuotientByIdeal) {
  auto z12 = integers_mod(12);
  const auto q = quotient_ring(z12, {elem(z12, "8")});
  EXPECT_EQ(q.ring->cardinality(), 4);
  auto f4e = std::get<0>(catalog().doc.rings.at("F4e"));
  const auto q2 = quotient_ring(f4e, {elem(f4e, "e")});
  EXPECT_EQ(q2.ring->cardinality(), 4);
  EXPECT_EQ(unit_group(q2.ring).order(), 3);
}

TEST(Ring, ProductLabels) {
  auto r = std::get<0>(catalog().doc.rings.at("F2xF2xF2"));
  EXPECT_EQ(r->labels(), (std::vector<std::string>{"1_1", "1_2", "1_3"}));
  auto s = std::get<0>(catalog().doc.rings.at("F2e_x_F2"));
  EXPECT_EQ(s->labels(), (std::vector<std::string>{"1_1", "e_1", "1_2"}));
}

TEST(Extension, RejectsNonInjectiveMap) {
  auto f2e = std::get<0>(catalog().doc.rings.at("F2e"));
  auto f2 = prime_field(2);
  EXPECT_THROW(ModExtension("collapse", RingMap<ModularBase>(f2e, f2, {f2->one(), f2->zero()})), NotFaithful);
  auto z4 = integers_mod(4);
  EXPECT_THROW(ModExtension("z4-f2", structure_map(z4, f2)), NotFaithful);
}

TEST(Extension, RingMapMustBeMultiplicative) {
  auto f2e = std::get<0>(catalog().doc.rings.at("F2e"));
  EXPECT_THROW(RingMap<ModularBase>(f2e, f2e, {f2e->one(), f2e->one()}), Error);
}

TEST(Ring, RandomFieldArithmetic) {
  auto f9 = std::get<0>(catalog().doc.rings.at("F9"));
  std::mt19937_64 rng(3);
  const auto all = elements(f9);
  for (int i = 0; i < 200; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_TRUE(a.pow(8).is_one());
  }
}
