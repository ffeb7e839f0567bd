#include "relk/relk0.hpp"
#include "relk/rings.hpp"
#include "relk/witt.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace relk;

namespace {

using QW = WittVector<RationalBase>;
using MW = WittVector<ModularBase>;

std::vector<Rational> series_of(const QW& u) {
  std::vector<Rational> s;
  for (std::size_t k = 0; k <= u.level(); ++k) s.push_back(u.coefficient(k)[0]);
  return s;
}

std::vector<Rational> mul_series(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// -t d/dt log(u) by the power series of log(1 + y), y = u - 1.
std::vector<Rational> ghost_oracle(const QW& u) {
  const std::size_t n = u.level();
  std::vector<Rational> y = series_of(u);
  y[0] = 0;
  std::vector<Rational> log(n + 1, Rational(0)), pw = y;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational c = Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    for (std::size_t i = 0; i <= n; ++i) log[i] += c * pw[i];
    pw = mul_series(pw, y);
  }
  std::vector<Rational> g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(-Rational(static_cast<long>(i)) * log[i]);
  return g;
}

QW random_integral(const RingPtr<RationalBase>& q, std::size_t level, std::mt19937_64& rng) {
  std::vector<QElement> a;
  for (std::size_t k = 0; k < level; ++k) a.push_back(q->element({Rational(static_cast<long>(rng() % 11) - 5)}));
  return QW::from_coefficients(q, a);
}

MW reduce_mod(const QW& u, const RingPtr<ModularBase>& zn) {
  std::vector<ModElement> a;
  for (std::size_t k = 1; k <= u.level(); ++k) {
    const Rational c = u.coefficient(k)[0];
    EXPECT_EQ(denominator(c), 1) << "non-integral Witt coefficient";
    a.push_back(zn->element({to_int64(mod_floor(numerator(c), Integer(zn->characteristic())))}));
  }
  return MW::from_coefficients(zn, a);
}

MW random_mod(const RingPtr<ModularBase>& r, std::size_t level, std::mt19937_64& rng) {
  std::vector<ModElement> a;
  for (std::size_t k = 0; k < level; ++k) a.push_back(r->element({static_cast<std::int64_t>(rng() % r->characteristic())}));
  return MW::from_coefficients(r, a);
}

}  // namespace

TEST(Witt, ZeroAndOne) {
  auto q = rationals();
  const QW zero(q, 5), one = QW::one(q, 5);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(one.str(), "1 - t");
  std::mt19937_64 rng(1);
  const QW u = random_integral(q, 5, rng);
  EXPECT_EQ(witt_add(u, zero), u);
  EXPECT_EQ(witt_mul(u, one), u);
  EXPECT_TRUE(witt_mul(u, zero).is_zero());
  EXPECT_TRUE(witt_add(u, witt_neg(u)).is_zero());
}

TEST(Witt, GhostMatchesLogDerivative) {
  auto q = rationals();
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    const QW u = random_integral(q, 7, rng);
    const auto g = ghost(u);
    const auto o = ghost_oracle(u);
    ASSERT_EQ(g.size(), o.size());
    for (std::size_t k = 0; k < g.size(); ++k) EXPECT_EQ(g[k][0], o[k]) << k;
    EXPECT_EQ(from_ghost(q, g), u);
  }
}

TEST(Witt, TeichmullerGhostIsPowers) {
  auto q = rationals();
  const auto a = q->element({Rational(3, 2)});
  const auto g = ghost(QW::basic(a, 1, 6));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(g[k], a.pow(k + 1));
}

// Multiplication over Z/n agrees with multiplication of integral lifts in W(Q) (via ghost), reduced mod n.
TEST(Witt, TorsionProductMatchesIntegralLift) {
  auto q = rationals();
  std::mt19937_64 rng(3);
  for (std::int64_t n : {4, 6, 8, 9}) {
    auto zn = integers_mod(n);
    for (int i = 0; i < 25; ++i) {
      const QW u = random_integral(q, 6, rng), v = random_integral(q, 6, rng);
      std::vector<QElement> gu = ghost(u), gv = ghost(v), gp;
      for (std::size_t k = 0; k < gu.size(); ++k) gp.push_back(gu[k] * gv[k]);
      const QW lifted = from_ghost(q, gp);
      EXPECT_EQ(witt_mul(reduce_mod(u, zn), reduce_mod(v, zn)), reduce_mod(lifted, zn)) << "n=" << n;
    }
  }
}

TEST(Witt, GcdRule) {
  auto z8 = integers_mod(8);
  const auto a = z8->element({3}), b = z8->element({5});
  // (1 - a t^2)(1 - b t^3) = (1 - a^3 b^2 t^6)
  EXPECT_EQ(witt_mul(MW::basic(a, 2, 12), MW::basic(b, 3, 12)), MW::basic(a.pow(3) * b.pow(2), 6, 12));
  // (1 - a t^2)(1 - b t^4) = (1 - a^2 b t^4)^2
  const MW c = MW::basic(a.pow(2) * b, 4, 12);
  EXPECT_EQ(witt_mul(MW::basic(a, 2, 12), MW::basic(b, 4, 12)), witt_add(c, c));
  EXPECT_EQ(witt_mul(MW::basic(a, 1, 6), MW::basic(b, 1, 6)), MW::basic(a * b, 1, 6));
}

TEST(Witt, RingAxiomsOverZ6) {
  auto z6 = integers_mod(6);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const MW u = random_mod(z6, 6, rng), v = random_mod(z6, 6, rng), w = random_mod(z6, 6, rng);
    EXPECT_EQ(witt_mul(u, v), witt_mul(v, u));
    EXPECT_EQ(witt_mul(witt_mul(u, v), w), witt_mul(u, witt_mul(v, w)));
    EXPECT_EQ(witt_mul(u, witt_add(v, w)), witt_add(witt_mul(u, v), witt_mul(u, w)));
    EXPECT_EQ(witt_mul(u, MW::one(z6, 6)), u);
  }
}

TEST(Witt, BasicFactorizationRoundTrip) {
  auto f5 = prime_field(5);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const MW u = random_mod(f5, 8, rng);
    EXPECT_EQ(from_basic_factorization(f5, basic_factorization(u), 8), u);
  }
}

TEST(Witt, FrobeniusAndVerschiebungOnBasics) {
  auto z4 = integers_mod(4);
  const auto a = z4->element({3});
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(frobenius(n, MW::basic(a, 1, 12)), MW::basic(a.pow(n), 1, 12 / n));
    EXPECT_EQ(verschiebung(n, MW::basic(a, 1, 12 / n), 12), MW::basic(a, n, 12));
    EXPECT_EQ(frobenius(n, MW::basic(a, 1, 12)).level(), 12 / n);
  }
  // F_2 (1 - a t^2) = (1 - a t)^2
  const MW b = MW::basic(a, 1, 6);
  EXPECT_EQ(frobenius(2, MW::basic(a, 2, 12)), witt_add(b, b));
  EXPECT_THROW(verschiebung(3, MW::basic(a, 1, 2), 12), Error);
}

TEST(Witt, FrobeniusVerschiebungOverQAgainstGhost) {
  // ghost_k(F_n u) = ghost_{nk}(u), ghost_k(V_n u) = n ghost_{k/n}(u) if n | k else 0
  auto q = rationals();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const QW u = random_integral(q, 12, rng);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto g = ghost(u), gf = ghost(frobenius(n, u));
      for (std::size_t k = 1; k <= 12 / n; ++k) EXPECT_EQ(gf[k - 1], g[n * k - 1]);
      const auto gv = ghost(verschiebung(n, u.truncated(12 / n), 12));
      for (std::size_t k = 1; k <= 12; ++k)
        EXPECT_EQ(gv[k - 1], k % n ? q->zero() : g[k / n - 1].scaled(Rational(static_cast<long>(n))));
    }
  }
}

TEST(Almkvist, CharacteristicSeries) {
  auto z6 = integers_mod(6);
  EndClass<ModularBase> m(2, 2, z6->zero());
  m(0, 0) = z6->element({1});
  m(0, 1) = z6->element({2});
  m(1, 0) = z6->element({3});
  m(1, 1) = z6->element({5});
  // det(1 - tM) = 1 - tr(M) t + det(M) t^2 = 1 - 6t + (5 - 6) t^2
  const MW w = almkvist(z6, m, 4);
  EXPECT_EQ(w.str(), "1 + 5*t^2");
  EndClass<ModularBase> one(1, 1, z6->zero());
  one(0, 0) = z6->one();
  EXPECT_EQ(almkvist(z6, one, 4), MW::one(z6, 4));
}

TEST(Almkvist, NilpotentMatrixIsZero) {
  auto q = rationals();
  EndClass<RationalBase> n(3, 3, q->zero());
  n(0, 1) = q->one();
  n(1, 2) = q->element({Rational(7)});
  EXPECT_TRUE(almkvist(q, n, 6).is_zero());
}

TEST(Witt, GhostUnavailableOverTorsion) {
  EXPECT_THROW(ghost(MW::one(integers_mod(4), 3)), Error);
}
