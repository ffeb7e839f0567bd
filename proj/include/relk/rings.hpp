#pragma once

// Named constructions: Z/n, F_p, Q, monogenic algebras base[x]/(g),
// direct products, and the standard maps between them.

#include "relk/ring.hpp"

namespace relk {

inline RingPtr<ModularBase> integers_mod(std::int64_t n, std::string name = {}) {
  if (n < 2) throw StructureError("integers_mod: modulus must be at least 2");
  ModRing::Presentation p;
  p.name = name.empty() ? "Z/" + std::to_string(n) : std::move(name);
  p.kind = RingKind::IntegersModN;
  p.labels = {"1"};
  p.orders = {n};
  p.products = {{1}};
  p.one = {1};
  return ModRing::create(std::move(p));
}

inline RingPtr<ModularBase> prime_field(std::int64_t p, std::string name = {}) {
  if (!is_prime(p)) throw StructureError("prime_field: " + std::to_string(p) + " is not prime");
  ModRing::Presentation pr;
  pr.name = name.empty() ? "F" + std::to_string(p) : std::move(name);
  pr.kind = RingKind::PrimeField;
  pr.labels = {"1"};
  pr.orders = {p};
  pr.products = {{1}};
  pr.one = {1};
  return ModRing::create(std::move(pr));
}

inline RingPtr<RationalBase> rationals(std::string name = "Q") {
  QRing::Presentation p;
  p.name = std::move(name);
  p.kind = RingKind::Rationals;
  p.labels = {"1"};
  p.products = {{Rational(1)}};
  p.one = {Rational(1)};
  return QRing::create(std::move(p));
}

/**
 * base[x]/(x^k + g_{k-1} x^{k-1} + ... + g_0) with basis 1, x, ..., x^{k-1}.
 * `lower` holds g_0..g_{k-1}; `modulus` is ignored for rational bases.
 */
template <class Base>
RingPtr<Base> monogenic(std::string name, std::int64_t modulus, const std::vector<typename Base::Coeff>& lower,
                        const std::string& var = "x") {
  using Coeff = typename Base::Coeff;
  const std::size_t k = lower.size();
  if (k == 0) throw StructureError("monogenic: polynomial must have positive degree");
  typename Ring<Base>::Presentation p;
  p.name = std::move(name);
  p.kind = RingKind::Algebra;
  p.labels.push_back("1");
  for (std::size_t i = 1; i < k; ++i) p.labels.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  if constexpr (Base::finite) p.orders.assign(k, modulus);
  // x^m for m < 2k-1 reduced modulo the monic polynomial
  std::vector<std::vector<Coeff>> power(2 * k - 1, std::vector<Coeff>(k, Coeff(0)));
  for (std::size_t m = 0; m < k; ++m) power[m][m] = 1;
  for (std::size_t m = k; m < 2 * k - 1; ++m) {
    // x^m = x * x^{m-1}
    const auto& prev = power[m - 1];
    std::vector<Coeff> cur(k, Coeff(0));
    for (std::size_t i = 0; i + 1 < k; ++i) cur[i + 1] = prev[i];
    const Coeff top = prev[k - 1];
    for (std::size_t i = 0; i < k; ++i) cur[i] -= top * lower[i];
    if constexpr (Base::finite)
      for (auto& c : cur) c = mod_floor(c, modulus);
    power[m] = std::move(cur);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p.products.push_back(power[i + j]);
  p.one.assign(k, Coeff(0));
  p.one[0] = 1;
  return Ring<Base>::create(std::move(p));
}

/// base[e]/(e^2).
template <class Base>
RingPtr<Base> dual_numbers(std::string name, std::int64_t modulus = 0) {
  using Coeff = typename Base::Coeff;
  return monogenic<Base>(std::move(name), modulus, {Coeff(0), Coeff(0)}, "e");
}

/// R_1 x ... x R_k; basis labels get the factor index as suffix (e_1, 1_2, ...).
template <class Base>
RingPtr<Base> product(std::string name, const std::vector<RingPtr<Base>>& factors) {
  using Coeff = typename Base::Coeff;
  if (factors.empty()) throw StructureError("product: need at least one factor");
  std::vector<std::size_t> off;
  std::size_t r = 0;
  for (const auto& f : factors) off.push_back(r), r += f->rank();
  typename Ring<Base>::Presentation p;
  p.name = std::move(name);
  p.kind = RingKind::Algebra;
  p.products.assign(r * r, std::vector<Coeff>(r, Coeff(0)));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& ring = factors[f];
    const std::size_t rf = ring->rank(), o = off[f];
    for (const auto& l : ring->labels()) p.labels.push_back(l + "_" + std::to_string(f + 1));
    if constexpr (Base::finite) p.orders.insert(p.orders.end(), ring->orders().begin(), ring->orders().end());
    const auto& pf = ring->presentation().products;
    for (std::size_t i = 0; i < rf; ++i)
      for (std::size_t j = 0; j < rf; ++j)
        for (std::size_t k = 0; k < rf; ++k) p.products[(o + i) * r + o + j][o + k] = pf[i * rf + j][k];
    p.one.insert(p.one.end(), ring->presentation().one.begin(), ring->presentation().one.end());
  }
  return Ring<Base>::create(std::move(p));
}

template <class Base>
RingPtr<Base> product(std::string name, const RingPtr<Base>& a, const RingPtr<Base>& b) {
  return product<Base>(std::move(name), std::vector<RingPtr<Base>>{a, b});
}

/// The map determined by images of the source basis given as coordinate vectors.
template <class Base>
RingMap<Base> map_from_coords(const RingPtr<Base>& src, const RingPtr<Base>& dst,
                              const std::vector<std::vector<typename Base::Coeff>>& images) {
  std::vector<Element<Base>> ims;
  for (const auto& v : images) ims.push_back(dst->element(v));
  return RingMap<Base>(src, dst, std::move(ims));
}

/// The unique map from a rank-one ring Z/n, F_p or Q into R (1 -> 1).
template <class Base>
RingMap<Base> structure_map(const RingPtr<Base>& base, const RingPtr<Base>& r) {
  if (base->rank() != 1) throw StructureError("structure_map: source must be a rank-one base ring");
  return RingMap<Base>(base, r, {r->one()});
}

/// a -> (a, a) into A x A.
template <class Base>
RingMap<Base> diagonal_map(const RingPtr<Base>& a, const RingPtr<Base>& axa) {
  std::vector<Element<Base>> ims;
  const std::size_t r = a->rank();
  for (std::size_t i = 0; i < r; ++i) ims.push_back(axa->basis(i) + axa->basis(r + i));
  return RingMap<Base>(a, axa, std::move(ims));
}

}  // namespace relk
