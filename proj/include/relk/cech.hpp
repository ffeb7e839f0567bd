#pragma once

/**
 * @file cech.hpp
 * @brief Augmented Cech complexes of NU, Pic(f) and NPic(f) over covers of
 *        Spec(A) by basic opens D(s_0), ..., D(s_r), for finite artinian A.
 *
 * Each A_{s_J} (s_J = prod_{j in J} s_j) is the idempotent component of A on
 * which s_J is a unit; B is localized at f(s_J). Position 0 of the complex
 * is F(A), position p + 1 is the product of F(A_{s_J}) over |J| = p + 1,
 * and (dx)_J = sum_j (-1)^j x_{J - j_j} restricted to J.
 */

#include "relk/relpic.hpp"

#include <map>

namespace relk {

class NotUnitIdeal : public Error {
 public:
  using Error::Error;
};

struct Cover {
  RingPtr<ModularBase> ring;
  std::vector<ModElement> elements;
  std::vector<ModElement> certificate;  // sum_i certificate[i] * elements[i] = 1
};

inline Cover make_cover(const RingPtr<ModularBase>& a, const std::vector<ModElement>& elems) {
  if (elems.empty()) throw NotUnitIdeal("cover needs at least one element");
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& s : elems) {
    if (s.ring() != a) throw OwnerMismatch("cover element is not in " + a->name());
    for (std::size_t j = 0; j < a->rank(); ++j) cols.push_back((s * a->basis(j)).coords());
  }
  SpanSolver<ModularBase> solver(*a, cols);
  auto x = solver.solve(a->one().coords());
  if (!x) {
    std::string list;
    for (const auto& s : elems) list += (list.empty() ? "" : ", ") + s.str();
    throw NotUnitIdeal("elements {" + list + "} do not generate the unit ideal of " + a->name());
  }
  Cover c{a, elems, {}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    ModElement ci = a->zero();
    for (std::size_t j = 0; j < a->rank(); ++j) ci += a->basis(j).scaled((*x)[i * a->rank() + j]);
    c.certificate.push_back(ci);
  }
  ModElement check = a->zero();
  for (std::size_t i = 0; i < elems.size(); ++i) check += c.certificate[i] * elems[i];
  if (!check.is_one()) throw Error("make_cover: certificate verification failed");
  return c;
}

enum class CechFunctor { NU, Pic, NPic };

inline const char* to_string(CechFunctor f) {
  switch (f) {
    case CechFunctor::NU: return "nu";
    case CechFunctor::Pic: return "pic";
    case CechFunctor::NPic: return "npic";
  }
  return "?";
}

inline CechFunctor parse_functor(const std::string& s) {
  if (s == "nu") return CechFunctor::NU;
  if (s == "pic") return CechFunctor::Pic;
  if (s == "npic") return CechFunctor::NPic;
  throw Error("unknown functor '" + s + "' (expected nu, pic or npic)");
}

struct CechComplex {
  AbComplex complex;
  std::vector<std::vector<std::vector<std::size_t>>> labels;  // subsets J per position; {} is A itself
  std::vector<AbGroup> terms;
  CechFunctor functor = CechFunctor::NU;
  std::size_t degree = 0;
  bool augmented = true;
};

/// One localization A_{s_J} -> B_{f(s_J)} of the extension.
struct CechSite {
  std::vector<std::size_t> subset;
  Localization<ModularBase> a, b;
  std::shared_ptr<ModExtension> ext;
};

namespace detail {

inline std::string subset_name(const std::vector<std::size_t>& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + "}";
}

/// The ring map R_J -> R_K (J subset of K) induced by R -> R_K.
inline RingMap<ModularBase> restriction(const Localization<ModularBase>& from, const Localization<ModularBase>& to) {
  std::vector<ModElement> images;
  for (std::size_t i = 0; i < from.ring->rank(); ++i) {
    auto lift = from.map.preimage(from.ring->basis(i));
    if (!lift) throw Error("restriction: localization map is not onto");
    images.push_back(to.map(*lift));
  }
  return RingMap<ModularBase>(from.ring, to.ring, std::move(images));
}

inline CechSite make_site(const ModExtension& e, const Cover& cover, std::vector<std::size_t> subset,
                          std::size_t bound) {
  ModElement s = e.source()->one();
  for (auto i : subset) s *= cover.elements[i];
  Localization<ModularBase> la = localize(e.source(), s, bound);
  Localization<ModularBase> lb = localize(e.target(), e(s), bound);
  std::vector<ModElement> images;
  for (std::size_t i = 0; i < la.ring->rank(); ++i) {
    auto lift = la.map.preimage(la.ring->basis(i));
    images.push_back(lb.map(e(*lift)));
  }
  auto ext = std::make_shared<ModExtension>(e.name() + "_" + subset_name(subset),
                                            RingMap<ModularBase>(la.ring, lb.ring, std::move(images)), bound);
  return CechSite{std::move(subset), std::move(la), std::move(lb), std::move(ext)};
}

template <class T, class GroupFn, class RestrictFn>
CechComplex assemble(const std::vector<std::vector<CechSite>>& positions, GroupFn&& group_of, RestrictFn&& restrict) {
  CechComplex cx;
  std::vector<std::vector<FiniteGroup<T>>> groups;
  for (const auto& pos : positions) {
    std::vector<FiniteGroup<T>> gs;
    std::vector<std::vector<std::size_t>> labels;
    for (const auto& site : pos) {
      gs.push_back(group_of(site));
      labels.push_back(site.subset);
    }
    groups.push_back(std::move(gs));
    cx.labels.push_back(std::move(labels));
  }
  for (std::size_t p = 0; p < positions.size(); ++p) {
    std::vector<Integer> dims;
    for (const auto& g : groups[p])
      for (auto d : g.dims()) dims.push_back(d);
    cx.complex.relations.push_back(IntMatrix::diagonal(dims));
    cx.terms.push_back(AbGroup::from_relations(dims.size(), IntMatrix::diagonal(dims)));
  }
  for (std::size_t p = 0; p + 1 < positions.size(); ++p) {
    const auto& src = positions[p];
    const auto& dst = positions[p + 1];
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> row_off, col_off;
    for (const auto& g : groups[p + 1]) row_off.push_back(rows), rows += g.rank();
    for (const auto& g : groups[p]) col_off.push_back(cols), cols += g.rank();
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < dst.size(); ++k) {
      const auto& target = dst[k].subset;
      for (std::size_t j = 0; j < target.size(); ++j) {
        std::vector<std::size_t> face = target;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        std::size_t idx = src.size();
        for (std::size_t i = 0; i < src.size(); ++i)
          if (src[i].subset == face) idx = i;
        if (idx == src.size()) throw Error("cech: missing face " + subset_name(face));
        const int sign = j % 2 ? -1 : 1;
        const auto& gs = groups[p][idx];
        const auto& gt = groups[p + 1][k];
        for (std::size_t c = 0; c < gs.rank(); ++c) {
          auto coords = gt.coordinates(restrict(src[idx], dst[k], gs.generator(c)));
          for (std::size_t r = 0; r < coords.size(); ++r) d(row_off[k] + r, col_off[idx] + c) += sign * coords[r];
        }
      }
    }
    cx.complex.differentials.push_back(std::move(d));
  }
  return cx;
}

}  // namespace detail

/**
 * Builds the (augmented) Cech complex of the chosen functor over the cover.
 * NU is taken of the target ring B, localized along f; for a plain ring use
 * the identity extension.
 */
inline CechComplex build_complex(const ModExtension& e, const Cover& cover, CechFunctor functor, std::size_t degree,
                                 bool augmented = true, std::size_t bound = kDefaultEnumerationBound) {
  if (cover.ring != e.source()) throw OwnerMismatch("cover is not over the source ring of " + e.name());
  const std::size_t r = cover.elements.size();
  std::vector<std::vector<CechSite>> positions;
  if (augmented) positions.push_back({detail::make_site(e, cover, {}, bound)});
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<CechSite> pos;
    for (auto& j : subsets(r, k)) pos.push_back(detail::make_site(e, cover, j, bound));
    positions.push_back(std::move(pos));
  }

  CechComplex cx;
  if (functor == CechFunctor::Pic) {
    auto group_of = [&](const CechSite& s) { return pic_group(*s.ext, bound).pic; };
    auto restrict = [](const CechSite& from, const CechSite& to, const ModElement& x) {
      return detail::restriction(from.b, to.b)(x);
    };
    cx = detail::assemble<ModElement>(positions, group_of, restrict);
  } else {
    auto group_of = [&](const CechSite& s) {
      if (functor == CechFunctor::NU) return nu_group(s.b.ring, s.ext->target_nilradical(), degree, bound);
      return npic_group(*s.ext, degree, bound);
    };
    auto restrict = [](const CechSite& from, const CechSite& to, const NilUnit<ModularBase>& x) {
      return apply_map(detail::restriction(from.b, to.b), x);
    };
    cx = detail::assemble<NilUnit<ModularBase>>(positions, group_of, restrict);
  }
  cx.functor = functor;
  cx.degree = degree;
  cx.augmented = augmented;
  cx.complex.validate();
  return cx;
}

struct ExactnessReport {
  std::vector<AbGroup> homology;
  bool exact() const {
    return std::all_of(homology.begin(), homology.end(), [](const AbGroup& g) { return g.is_trivial(); });
  }
};

inline ExactnessReport verify_exactness(const CechComplex& cx) {
  ExactnessReport rep;
  for (std::size_t i = 0; i < cx.complex.length(); ++i) rep.homology.push_back(homology(cx.complex, i));
  return rep;
}

/// The complex with its first nonzero differential replaced by zero (still a
/// complex, but no longer exact when that differential mattered).
inline CechComplex corrupt_differential(CechComplex cx) {
  for (auto& d : cx.complex.differentials) {
    bool nonzero = false;
    for (std::size_t i = 0; i < d.rows() && !nonzero; ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d(i, j) != 0) nonzero = true;
    if (!nonzero) continue;
    d = IntMatrix(d.rows(), d.cols());
    return cx;
  }
  throw Error("corrupt_differential: every differential is already zero");
}

/**
 * NU(A)_[s]: the colimit of NU(A) under x(t) -> x(st), i.e. its stable image
 * in the finite group, as an abelian group.
 */
inline AbGroup nu_colimit(const RingPtr<ModularBase>& a, const ModElement& s, std::size_t degree,
                          std::size_t bound = kDefaultEnumerationBound) {
  Nilradical<ModularBase> nil = nilradical(a, bound);
  NilUnitGroup g = nu_group(a, nil, degree, bound);
  auto substitute = [&](const NilUnit<ModularBase>& x) {
    NilUnit<ModularBase> y = x;
    ModElement pw = a->one();
    for (std::size_t k = 1; k <= degree; ++k) {
      pw *= s;
      y[k] = x[k] * pw;
    }
    return y;
  };
  std::vector<NilUnit<ModularBase>> image;
  for (std::size_t i = 0; i < g.rank(); ++i) image.push_back(g.generator(i));
  std::int64_t order = g.order();
  for (;;) {
    for (auto& x : image) x = substitute(x);
    FiniteGroup<NilUnit<ModularBase>> sub = group_from_generators<NilUnit<ModularBase>, NilUnitHash>(
        image, NilUnit<ModularBase>::constant(a->one(), degree), std::multiplies<NilUnit<ModularBase>>{}, bound);
    if (sub.order() == order) return sub.structure();
    order = sub.order();
  }
}

}  // namespace relk
