#pragma once

/**
 * @file abelian.hpp
 * @brief Finitely generated abelian groups: invariant factors, complexes and
 *        their homology, and explicit finite groups with coordinates.
 */

#include "relk/integer.hpp"
#include "relk/smith.hpp"

#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace relk {

/// Invariant-factor description d1 | d2 | ... | dk; a factor 0 stands for Z.
class AbGroup {
 public:
  AbGroup() = default;

  explicit AbGroup(std::vector<Integer> invariants) : d_(std::move(invariants)) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] < 0 || d_[i] == 1) throw Error("AbGroup: invariant factors must be 0 or >= 2");
      if (i + 1 < d_.size() && d_[i + 1] != 0 && (d_[i] == 0 || d_[i + 1] % d_[i] != 0))
        throw Error("AbGroup: invariant factors violate the divisibility chain");
    }
  }

  static AbGroup free(std::size_t rank) { return AbGroup(std::vector<Integer>(rank, 0)); }

  /// The group Z^generators / (column span of relations).
  static AbGroup from_relations(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() != generators) throw Error("from_relations: row count must equal generator count");
    SmithForm sf = smith_normal_form(relations);
    std::vector<Integer> inv;
    std::size_t free_rank = generators - sf.rank;
    for (std::size_t i = 0; i < sf.rank; ++i)
      if (sf.d(i) != 1) inv.push_back(sf.d(i));
    inv.insert(inv.end(), free_rank, Integer(0));
    return AbGroup(std::move(inv));
  }

  const std::vector<Integer>& invariants() const { return d_; }
  bool is_trivial() const { return d_.empty(); }
  std::size_t free_rank() const {
    return static_cast<std::size_t>(std::count(d_.begin(), d_.end(), Integer(0)));
  }
  bool is_finite() const { return free_rank() == 0; }

  /// Group order, or nullopt when a free factor is present.
  std::optional<Integer> order() const {
    Integer o = 1;
    for (const auto& d : d_) {
      if (d == 0) return std::nullopt;
      o *= d;
    }
    return o;
  }

  /// "Z/d1 x Z/d2 x ... x Z^r"; the trivial group prints as "0".
  std::string to_string() const {
    if (d_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : d_) {
      if (d == 0) continue;
      os << (first ? "" : " x ") << "Z/" << d;
      first = false;
    }
    if (std::size_t r = free_rank(); r > 0) os << (first ? "" : " x ") << "Z^" << r;
    return os.str();
  }

  bool operator==(const AbGroup&) const = default;

 private:
  std::vector<Integer> d_;
};

inline std::ostream& operator<<(std::ostream& os, const AbGroup& g) { return os << g.to_string(); }

class IllFormedComplex : public Error {
 public:
  using Error::Error;
};

/// Cochain complex of finitely generated abelian groups. Term i is presented
/// as Z^{k_i} / col(relations[i]); differentials[i] maps term i to term i+1.
struct AbComplex {
  std::vector<IntMatrix> relations;
  std::vector<IntMatrix> differentials;

  static IntMatrix presentation_of(const AbGroup& g) {
    return IntMatrix::diagonal(g.invariants());
  }

  std::size_t length() const { return relations.size(); }
  std::size_t generators(std::size_t i) const { return relations[i].rows(); }

  /// Checks shapes, well-definedness of each map and d o d = 0.
  void validate() const {
    if (differentials.size() + 1 != relations.size() && !(relations.empty() && differentials.empty()))
      throw IllFormedComplex("complex needs exactly one differential between consecutive terms");
    for (std::size_t i = 0; i < differentials.size(); ++i) {
      const IntMatrix& d = differentials[i];
      if (d.rows() != generators(i + 1) || d.cols() != generators(i))
        throw IllFormedComplex("differential " + std::to_string(i) + " has the wrong shape");
      SmithForm target = smith_normal_form(relations[i + 1]);
      IntMatrix image_of_relations = d * relations[i];
      for (std::size_t j = 0; j < image_of_relations.cols(); ++j)
        if (!solve_integer(target, image_of_relations.column(j)))
          throw IllFormedComplex("differential " + std::to_string(i) + " is not well defined on the quotient");
      if (i + 1 < differentials.size()) {
        IntMatrix dd = differentials[i + 1] * d;
        SmithForm after = smith_normal_form(relations[i + 2]);
        for (std::size_t j = 0; j < dd.cols(); ++j)
          if (!solve_integer(after, dd.column(j)))
            throw IllFormedComplex("d o d != 0 at position " + std::to_string(i));
      }
    }
  }
};

/// Cohomology ker(d_i) / im(d_{i-1}) at position i.
inline AbGroup homology(const AbComplex& cx, std::size_t i) {
  if (i >= cx.length()) throw IllFormedComplex("homology: position out of range");
  const std::size_t k = cx.generators(i);
  if (k == 0) return AbGroup();

  // kernel lattice {x : d_i x in col(L_{i+1})} (contains col(L_i))
  IntMatrix kernel_gens;
  if (i + 1 < cx.length()) {
    IntMatrix combined = cx.differentials[i].hcat(cx.relations[i + 1]);
    IntMatrix ker = integer_kernel(combined);
    kernel_gens = IntMatrix(k, ker.cols());
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < ker.cols(); ++b) kernel_gens(a, b) = ker(a, b);
  } else {
    kernel_gens = IntMatrix::identity(k);
  }

  // lattice basis of the kernel: columns U^{-1} e_j d_j
  SmithForm ks = smith_normal_form(kernel_gens);
  const std::size_t m = ks.rank;
  if (m == 0) return AbGroup();

  IntMatrix image_gens = cx.relations[i];
  if (i > 0) image_gens = cx.differentials[i - 1].hcat(image_gens);

  IntMatrix z(m, image_gens.cols());
  for (std::size_t j = 0; j < image_gens.cols(); ++j) {
    std::vector<Integer> y = ks.left * image_gens.column(j);
    for (std::size_t a = 0; a < k; ++a) {
      if (a < m) {
        if (y[a] % ks.d(a) != 0) throw IllFormedComplex("image not contained in kernel at " + std::to_string(i));
        z(a, j) = y[a] / ks.d(a);
      } else if (y[a] != 0) {
        throw IllFormedComplex("image not contained in kernel at " + std::to_string(i));
      }
    }
  }
  return AbGroup::from_relations(m, z);
}

/**
 * A finite abelian group whose elements have type T, together with canonical
 * coordinates: every element x maps to (c_1 mod d_1, ..., c_k mod d_k) in the
 * invariant-factor decomposition, and generator(i) realizes the unit vector e_i.
 */
template <class T>
class FiniteGroup {
 public:
  using Op = std::function<T(const T&, const T&)>;
  using Coordinates = std::vector<std::int64_t>;
  using CoordFn = std::function<std::optional<Coordinates>(const T&)>;
  using ElementFn = std::function<T(const Coordinates&)>;

  FiniteGroup(AbGroup structure, T identity, Op op, CoordFn coords, ElementFn element)
      : structure_(std::move(structure)),
        identity_(std::move(identity)),
        op_(std::move(op)),
        coords_(std::move(coords)),
        element_(std::move(element)) {
    if (!structure_.is_finite()) throw Error("FiniteGroup: structure must be finite");
    for (const auto& d : structure_.invariants()) dims_.push_back(to_int64(d));
  }

  const AbGroup& structure() const { return structure_; }
  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : dims_) o *= d;
    return o;
  }
  const T& identity() const { return identity_; }
  T operate(const T& a, const T& b) const { return op_(a, b); }

  bool contains(const T& x) const { return coords_(x).has_value(); }

  /// Canonical coordinates; throws when x is not a member.
  Coordinates coordinates(const T& x) const {
    auto c = coords_(x);
    if (!c) throw Error("FiniteGroup: element is not a member of the group");
    return *c;
  }

  bool is_identity(const T& x) const {
    Coordinates c = coordinates(x);
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
  }

  bool equivalent(const T& a, const T& b) const { return coordinates(a) == coordinates(b); }

  /// Element with the given coordinates (reduced mod the invariants).
  T element(Coordinates c) const {
    if (c.size() != dims_.size()) throw Error("FiniteGroup: coordinate length mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], dims_[i]);
    return element_(c);
  }

  T generator(std::size_t i) const {
    Coordinates c(dims_.size(), 0);
    c.at(i) = 1;
    return element(c);
  }

  /// All elements, in mixed-radix order of their coordinates.
  std::vector<T> elements() const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(order()));
    Coordinates c(dims_.size(), 0);
    for (;;) {
      out.push_back(element(c));
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == dims_[i]) c[i++] = 0;
      if (i == c.size()) break;
    }
    return out;
  }

  /// Order of x as a group element.
  std::int64_t element_order(const T& x) const {
    std::int64_t o = 1;
    Coordinates c = coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) o = lcm64(o, dims_[i] / gcd64(c[i], dims_[i]));
    return o;
  }

 private:
  AbGroup structure_;
  T identity_;
  Op op_;
  CoordFn coords_;
  ElementFn element_;
  std::vector<std::int64_t> dims_;
};

namespace detail {

inline std::size_t mixed_radix_index(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& dims) {
  std::size_t idx = 0, mult = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    idx += static_cast<std::size_t>(c[i]) * mult;
    mult *= static_cast<std::size_t>(dims[i]);
  }
  return idx;
}

/// Maps integer coordinates x (w.r.t. some presentation) through the Smith
/// data of the relation matrix into invariant-factor coordinates.
struct InvariantChart {
  IntMatrix left;                  // U
  IntMatrix left_inverse;          // U^{-1}
  std::vector<std::size_t> kept;   // rows with d != 1
  std::vector<std::int64_t> dims;  // d for kept rows
  std::vector<std::int64_t> all_dims;
  std::vector<std::vector<std::int64_t>> rows;  // kept rows of U reduced mod dims

  static InvariantChart from_relations(const IntMatrix& relations) {
    SmithForm sf = smith_normal_form(relations);
    if (sf.rank != relations.rows()) throw Error("InvariantChart: presented group is infinite");
    InvariantChart ch{sf.left, sf.left_inverse, {}, {}, {}, {}};
    for (std::size_t i = 0; i < sf.rank; ++i) {
      ch.all_dims.push_back(to_int64(sf.d(i)));
      if (sf.d(i) != 1) {
        ch.kept.push_back(i);
        ch.dims.push_back(to_int64(sf.d(i)));
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < sf.left.cols(); ++j) row.push_back(to_int64(mod_floor(sf.left(i, j), sf.d(i))));
        ch.rows.push_back(std::move(row));
      }
    }
    return ch;
  }

  AbGroup structure() const {
    std::vector<Integer> inv(dims.begin(), dims.end());
    return AbGroup(std::move(inv));
  }

  std::vector<std::int64_t> chart(const std::vector<std::int64_t>& x) const {
    std::vector<std::int64_t> out(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
      __int128 s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s = (s + static_cast<__int128>(rows[a][j]) * x[j]) % dims[a];
      out[a] = mod_floor(static_cast<std::int64_t>(s), dims[a]);
    }
    return out;
  }

  /// Presentation coordinates realizing invariant coordinates y.
  std::vector<Integer> lift(const std::vector<std::int64_t>& y) const {
    std::vector<Integer> full(left.rows(), 0);
    for (std::size_t a = 0; a < kept.size(); ++a) full[kept[a]] = y[a];
    return left_inverse * full;
  }
};

}  // namespace detail

/**
 * Enumerates the subgroup generated by gens (closed under op, with identity)
 * and computes its invariant factors. Generators are adjoined one at a time:
 * the order of each new generator modulo the current subgroup yields one
 * relation, and the cosets are listed explicitly.
 */
template <class T, class Hash = std::hash<T>>
FiniteGroup<T> group_from_generators(const std::vector<T>& gens, const T& identity,
                                     typename FiniteGroup<T>::Op op,
                                     std::size_t bound = kDefaultEnumerationBound) {
  std::vector<T> elems{identity};
  std::vector<std::vector<std::int64_t>> expr{{}};
  std::unordered_map<T, std::size_t, Hash> index{{identity, 0}};
  std::vector<std::vector<std::int64_t>> relations;  // columns, padded lazily

  for (const T& x : gens) {
    if (index.count(x)) continue;
    std::int64_t k = 1;
    T p = x;
    while (!index.count(p)) {
      p = op(p, x);
      if (static_cast<std::size_t>(++k) > bound)
        throw EnumerationBoundExceeded("group_from_generators: no power of a generator returns to the group");
    }
    const std::size_t j = expr.front().size();
    for (auto& e : expr) e.push_back(0);
    for (auto& r : relations) r.push_back(0);
    std::vector<std::int64_t> rel = expr[index.at(p)];
    for (auto& v : rel) v = -v;
    rel[j] += k;
    relations.push_back(std::move(rel));

    const std::size_t old = elems.size();
    if (old * static_cast<std::size_t>(k) > bound)
      throw EnumerationBoundExceeded("group_from_generators: group order exceeds the enumeration bound");
    T xi = x;
    for (std::int64_t i = 1; i < k; ++i) {
      for (std::size_t h = 0; h < old; ++h) {
        T y = op(elems[h], xi);
        if (index.count(y)) throw Error("group_from_generators: input is not an abelian group");
        std::vector<std::int64_t> e = expr[h];
        e[j] = i;
        index.emplace(y, elems.size());
        elems.push_back(std::move(y));
        expr.push_back(std::move(e));
      }
      xi = op(xi, x);
    }
  }

  const std::size_t ngen = expr.front().size();
  IntMatrix rel(ngen, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (std::size_t r = 0; r < ngen; ++r) rel(r, c) = relations[c][r];

  auto chart = std::make_shared<detail::InvariantChart>(detail::InvariantChart::from_relations(rel));
  auto table = std::make_shared<std::unordered_map<T, std::vector<std::int64_t>, Hash>>();
  auto by_index = std::make_shared<std::vector<T>>(elems.size(), identity);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<std::int64_t> y = chart->chart(expr[i]);
    (*by_index)[detail::mixed_radix_index(y, chart->dims)] = elems[i];
    table->emplace(elems[i], std::move(y));
  }
  auto coords = [table](const T& x) -> std::optional<std::vector<std::int64_t>> {
    auto it = table->find(x);
    if (it == table->end()) return std::nullopt;
    return it->second;
  };
  auto element = [by_index, chart](const std::vector<std::int64_t>& y) -> T {
    return (*by_index)[detail::mixed_radix_index(y, chart->dims)];
  };
  return FiniteGroup<T>(chart->structure(), identity, std::move(op), std::move(coords), std::move(element));
}

/// G / <subgroup_gens>; classes are represented by elements of G.
template <class T>
FiniteGroup<T> quotient(const FiniteGroup<T>& g, const std::vector<T>& subgroup_gens) {
  const std::size_t k = g.rank();
  std::vector<std::vector<Integer>> cols;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> c(k, 0);
    c[i] = g.dims()[i];
    cols.push_back(std::move(c));
  }
  for (const T& h : subgroup_gens) {
    auto c = g.coordinates(h);  // throws on membership failure
    cols.emplace_back(c.begin(), c.end());
  }
  auto chart = std::make_shared<detail::InvariantChart>(
      detail::InvariantChart::from_relations(IntMatrix::from_columns(k, cols)));
  auto parent = std::make_shared<FiniteGroup<T>>(g);
  auto coords = [parent, chart](const T& x) -> std::optional<std::vector<std::int64_t>> {
    if (!parent->contains(x)) return std::nullopt;
    return chart->chart(parent->coordinates(x));
  };
  auto element = [parent, chart](const std::vector<std::int64_t>& y) -> T {
    std::vector<Integer> lifted = chart->lift(y);
    std::vector<std::int64_t> c(lifted.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_int64(mod_floor(lifted[i], Integer(parent->dims()[i])));
    return parent->element(c);
  };
  return FiniteGroup<T>(chart->structure(), g.identity(), [parent](const T& a, const T& b) { return parent->operate(a, b); },
                        std::move(coords), std::move(element));
}

/// Matrix of a homomorphism between two finite groups in canonical coordinates.
template <class S, class T, class Map>
IntMatrix homomorphism_matrix(const FiniteGroup<S>& src, const FiniteGroup<T>& dst, Map&& map) {
  IntMatrix m(dst.rank(), src.rank());
  for (std::size_t j = 0; j < src.rank(); ++j) {
    auto c = dst.coordinates(map(src.generator(j)));
    for (std::size_t i = 0; i < dst.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}

}  // namespace relk
