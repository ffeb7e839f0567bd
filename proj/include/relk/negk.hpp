#pragma once

// Negative relative K-groups of f: A -> B with A local artinian:
// K_0(f) = B^x/A^x, K_{-1}(f) = Z^{r-1} for r the number of components of B,
// and K_n(f) = 0 below. Also the anodal test.

#include "relk/relpic.hpp"

#include <map>

namespace relk {

class NotLocal : public Error {
 public:
  using Error::Error;
};

/// Exactly two idempotents and every element a unit or nilpotent.
inline bool is_local(const RingPtr<ModularBase>& r, std::size_t bound = kDefaultEnumerationBound) {
  if (r->is_zero_ring()) return false;
  if (idempotents(r, bound).all.size() != 2) return false;
  for (const auto& x : elements(r, bound))
    if (!is_nilpotent(x) && !is_unit(x)) return false;
  return true;
}

struct NegKTable {
  std::string extension;
  std::size_t components = 0;  // r
  std::map<int, AbGroup> groups;  // degree n <= 0 -> K_n(f)
};

inline NegKTable neg_k_table(const ModExtension& e, int floor_degree = -3, std::size_t bound = kDefaultEnumerationBound) {
  if (!is_local(e.source(), bound)) throw NotLocal(e.source()->name() + " is not a local artinian ring");
  NegKTable t;
  t.extension = e.name();
  t.components = idempotents(e.target(), bound).components();
  t.groups[0] = pic_group(e, bound).pic.structure();
  t.groups[-1] = AbGroup::free(t.components - 1);
  for (int n = -2; n >= floor_degree; --n) t.groups[n] = AbGroup();
  return t;
}

struct AnodalResult {
  bool anodal = true;
  std::optional<ModElement> witness;  // b not in A with b^2 - b, b^3 - b^2 in A
};

/// Exhaustive scan of B in coordinate order.
inline AnodalResult is_anodal(const ModExtension& e, std::size_t bound = kDefaultEnumerationBound) {
  const auto& f = e.map();
  for (const auto& b : elements(e.target(), bound)) {
    if (f.in_image(b)) continue;
    const ModElement b2 = b * b;
    if (f.in_image(b2 - b) && f.in_image(b2 * b - b2)) return AnodalResult{false, b};
  }
  return AnodalResult{};
}

}  // namespace relk
