#pragma once

// The named example extensions, covers and excision configurations, stored
// as an input document and parsed on first use.

#include "relk/input.hpp"

namespace relk {

inline const char* const kCatalogDocument = R"(
[ring F2e]
kind = dual
modulus = 2

[ring F3e]
kind = dual
modulus = 3

[ring Qe]
kind = dual
base = Q

[ring F4]
kind = monogenic
modulus = 2
poly = x^2 + x + 1

[ring F9]
kind = monogenic
modulus = 3
poly = x^2 + 1

[ring F2xF2]
kind = product
factors = F2, F2

[ring F2xF2xF2]
kind = product
factors = F2, F2, F2

[ring Z4e]
kind = dual
modulus = 4

[ring Z12e]
kind = dual
modulus = 12

[ring Z6e]
kind = dual
modulus = 6

[ring Z30xZ30]
kind = product
factors = Z/30, Z/30

[ring F3e_x_F9]
kind = product
factors = F3e, F9

[ring F2x4]
kind = monogenic
modulus = 2
poly = x^4

[ring F2e_x_F2]
kind = product
factors = F2e, F2

# F_4[e] and its subring F_2 + e F_4[e]
[ring F4e]
kind = algebra
modulus = 2
basis = 1, x, e, xe
mul x x = 1 + x
mul x e = xe
mul x xe = e + xe
mul e e = 0
mul e xe = 0
mul xe xe = 0

[ring F2_eF4]
kind = algebra
modulus = 2
basis = 1, e, xe
mul e e = 0
mul e xe = 0
mul xe xe = 0

[ring Qx3]
kind = monogenic
base = Q
poly = x^3

[ring QxQe]
kind = product
factors = Q, Qe

[extension dual-f2]
source = F2
target = F2e

[extension dual-f3]
source = F3
target = F3e

[extension dual-q]
source = Q
target = Qe

[extension f2-f4]
source = F2
target = F4

[extension f3-f9]
source = F3
target = F9

[extension split-f2]
source = F2
target = F2xF2

[extension split3-f2]
source = F2
target = F2xF2xF2

[extension z4-dual]
source = Z/4
target = Z4e

[extension z12]
source = Z/12
target = Z/12

[extension z12-dual]
source = Z/12
target = Z12e

[extension z6-dual]
source = Z/6
target = Z6e

[extension z30-split]
source = Z/30
target = Z30xZ30

[extension dual-f2-self]
source = F2e
target = F2e

[extension f3-mixed]
source = F3
target = F3e_x_F9

[extension f2dual-x4]
source = F2e
target = F2x4
map 1 = 1
map e = x^2

[extension dual-f2-diag]
source = F2e
target = F2e_x_F2
map 1 = 1
map e = e_1

[extension f4-dual-sub]
source = F2_eF4
target = F4e
map 1 = 1
map e = e
map xe = xe

[extension qdual-x3]
source = Qe
target = Qx3
map 1 = 1
map e = x^2

[extension q-split]
source = Q
target = QxQe

[cover z12-4-9]
ring = Z/12
elements = 4, 9

[cover z12-2-5]
ring = Z/12
elements = 2, 5

[cover z12-3-4-7]
ring = Z/12
elements = 3, 4, 7

[cover z6-2-3]
ring = Z/6
elements = 2, 3

[cover z6-2-3-5]
ring = Z/6
elements = 2, 3, 5

[cover z30-6-10-15]
ring = Z/30
elements = 6, 10, 15

[cover z4-1-2]
ring = Z/4
elements = 1, 2

[cover f2-unit]
ring = F2
elements = 1

[cover f2e-unit]
ring = F2e
elements = 1
)";

/// A shared ideal I of A and B (given by generators in A) for excision.
struct ExcisionConfig {
  std::string name;
  std::string extension;
  std::vector<std::string> ideal;
};

struct Catalog {
  Document doc;
  std::vector<ExcisionConfig> excision;

  const AnyExtension& extension(const std::string& name) const {
    auto it = doc.extensions.find(name);
    if (it == doc.extensions.end()) throw InputError(0, "unknown example '" + name + "'");
    return it->second;
  }

  std::shared_ptr<const ModExtension> finite(const std::string& name) const {
    const AnyExtension& e = extension(name);
    if (e.index() != 0) throw InputError(0, "example '" + name + "' is not over a finite ring");
    return std::get<0>(e);
  }

  std::vector<std::shared_ptr<const ModExtension>> finite_extensions() const {
    std::vector<std::shared_ptr<const ModExtension>> out;
    for (const auto& n : doc.extension_order)
      if (doc.extensions.at(n).index() == 0) out.push_back(std::get<0>(doc.extensions.at(n)));
    return out;
  }

  std::vector<std::shared_ptr<const QExtension>> rational_extensions() const {
    std::vector<std::shared_ptr<const QExtension>> out;
    for (const auto& n : doc.extension_order)
      if (doc.extensions.at(n).index() == 1) out.push_back(std::get<1>(doc.extensions.at(n)));
    return out;
  }

  /// Catalog extensions whose source ring is the ring of the cover.
  std::vector<std::shared_ptr<const ModExtension>> extensions_over(const Cover& c) const {
    std::vector<std::shared_ptr<const ModExtension>> out;
    for (const auto& e : finite_extensions())
      if (e->source() == c.ring) out.push_back(e);
    return out;
  }
};

inline const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog cat{parse_input(kCatalogDocument), {}};
    cat.excision = {
        {"dual-diag", "dual-f2-diag", {"e"}},
        {"f4-conductor", "f4-dual-sub", {"e", "xe"}},
    };
    return cat;
  }();
  return c;
}

}  // namespace relk
