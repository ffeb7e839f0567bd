#pragma once

// Faithful ring extensions f: A -> B, the object every relative invariant
// is attached to.

#include "relk/ring_ops.hpp"

namespace relk {

/// The map is not injective; the message exhibits a kernel element.
class NotFaithful : public StructureError {
 public:
  using StructureError::StructureError;
};

template <class Base>
class Extension {
 public:
  Extension(std::string name, RingMap<Base> f, std::size_t bound = kDefaultEnumerationBound)
      : name_(std::move(name)), f_(std::move(f)) {
    if (auto k = f_.kernel_witness())
      throw NotFaithful(name_ + ": map " + f_.source()->name() + " -> " + f_.target()->name() +
                        " is not injective (faithfulness required); " + k->str() + " maps to 0");
    nil_a_ = nilradical(f_.source(), bound);
    nil_b_ = nilradical(f_.target(), bound);
  }

  const std::string& name() const { return name_; }
  const RingPtr<Base>& source() const { return f_.source(); }
  const RingPtr<Base>& target() const { return f_.target(); }
  const RingMap<Base>& map() const { return f_; }
  const Nilradical<Base>& source_nilradical() const { return nil_a_; }
  const Nilradical<Base>& target_nilradical() const { return nil_b_; }

  Element<Base> operator()(const Element<Base>& a) const { return f_(a); }

 private:
  std::string name_;
  RingMap<Base> f_;
  Nilradical<Base> nil_a_, nil_b_;
};

using ModExtension = Extension<ModularBase>;
using QExtension = Extension<RationalBase>;

}  // namespace relk
