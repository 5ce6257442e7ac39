#include "bicheck/core/bicategory.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

TwoCell Bicategory::inv(const TwoCell& a) const {
  auto r = invert(a);
  if (!r) throw NotInvertible("2-cell has no inverse: " + a.str());
  return *r;
}

TwoCell Bicategory::hcomp2(const TwoCell& b, const TwoCell& a) const {
  // b * a : g o f => g' o f', computed as (b . f') o (g . a).
  if (!(a.src.dst == b.src.src))
    throw BoundaryMismatch("horizontal composite endpoints");
  return vcomp(whisker_r(b, a.dst), whisker_l(b.src, a));
}

TwoCell Bicategory::assoc_inv(const OneCell& h, const OneCell& g,
                              const OneCell& f) const {
  return inv(associator(h, g, f));
}

TwoCell Bicategory::lunitor_inv(const OneCell& f) const {
  return inv(lunitor(f));
}

TwoCell Bicategory::runitor_inv(const OneCell& f) const {
  return inv(runitor(f));
}

TwoCell Bicategory::vchain(std::initializer_list<TwoCell> cells) const {
  const TwoCell* acc = nullptr;
  TwoCell r;
  for (const TwoCell& c : cells) {
    if (!acc) {
      r = c;
    } else {
      if (r.dst != c.src)
        throw BoundaryMismatch("vertical chain: " + r.dst.str() +
                               " then " + c.src.str());
      r = vcomp(c, r);
    }
    acc = &r;
  }
  if (!acc) throw InvalidValue("empty vertical chain");
  return r;
}

}  // namespace bicheck
