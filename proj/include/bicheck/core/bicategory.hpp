#pragma once

#include <memory>
#include <optional>
#include <string>

#include "bicheck/core/cells.hpp"

namespace bicheck {

// Capability record an instance supplies. All operations are total on
// type-correct inputs and throw BoundaryMismatch otherwise. Values are
// immutable, so instances are safe to share across threads.
class Bicategory {
 public:
  using Ptr = std::shared_ptr<const Bicategory>;
  virtual ~Bicategory() = default;

  virtual std::string name() const = 0;

  virtual OneCell id1(const Obj& a) const = 0;
  // g after f (f : A -> B, g : B -> C).
  virtual OneCell compose1(const OneCell& g, const OneCell& f) const = 0;

  virtual TwoCell id2(const OneCell& f) const = 0;
  // b after a, vertically.
  virtual TwoCell vcomp(const TwoCell& b, const TwoCell& a) const = 0;
  // h . a : h o f => h o g for a : f => g with dst(f) = src(h).
  virtual TwoCell whisker_l(const OneCell& h, const TwoCell& a) const = 0;
  // a . f : g o f => g' o f for a : g => g' with dst(f) = src(g).
  virtual TwoCell whisker_r(const TwoCell& a, const OneCell& f) const = 0;

  // (h o g) o f => h o (g o f)
  virtual TwoCell associator(const OneCell& h, const OneCell& g,
                             const OneCell& f) const = 0;
  virtual TwoCell lunitor(const OneCell& f) const = 0;  // id o f => f
  virtual TwoCell runitor(const OneCell& f) const = 0;  // f o id => f

  virtual std::optional<TwoCell> invert(const TwoCell& a) const = 0;

  // Structural well-formedness of a 2-cell (payload laws, e.g. a span
  // 2-cell commuting with both legs). Returns a reason when invalid.
  virtual std::optional<std::string> validate2(const TwoCell& a) const {
    (void)a;
    return std::nullopt;
  }

  // Derived operations.
  TwoCell inv(const TwoCell& a) const;                   // throws NotInvertible
  TwoCell hcomp2(const TwoCell& b, const TwoCell& a) const;
  TwoCell assoc_inv(const OneCell& h, const OneCell& g, const OneCell& f) const;
  TwoCell lunitor_inv(const OneCell& f) const;
  TwoCell runitor_inv(const OneCell& f) const;
  // Checked vertical composition of a chain, first-to-last.
  TwoCell vchain(std::initializer_list<TwoCell> cells) const;
};

}  // namespace bicheck
