#pragma once

#include "bicheck/core/bicategory.hpp"
#include "bicheck/core/fin.hpp"

namespace bicheck {

// Trivial 2-cell payload for locally-discrete instances.
struct UnitV {
  bool operator==(const UnitV&) const { return true; }
  json to_json() const { return json("id"); }
};

// Shared base for locally-discrete bicategories: hom-categories are
// discrete, every 2-cell is an identity, composition of 1-cells is strict.
class LocallyDiscreteBicat : public Bicategory {
 public:
  TwoCell id2(const OneCell& f) const override {
    return TwoCell{f, f, Value::of(UnitV{})};
  }
  TwoCell vcomp(const TwoCell& b, const TwoCell& a) const override;
  TwoCell whisker_l(const OneCell& h, const TwoCell& a) const override;
  TwoCell whisker_r(const TwoCell& a, const OneCell& f) const override;
  TwoCell associator(const OneCell& h, const OneCell& g,
                     const OneCell& f) const override;
  TwoCell lunitor(const OneCell& f) const override { return id2(f); }
  TwoCell runitor(const OneCell& f) const override { return id2(f); }
  std::optional<TwoCell> invert(const TwoCell& a) const override;
  std::optional<std::string> validate2(const TwoCell& a) const override;
};

// Finite sets and total functions, viewed as a locally-discrete bicategory.
// Serves as the monoidal bicategory of values for the Kleisli and
// state-passing instances.
struct FunData {
  FiniteFun fun;
  bool operator==(const FunData& o) const { return fun == o.fun; }
  json to_json() const { return fun.to_json(); }
};

OneCell mk_fun_cell(const FiniteFun& f);
const FiniteFun& fun_of(const OneCell& f);

class FinFunBicat final : public LocallyDiscreteBicat {
 public:
  std::string name() const override { return "finfun"; }
  OneCell id1(const Obj& a) const override;
  OneCell compose1(const OneCell& g, const OneCell& f) const override;
};

Bicategory::Ptr finfun_bicat();

// State-passing instance over a finite state set S: hom(A, B) is the set of
// functions S x A -> S x B, with discrete hom-categories.
struct StateData {
  FiniteFun fun;  // S x A -> S x B
  bool operator==(const StateData& o) const { return fun == o.fun; }
  json to_json() const { return fun.to_json(); }
};

OneCell mk_state_cell(const FiniteSet& src, const FiniteSet& dst,
                      const FiniteFun& fun, const FiniteSet& state);
const FiniteFun& state_fun_of(const OneCell& f);

class StateBicat final : public LocallyDiscreteBicat {
 public:
  explicit StateBicat(FiniteSet state) : state_(std::move(state)) {}
  std::string name() const override { return "state"; }
  const FiniteSet& state() const { return state_; }
  OneCell id1(const Obj& a) const override;
  OneCell compose1(const OneCell& g, const OneCell& f) const override;

 private:
  FiniteSet state_;
};

std::shared_ptr<const StateBicat> state_bicat(const FiniteSet& s);

}  // namespace bicheck
