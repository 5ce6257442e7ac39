#pragma once

#include "bicheck/structures/centre.hpp"

namespace bicheck {

// Identity-on-objects 0-strict premonoidal pseudofunctor: values V,
// computations B, the coercion J, and icon families
//   theta^A : (A |> J(-)) => J(A & -),   zeta^A : (J(-) <| A) => J((-) & A).
struct PremonoidalPseudofunctor {
  MonoidalStructure V;
  PremonoidalStructure P;
  Pseudofunctor J;
  std::function<Icon(const Obj&)> theta;
  std::function<Icon(const Obj&)> zeta;

  Icon theta_at(const Obj& a) const { return theta(a); }
  TwoCell theta_cell(const Obj& a, const OneCell& f) const {
    return theta(a).at(f);
  }
  TwoCell zeta_cell(const Obj& a, const OneCell& f) const {
    return zeta(a).at(f);
  }
};

// Freyd structure: the premonoidal pseudofunctor together with the central
// factoring assigning every value its interchange witnesses.
struct FreydStructure {
  PremonoidalPseudofunctor jp;
  std::function<CentralOneCell(const OneCell&)> central;  // J_Z on values
};

// Law suite: icon laws for theta/zeta, strict preservation of the
// structural 1-cells, the compatibility pastings for the structural
// transformations and modifications, the three Freyd axioms, and
// functoriality of the central factoring. `vctx` samples values, `bctx`
// samples computations.
std::vector<LawRun> freyd_laws(const CheckCtx& vctx, const CheckCtx& bctx,
                               const FreydStructure& f);

// Exhaustive search for an interchange-failure witness: 1-cells f, g whose
// two whiskered composition orders differ as 1-cells. Returns the first
// witness in enumeration order, or nullopt.
struct InterchangeWitness {
  OneCell f, g;
  OneCell left_then_right;   // (f <| B') o (A |> g)
  OneCell right_then_left;   // (A' |> g) o (f <| B)
  json to_json() const;
};
std::optional<InterchangeWitness> find_interchange_failure(
    const BinoidalStructure& bin, const InstanceSampler& sampler);

}  // namespace bicheck
