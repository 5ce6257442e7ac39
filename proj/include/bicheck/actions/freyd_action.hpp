#pragma once

#include "bicheck/actions/action.hpp"

namespace bicheck {

// A pair of extensions of the canonical self-actions along J, with the
// middle-associativity equivalence kappa. Icon orientations (fixed):
//   theta(f,g) : f |> J g => J(f & g)
//   zeta(f,g)  : J f <| g => J(f & g)
// kappa's 1-cell components are J(alpha); kappa_nat is its pseudonaturality
//   (f |> (b <| h)) o kappa => kappa o ((f |> b) <| h).
struct FreydAction {
  MonoidalStructure V;
  LeftAction left;
  RightAction right;
  Pseudofunctor J;
  std::function<TwoCell(const OneCell&, const OneCell&)> theta;
  std::function<TwoCell(const OneCell&, const OneCell&)> zeta;
  std::function<AdjointEquivalence(const Obj&, const Obj&, const Obj&)> kappa;
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&)>
      kappa_nat;
};

// nu_{f,g} : J f <| g => f |> J g, the composite of zeta and the inverse
// of theta.
TwoCell nu(const FreydAction& fa, const OneCell& f, const OneCell& g);

// J f <| B => f |> B for an object B, through nu at the identity.
TwoCell nu_at_obj(const FreydAction& fa, const OneCell& f, const Obj& b);

// The defining laws of a Freyd action: both extensions are 0-strict action
// morphisms with invertible icons, kappa is a pseudonatural adjoint
// equivalence with components J(alpha), the main compatibility equation
// holds, and the four appendix axioms hold as exact pasting equalities.
std::vector<LawRun> freyd_action_laws(const CheckCtx& vctx,
                                      const CheckCtx& bctx,
                                      const FreydAction& fa);

}  // namespace bicheck
