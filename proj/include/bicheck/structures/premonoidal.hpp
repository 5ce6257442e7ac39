#pragma once

#include "bicheck/structures/binoidal.hpp"

namespace bicheck {

// Premonoidal bicategory: binoidal structure, central structural adjoint
// equivalences, per-argument naturality families for the associator, and
// the four structural modifications.
//
// Conventions (matching MonoidalStructure where the shapes coincide):
//   assoc_nat_l  (f <| (B&C)) o alpha => alpha o ((f <| B) <| C)
//   assoc_nat_m  (A |> (g <| C)) o alpha => alpha o ((A |> g) <| C)
//   assoc_nat_r  (A |> (B |> h)) o alpha => alpha o ((A&B) |> h)
//   lunit_nat    g o lambda_A => lambda_{A'} o (I |> g)
//   runit_nat    f o rho_A => rho_{A'} o (f <| I)
//   pent         [A|>alpha o (alpha o (alpha<|D))] => [alpha o alpha]
//   mid          (A |> lambda_B) o alpha_{A,I,B} => rho_A <| B
//   lun          lambda_A <| B => lambda_{A&B} o alpha_{I,A,B}
//   run          rho_{A&B} => (A |> rho_B) o alpha_{A,B,I}
struct PremonoidalStructure {
  BinoidalStructure bin;
  Obj unit;

  std::function<AdjointEquivalence(const Obj&)> lunit_adj;
  std::function<CentralOneCell(const Obj&)> lunit_central;
  std::function<TwoCell(const OneCell&)> lunit_nat;

  std::function<AdjointEquivalence(const Obj&)> runit_adj;
  std::function<CentralOneCell(const Obj&)> runit_central;
  std::function<TwoCell(const OneCell&)> runit_nat;

  std::function<AdjointEquivalence(const Obj&, const Obj&, const Obj&)>
      assoc_adj;
  std::function<CentralOneCell(const Obj&, const Obj&, const Obj&)>
      assoc_central;
  std::function<TwoCell(const OneCell&, const Obj&, const Obj&)> assoc_nat_l;
  std::function<TwoCell(const Obj&, const OneCell&, const Obj&)> assoc_nat_m;
  std::function<TwoCell(const Obj&, const Obj&, const OneCell&)> assoc_nat_r;

  std::function<TwoCell(const Obj&, const Obj&, const Obj&, const Obj&)> pent;
  std::function<TwoCell(const Obj&, const Obj&)> mid;
  std::function<TwoCell(const Obj&, const Obj&)> lun;
  std::function<TwoCell(const Obj&, const Obj&)> run;

  OneCell lunit1(const Obj& a) const { return lunit_adj(a).fwd; }
  OneCell runit1(const Obj& a) const { return runit_adj(a).fwd; }
  OneCell assoc1(const Obj& a, const Obj& b, const Obj& c) const {
    return assoc_adj(a, b, c).fwd;
  }
};

// The three per-argument associator families as pseudonatural
// transformations with the remaining arguments fixed.
PseudonatTrans assoc_l_psnat(const PremonoidalStructure& p, const Obj& b,
                             const Obj& c);
PseudonatTrans assoc_m_psnat(const PremonoidalStructure& p, const Obj& a,
                             const Obj& c);
PseudonatTrans assoc_r_psnat(const PremonoidalStructure& p, const Obj& a,
                             const Obj& b);
PseudonatTrans lunit_psnat(const PremonoidalStructure& p);
PseudonatTrans runit_psnat(const PremonoidalStructure& p);

// Canonical premonoidal structure of a monoidal bicategory; every 1-cell is
// central via the tensor interchange, and the structural data is reused.
PremonoidalStructure premonoidal_from_monoidal(const MonoidalStructure& m);

// Core premonoidal law suite: binoidal pseudofunctor laws, centrality of
// the structural equivalences, per-argument pseudonaturality, the
// modification squares in every argument, adjoint-equivalence triangles,
// and centrality of the modification components.
std::vector<LawRun> premonoidal_laws(const CheckCtx& ctx,
                                     const PremonoidalStructure& p,
                                     const CentralGen& gen);

}  // namespace bicheck
