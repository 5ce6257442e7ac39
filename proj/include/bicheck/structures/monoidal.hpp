#pragma once

#include "bicheck/core/checkers.hpp"
#include "bicheck/core/transforms.hpp"

namespace bicheck {

// Monoidal bicategory presented componentwise: tensor data, structural
// adjoint equivalences with their pseudonaturality witnesses, and the four
// structural modifications.
//
// Orientation conventions (fixed across the project):
//   assoc      alpha_{A,B,C} : (A&B)&C -> A&(B&C)
//   assoc_nat  (f&(g&h)) o alpha => alpha o ((f&g)&h)
//   lunit_nat  f o lambda_A => lambda_{A'} o (id_I & f)
//   runit_nat  f o rho_A => rho_{A'} o (f & id_I)
//   pent       [A&alpha o (alpha o (alpha&D))] => [alpha o alpha]
//   mid        (A&lambda_B) o alpha_{A,I,B} => rho_A & B
//   lun        lambda_A & B => lambda_{A&B} o alpha_{I,A,B}
//   run        rho_{A&B} => (A&rho_B) o alpha_{A,B,I}
struct MonoidalStructure {
  Bicategory::Ptr B;
  Obj unit;
  std::function<Obj(const Obj&, const Obj&)> ten_obj;
  std::function<OneCell(const OneCell&, const OneCell&)> ten_1;
  std::function<TwoCell(const TwoCell&, const TwoCell&)> ten_2;
  // (g1 & g2) o (f1 & f2) => (g1 o f1) & (g2 o f2)
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&,
                        const OneCell&)>
      ten_compositor;  // arguments g1, g2, f1, f2
  // id_{A&B} => id_A & id_B
  std::function<TwoCell(const Obj&, const Obj&)> ten_unit;

  std::function<AdjointEquivalence(const Obj&, const Obj&, const Obj&)> assoc;
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&)>
      assoc_nat;  // arguments f, g, h
  std::function<AdjointEquivalence(const Obj&)> lunit;
  std::function<TwoCell(const OneCell&)> lunit_nat;
  std::function<AdjointEquivalence(const Obj&)> runit;
  std::function<TwoCell(const OneCell&)> runit_nat;

  std::function<TwoCell(const Obj&, const Obj&, const Obj&, const Obj&)> pent;
  std::function<TwoCell(const Obj&, const Obj&)> mid;
  std::function<TwoCell(const Obj&, const Obj&)> lun;
  std::function<TwoCell(const Obj&, const Obj&)> run;
};

// The tensor as a pseudofunctor B x B -> B over the product instance.
Pseudofunctor tensor_psf(const MonoidalStructure& m);

// Cartesian monoidal structure on spans of finite sets.
MonoidalStructure span_monoidal();
// Cartesian monoidal structure on the locally-discrete bicategory of finite
// sets and functions; every required 2-cell is an identity.
MonoidalStructure finfun_monoidal();

// Law set for the monoidal data over an instance sampler: tensor
// pseudofunctoriality, pseudonaturality and triangle laws for the structural
// equivalences, modification squares for pent/mid/lun/run.
std::vector<LawRun> monoidal_laws(const CheckCtx& ctx,
                                  const MonoidalStructure& m);

}  // namespace bicheck
