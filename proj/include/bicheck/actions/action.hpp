#pragma once

#include "bicheck/structures/premonoidal.hpp"

namespace bicheck {

// Left action of a monoidal bicategory V on a bicategory B.
// Conventions:
//   assoc       (X&Y)|>C -> X|>(Y|>C)
//   assoc_nat   (f|>(g|>c)) o assoc => assoc o ((f&g)|>c)
//   lunit_nat   b o lunit_B => lunit_{B'} o (I|>b)
//   pent        [X|>assoc o (assoc o (assoc^V|>D))] => [assoc o assoc]
//   mid         (X |> lunit_C) o assoc_{X,I,C} => runit^V_X |> C
//   lun         lunit^V_Y |> C => lunit_{Y|>C} o assoc_{I,Y,C}
struct LeftAction {
  MonoidalStructure V;
  Bicategory::Ptr B;
  std::function<Obj(const Obj&, const Obj&)> act_obj;
  std::function<OneCell(const OneCell&, const OneCell&)> act_1;  // f |> b
  std::function<TwoCell(const TwoCell&, const TwoCell&)> act_2;
  // (f2|>b2) o (f1|>b1) => (f2 o f1) |> (b2 o b1)
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&,
                        const OneCell&)>
      compositor;  // f2, b2, f1, b1
  std::function<TwoCell(const Obj&, const Obj&)> unit;
  std::function<AdjointEquivalence(const Obj&)> lunit;
  std::function<TwoCell(const OneCell&)> lunit_nat;
  std::function<AdjointEquivalence(const Obj&, const Obj&, const Obj&)> assoc;
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&)>
      assoc_nat;  // f, g, c
  std::function<TwoCell(const Obj&, const Obj&, const Obj&, const Obj&)> pent;
  std::function<TwoCell(const Obj&, const Obj&)> mid;
  std::function<TwoCell(const Obj&, const Obj&)> lun;
};

// Right action, mirrored:
//   assoc       (A<|X)<|Y -> A<|(X&Y)
//   assoc_nat   (a<|(f&g)) o assoc => assoc o ((a<|f)<|g)
//   runit_nat   a o runit_A => runit_{A'} o (a <| I)
//   pent        [A<|assoc^V o (assoc o (assoc<|Z))] => [assoc o assoc]
//   mid         (A <| lunit^V_X) o assoc_{A,I,X} => runit_A <| X
//   run         runit_{A<|X} => (A <| runit^V_X) o assoc_{A,X,I}
struct RightAction {
  MonoidalStructure V;
  Bicategory::Ptr B;
  std::function<Obj(const Obj&, const Obj&)> act_obj;
  std::function<OneCell(const OneCell&, const OneCell&)> act_1;  // a <| g
  std::function<TwoCell(const TwoCell&, const TwoCell&)> act_2;
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&,
                        const OneCell&)>
      compositor;  // a2, g2, a1, g1
  std::function<TwoCell(const Obj&, const Obj&)> unit;
  std::function<AdjointEquivalence(const Obj&)> runit;
  std::function<TwoCell(const OneCell&)> runit_nat;
  std::function<AdjointEquivalence(const Obj&, const Obj&, const Obj&)> assoc;
  std::function<TwoCell(const OneCell&, const OneCell&, const OneCell&)>
      assoc_nat;  // a, f, g
  std::function<TwoCell(const Obj&, const Obj&, const Obj&, const Obj&)> pent;
  std::function<TwoCell(const Obj&, const Obj&)> mid;
  std::function<TwoCell(const Obj&, const Obj&)> run;
};

// Canonical self-actions of a monoidal bicategory.
LeftAction canonical_left_action(const MonoidalStructure& m);
RightAction canonical_right_action(const MonoidalStructure& m);

// The action as a pseudofunctor over the product instance.
Pseudofunctor left_act_psf(const LeftAction& l);
Pseudofunctor right_act_psf(const RightAction& r);
// Endofunctor X |> (-) of B, and the functor (-) |> C : V -> B.
Pseudofunctor lact_fix_obj(const LeftAction& l, const Obj& x);
Pseudofunctor lact_fix_arg(const LeftAction& l, const Obj& c);
Pseudofunctor ract_fix_obj(const RightAction& r, const Obj& x);
Pseudofunctor ract_fix_arg(const RightAction& r, const Obj& a);

// Transformation builders shared with the Freyd-action layer.
PseudonatTrans lact_lunit_psnat(const LeftAction& l);
PseudonatTrans lact_vcell_psnat(const LeftAction& l, const OneCell& u);
PseudonatTrans lact_bcell_psnat(const LeftAction& l, const OneCell& b);
PseudonatTrans lact_assoc_b_psnat(const LeftAction& l, const Obj& x,
                                  const Obj& y);
PseudonatTrans lact_assoc_v1_psnat(const LeftAction& l, const Obj& y,
                                   const Obj& c);
PseudonatTrans lact_assoc_v2_psnat(const LeftAction& l, const Obj& x,
                                   const Obj& c);
PseudonatTrans ract_runit_psnat(const RightAction& r);
PseudonatTrans ract_vcell_psnat(const RightAction& r, const OneCell& u);
PseudonatTrans ract_bcell_psnat(const RightAction& r, const OneCell& b);
PseudonatTrans ract_assoc_b_psnat(const RightAction& r, const Obj& x,
                                  const Obj& y);
PseudonatTrans ract_assoc_v1_psnat(const RightAction& r, const Obj& a,
                                   const Obj& y);
PseudonatTrans ract_assoc_v2_psnat(const RightAction& r, const Obj& a,
                                   const Obj& x);
PseudonatTrans monoidal_lunit_psnat(const MonoidalStructure& v);
PseudonatTrans monoidal_runit_psnat(const MonoidalStructure& v);
std::optional<json> mod_square(const PseudonatTrans& s,
                               const PseudonatTrans& t,
                               std::function<TwoCell(const Obj&)> gamma,
                               const OneCell& open_cell);

// Law suites; vctx samples V, bctx samples B.
std::vector<LawRun> left_action_laws(const CheckCtx& vctx,
                                     const CheckCtx& bctx,
                                     const LeftAction& l);
std::vector<LawRun> right_action_laws(const CheckCtx& vctx,
                                      const CheckCtx& bctx,
                                      const RightAction& r);

}  // namespace bicheck
