#pragma once

#include "bicheck/structures/monoidal.hpp"

namespace bicheck {

// Binoidal structure: separate whiskering pseudofunctors A|>(-) and (-)<|B
// agreeing on objects.
struct BinoidalStructure {
  Bicategory::Ptr B;
  std::function<Obj(const Obj&, const Obj&)> ten_obj;
  std::function<Pseudofunctor(const Obj&)> act_l;  // A |> (-)
  std::function<Pseudofunctor(const Obj&)> act_r;  // (-) <| B

  OneCell wl(const Obj& a, const OneCell& g) const { return act_l(a).on_1(g); }
  OneCell wr(const OneCell& f, const Obj& b) const { return act_r(b).on_1(f); }
  TwoCell wl2(const Obj& a, const TwoCell& t) const {
    return act_l(a).on_2(t);
  }
  TwoCell wr2(const TwoCell& t, const Obj& b) const {
    return act_r(b).on_2(t);
  }
};

// The binoidal structure induced by a monoidal one, with both whiskerings
// obtained by fixing one tensor argument at the identity.
BinoidalStructure canonical_binoidal(const MonoidalStructure& m);

Pseudofunctor tensor_fix_left(const MonoidalStructure& m, const Obj& a);
Pseudofunctor tensor_fix_right(const MonoidalStructure& m, const Obj& b);

// A 1-cell equipped with interchange witness families
//   lc(g) : (f <| B') o (A |> g) => (A' |> g) o (f <| B)
//   rc(g) : (B' |> f) o (g <| A) => (g <| A') o (B |> f)
// that assemble into pseudonatural transformations.
struct CentralOneCell {
  OneCell cell;
  std::function<TwoCell(const OneCell&)> lc;
  std::function<TwoCell(const OneCell&)> rc;
};

// Generators of central cells for an instance: with fresh endpoints, or
// with prescribed ones.
struct CentralGen {
  std::function<CentralOneCell(Rng&)> free;
  std::function<CentralOneCell(Rng&, const Obj&, const Obj&)> at;
};

// Canonical centrality of any 1-cell in a monoidal bicategory: lc from the
// tensor's interchange isomorphism, rc as the inverse of the mirrored lc.
CentralOneCell canonical_central(const MonoidalStructure& m,
                                 const OneCell& f);

// The transformation A |> (-) => A' |> (-) with components f <| B whose
// witnesses are the lc family (stored inverses match the orientation
// G f o sigma => sigma o F f).
PseudonatTrans lc_psnat(const BinoidalStructure& bin,
                        const CentralOneCell& c);
// Mirror: (-) <| A => (-) <| A' with components B |> f.
PseudonatTrans rc_psnat(const BinoidalStructure& bin,
                        const CentralOneCell& c);

// Centrality witnesses for an identity 1-cell (unitor-built).
CentralOneCell central_id(const BinoidalStructure& bin, const Obj& a);
// Composite of central cells; witnesses compose through the hom-bicategory
// and are re-indexed along the whiskering compositors.
CentralOneCell central_compose(const BinoidalStructure& bin,
                               const CentralOneCell& g,
                               const CentralOneCell& f);

// Defining laws of a central 1-cell: both families assemble into
// pseudonatural transformations with invertible witnesses.
std::vector<LawRun> central_1cell_laws(const CheckCtx& ctx,
                                       const BinoidalStructure& bin,
                                       std::function<CentralOneCell(Rng&)> gen,
                                       const std::string& name,
                                       const std::string& anchor);

// Central 2-cell conditions: sigma <| B and B |> sigma are modifications
// between the lc / rc transformations of its boundary central cells.
std::optional<json> central_2cell_failure(const BinoidalStructure& bin,
                                          const CentralOneCell& src,
                                          const CentralOneCell& dst,
                                          const TwoCell& sigma,
                                          const Obj& b, const OneCell& g);
std::vector<LawRun> central_2cell_laws(
    const CheckCtx& ctx, const BinoidalStructure& bin,
    std::function<std::tuple<CentralOneCell, CentralOneCell, TwoCell>(Rng&)>
        gen,
    const std::string& name, const std::string& anchor);

}  // namespace bicheck
