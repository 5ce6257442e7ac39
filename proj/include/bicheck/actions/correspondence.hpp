#pragma once

#include "bicheck/actions/freyd_action.hpp"
#include "bicheck/structures/freyd.hpp"

namespace bicheck {

// Freyd bicategory -> actions: f |> b := (X' |x b) o (J f <x B), with the
// compositor built from the chosen centrality witnesses; mirrored for the
// right action.
LeftAction freyd_to_left_action(const FreydStructure& f);
RightAction freyd_to_right_action(const FreydStructure& f);
// Both extensions plus kappa, with theta' = zeta' the collapsing composite.
FreydAction freyd_to_action(const FreydStructure& f);

// Freyd action -> Freyd bicategory: A |x (-) := A |> (-), witnesses from
// the nu-interchange squares, modifications as J-images pasted with the
// icons.
FreydStructure action_to_freyd(const FreydAction& fa);

// Morphisms of the two categories over a fixed J.
struct FreydActMorphism {
  FreydAction src, dst;
  // components f |> b => f |>' b and a <| g => a <|' g
  std::function<TwoCell(const OneCell&, const OneCell&)> left_icon;
  std::function<TwoCell(const OneCell&, const OneCell&)> right_icon;
};

struct FreydBicatMorphism {
  FreydStructure src, dst;
  // families A |x f => A |x' f and f <x A => f <x' A
  std::function<TwoCell(const Obj&, const OneCell&)> left_fam;
  std::function<TwoCell(const Obj&, const OneCell&)> right_fam;
};

FreydBicatMorphism functor_f_on_morphism(const FreydActMorphism& m);
FreydActMorphism functor_g_on_morphism(const FreydBicatMorphism& m);

// Identity morphisms, used as base points for functoriality checks.
FreydActMorphism identity_act_morphism(const FreydAction& fa);
FreydBicatMorphism identity_bicat_morphism(const FreydStructure& f);

// Morphism validity: the icon pair commutes with the structural data.
std::optional<json> act_morphism_failure(const FreydActMorphism& m,
                                         const OneCell& f, const OneCell& b,
                                         const OneCell& g, const OneCell& a,
                                         const OneCell& h);
std::optional<json> bicat_morphism_failure(const FreydBicatMorphism& m,
                                           const Obj& a, const OneCell& b,
                                           const OneCell& v);

// The explicit round-trip icons of the equivalence and their laws.
std::vector<LawRun> roundtrip_action_laws(const CheckCtx& vctx,
                                          const CheckCtx& bctx,
                                          const FreydAction& fa);
std::vector<LawRun> roundtrip_freyd_laws(const CheckCtx& vctx,
                                         const CheckCtx& bctx,
                                         const FreydStructure& f);
// Functoriality of F and G on sampled morphisms.
std::vector<LawRun> functor_laws(const CheckCtx& vctx, const CheckCtx& bctx,
                                 const FreydStructure& f);

}  // namespace bicheck
