#pragma once

#include "bicheck/structures/freyd.hpp"

namespace bicheck {

// Derived premonoidal structure on Span(FinSet) under cartesian product;
// every 1-cell carries canonical centrality witnesses.
PremonoidalStructure span_premonoidal();

// The canonical premonoidal structure of the graded Kleisli bicategory with
// T_e(X) = X x e: whiskering through the two strengths, structural cells
// re-graded along the cartesian structure of grades.
PremonoidalStructure copara_premonoidal();
// The Freyd structure J : dC -> K_T with J(f) the pure cell eta o f and
// identity structural icons.
FreydStructure copara_freyd();

// Centrality witnesses for a pure cell (unit grade), given by the canonical
// grade isomorphism; satisfies lc = rc^-1 against other pure cells.
CentralOneCell copara_pure_central(const FiniteFun& f);

// State-passing premonoidal structure over the state set s, with
// locally-discrete hom-categories; all structural 2-cells are identities.
PremonoidalStructure state_premonoidal(const FiniteSet& s);
FreydStructure state_freyd(const FiniteSet& s);
CentralOneCell state_value_central(const FiniteSet& s, const FiniteFun& f);

}  // namespace bicheck
