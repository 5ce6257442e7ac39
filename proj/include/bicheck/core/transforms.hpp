#pragma once

#include <functional>
#include <string>

#include "bicheck/core/bicategory.hpp"

namespace bicheck {

struct Pseudofunctor {
  Bicategory::Ptr src, dst;
  std::string label;
  std::function<Obj(const Obj&)> on_obj;
  std::function<OneCell(const OneCell&)> on_1;
  std::function<TwoCell(const TwoCell&)> on_2;
  // F g o F f => F (g o f)
  std::function<TwoCell(const OneCell& g, const OneCell& f)> compositor;
  // id_{F A} => F(id_A)
  std::function<TwoCell(const Obj&)> unit;

  TwoCell compositor_inv(const OneCell& g, const OneCell& f) const {
    return dst->inv(compositor(g, f));
  }
  TwoCell unit_inv(const Obj& a) const { return dst->inv(unit(a)); }
};

Pseudofunctor identity_psf(Bicategory::Ptr b);
// Strict pseudofunctor: compositor and unit are identity 2-cells. The maps
// must satisfy F(g) o F(f) = F(g o f) and F(id) = id on the nose.
Pseudofunctor strict_psf(Bicategory::Ptr src, Bicategory::Ptr dst,
                         std::string label,
                         std::function<Obj(const Obj&)> on_obj,
                         std::function<OneCell(const OneCell&)> on_1,
                         std::function<TwoCell(const TwoCell&)> on_2);
Pseudofunctor compose_psf(const Pseudofunctor& g, const Pseudofunctor& f);

// sigma : F => G with invertible naturality cells
// sigma_f : G f o sigma_A => sigma_B o F f.
struct PseudonatTrans {
  Pseudofunctor F, G;
  std::string label;
  std::function<OneCell(const Obj&)> at;
  std::function<TwoCell(const OneCell&)> nat;
};

PseudonatTrans identity_psnat(const Pseudofunctor& f);
PseudonatTrans vcomp_psnat(const PseudonatTrans& t, const PseudonatTrans& s);
// H o sigma : H F => H G
PseudonatTrans whisker_psf_psnat(const Pseudofunctor& h,
                                 const PseudonatTrans& s);
// sigma o K : F K => G K
PseudonatTrans whisker_psnat_psf(const PseudonatTrans& s,
                                 const Pseudofunctor& k);
// Replace each component by an isomorphic one; adj(A) : sigma_A => sigma'_A.
PseudonatTrans adjust_components(const PseudonatTrans& s,
                                 std::function<OneCell(const Obj&)> at2,
                                 std::function<TwoCell(const Obj&)> adj);

struct Modification {
  PseudonatTrans s, t;
  std::string label;
  std::function<TwoCell(const Obj&)> at;  // Gamma_A : s_A => t_A
};

// Oplax transformation with identity 1-cell components between
// pseudofunctors agreeing on objects; at(f) : F f => G f.
struct Icon {
  Pseudofunctor F, G;
  std::string label;
  std::function<TwoCell(const OneCell&)> at;
};

Icon identity_icon(const Pseudofunctor& f);

struct AdjointEquivalence {
  Bicategory::Ptr B;
  OneCell fwd, bwd;
  TwoCell unit;    // id_src => bwd o fwd
  TwoCell counit;  // fwd o bwd => id_dst
};

// Adjoint equivalence on an identity 1-cell, with unitor unit/counit.
AdjointEquivalence identity_adjoint(Bicategory::Ptr b, const Obj& a);
// Adjoint equivalence whose forward/backward cells are given and whose
// unit/counit are the canonical comparison cells supplied by the caller.
AdjointEquivalence mk_adjoint(Bicategory::Ptr b, OneCell fwd, OneCell bwd,
                              TwoCell unit, TwoCell counit);

// Fixes the counit of an equivalence so the triangle laws hold: the unit is
// kept and the counit is replaced by
//   c' = c o (f . u^-1 . f*) o (c^-1 . (f o f*))
// with structural cells inserted at the canonical positions. Idempotent on
// data that already satisfies the triangle laws.
AdjointEquivalence promote_to_adjoint(Bicategory::Ptr b, const OneCell& f,
                                      const OneCell& fstar, const TwoCell& u,
                                      const TwoCell& c);

}  // namespace bicheck
