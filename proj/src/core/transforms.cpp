#include "bicheck/core/transforms.hpp"

#include "bicheck/core/coherence.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

Pseudofunctor identity_psf(Bicategory::Ptr b) {
  Pseudofunctor f;
  f.src = b;
  f.dst = b;
  f.label = "Id";
  f.on_obj = [](const Obj& a) { return a; };
  f.on_1 = [](const OneCell& c) { return c; };
  f.on_2 = [](const TwoCell& c) { return c; };
  f.compositor = [b](const OneCell& g, const OneCell& f1) {
    return b->id2(b->compose1(g, f1));
  };
  f.unit = [b](const Obj& a) { return b->id2(b->id1(a)); };
  return f;
}

Pseudofunctor strict_psf(Bicategory::Ptr src, Bicategory::Ptr dst,
                         std::string label,
                         std::function<Obj(const Obj&)> on_obj,
                         std::function<OneCell(const OneCell&)> on_1,
                         std::function<TwoCell(const TwoCell&)> on_2) {
  Pseudofunctor f;
  f.src = std::move(src);
  f.dst = std::move(dst);
  f.label = std::move(label);
  f.on_obj = std::move(on_obj);
  f.on_1 = std::move(on_1);
  f.on_2 = std::move(on_2);
  Bicategory::Ptr s = f.src;
  Bicategory::Ptr d = f.dst;
  auto o1 = f.on_1;
  auto oo = f.on_obj;
  f.compositor = [s, d, o1](const OneCell& g, const OneCell& f1) {
    OneCell lhs = d->compose1(o1(g), o1(f1));
    OneCell rhs = o1(s->compose1(g, f1));
    if (lhs != rhs)
      throw InvalidValue("strict pseudofunctor is not strict on composition");
    return d->id2(lhs);
  };
  f.unit = [s, d, o1, oo](const Obj& a) {
    OneCell lhs = d->id1(oo(a));
    OneCell rhs = o1(s->id1(a));
    if (lhs != rhs)
      throw InvalidValue("strict pseudofunctor is not strict on identities");
    return d->id2(lhs);
  };
  return f;
}

Pseudofunctor compose_psf(const Pseudofunctor& g, const Pseudofunctor& f) {
  Pseudofunctor h;
  h.src = f.src;
  h.dst = g.dst;
  h.label = g.label + "." + f.label;
  h.on_obj = [g, f](const Obj& a) { return g.on_obj(f.on_obj(a)); };
  h.on_1 = [g, f](const OneCell& c) { return g.on_1(f.on_1(c)); };
  h.on_2 = [g, f](const TwoCell& c) { return g.on_2(f.on_2(c)); };
  h.compositor = [g, f](const OneCell& v, const OneCell& u) {
    // GF v o GF u => G(F v o F u) => GF(v o u)
    TwoCell step1 = g.compositor(f.on_1(v), f.on_1(u));
    TwoCell step2 = g.on_2(f.compositor(v, u));
    return g.dst->vcomp(step2, step1);
  };
  h.unit = [g, f](const Obj& a) {
    TwoCell step1 = g.unit(f.on_obj(a));
    TwoCell step2 = g.on_2(f.unit(a));
    return g.dst->vcomp(step2, step1);
  };
  return h;
}

PseudonatTrans identity_psnat(const Pseudofunctor& f) {
  PseudonatTrans s;
  s.F = f;
  s.G = f;
  s.label = "id." + f.label;
  Bicategory::Ptr d = f.dst;
  s.at = [f, d](const Obj& a) { return d->id1(f.on_obj(a)); };
  s.nat = [f, d](const OneCell& c) {
    OneCell fc = f.on_1(c);
    // F c o id => F c => id o F c
    return d->vcomp(d->lunitor_inv(fc), d->runitor(fc));
  };
  return s;
}

PseudonatTrans vcomp_psnat(const PseudonatTrans& t, const PseudonatTrans& s) {
  PseudonatTrans r;
  r.F = s.F;
  r.G = t.G;
  r.label = t.label + "." + s.label;
  Bicategory::Ptr d = s.F.dst;
  r.at = [t, s, d](const Obj& a) { return d->compose1(t.at(a), s.at(a)); };
  r.nat = [t, s, d](const OneCell& f) {
    const Obj& a = f.src;
    const Obj& b = f.dst;
    OneCell ta = t.at(a), tb = t.at(b), sa = s.at(a), sb = s.at(b);
    OneCell hf = t.G.on_1(f), gf = s.G.on_1(f), ff = s.F.on_1(f);
    return d->vchain({
        d->assoc_inv(hf, ta, sa),
        d->whisker_r(t.nat(f), sa),
        d->associator(tb, gf, sa),
        d->whisker_l(tb, s.nat(f)),
        d->assoc_inv(tb, sb, ff),
    });
  };
  return r;
}

PseudonatTrans whisker_psf_psnat(const Pseudofunctor& h,
                                 const PseudonatTrans& s) {
  PseudonatTrans r;
  r.F = compose_psf(h, s.F);
  r.G = compose_psf(h, s.G);
  r.label = h.label + "." + s.label;
  Bicategory::Ptr d = h.dst;
  r.at = [h, s](const Obj& a) { return h.on_1(s.at(a)); };
  r.nat = [h, s, d](const OneCell& f) {
    return d->vchain({
        h.compositor(s.G.on_1(f), s.at(f.src)),
        h.on_2(s.nat(f)),
        h.compositor_inv(s.at(f.dst), s.F.on_1(f)),
    });
  };
  return r;
}

PseudonatTrans whisker_psnat_psf(const PseudonatTrans& s,
                                 const Pseudofunctor& k) {
  PseudonatTrans r;
  r.F = compose_psf(s.F, k);
  r.G = compose_psf(s.G, k);
  r.label = s.label + "." + k.label;
  r.at = [s, k](const Obj& a) { return s.at(k.on_obj(a)); };
  r.nat = [s, k](const OneCell& f) { return s.nat(k.on_1(f)); };
  return r;
}

PseudonatTrans adjust_components(const PseudonatTrans& s,
                                 std::function<OneCell(const Obj&)> at2,
                                 std::function<TwoCell(const Obj&)> adj) {
  PseudonatTrans r = s;
  Bicategory::Ptr d = s.F.dst;
  r.at = std::move(at2);
  r.nat = [s, adj, d](const OneCell& f) {
    return d->vchain({
        d->whisker_l(s.G.on_1(f), d->inv(adj(f.src))),
        s.nat(f),
        d->whisker_r(adj(f.dst), s.F.on_1(f)),
    });
  };
  return r;
}

Icon identity_icon(const Pseudofunctor& f) {
  Icon i;
  i.F = f;
  i.G = f;
  i.label = "id." + f.label;
  Bicategory::Ptr d = f.dst;
  i.at = [f, d](const OneCell& c) { return d->id2(f.on_1(c)); };
  return i;
}

AdjointEquivalence mk_adjoint(Bicategory::Ptr b, OneCell fwd, OneCell bwd,
                              TwoCell unit, TwoCell counit) {
  return AdjointEquivalence{std::move(b), std::move(fwd), std::move(bwd),
                            std::move(unit), std::move(counit)};
}

AdjointEquivalence identity_adjoint(Bicategory::Ptr b, const Obj& a) {
  OneCell id = b->id1(a);
  TwoCell u = b->lunitor_inv(id);
  TwoCell c = b->lunitor(id);
  return AdjointEquivalence{b, id, id, u, c};
}

AdjointEquivalence promote_to_adjoint(Bicategory::Ptr b, const OneCell& f,
                                      const OneCell& fstar, const TwoCell& u,
                                      const TwoCell& c) {
  if (!b->invert(u) || !b->invert(c))
    throw NotInvertible("equivalence unit/counit must be invertible");
  OneCell fg = b->compose1(f, fstar);
  Word wf = Word::gen(f), wg = Word::gen(fstar);
  Word w_src = Word::comp(Word::comp(wf, wg), Word::comp(wf, wg));
  Word w_dst = Word::comp(wf, Word::comp(Word::comp(wg, wf), wg));
  TwoCell counit2 = b->vchain({
      b->lunitor_inv(fg),
      b->whisker_r(b->inv(c), fg),
      coherence_cell(*b, w_src, w_dst),
      b->whisker_l(f, b->whisker_r(b->inv(u), fstar)),
      b->whisker_l(f, b->lunitor(fstar)),
      c,
  });
  return AdjointEquivalence{b, f, fstar, u, counit2};
}

}  // namespace bicheck
