#include "bicheck/actions/action.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/instances/product.hpp"

namespace bicheck {

LeftAction canonical_left_action(const MonoidalStructure& m) {
  LeftAction l;
  l.V = m;
  l.B = m.B;
  l.act_obj = m.ten_obj;
  l.act_1 = m.ten_1;
  l.act_2 = m.ten_2;
  l.compositor = m.ten_compositor;
  l.unit = m.ten_unit;
  l.lunit = m.lunit;
  l.lunit_nat = m.lunit_nat;
  l.assoc = m.assoc;
  l.assoc_nat = m.assoc_nat;
  l.pent = m.pent;
  l.mid = m.mid;
  l.lun = m.lun;
  return l;
}

RightAction canonical_right_action(const MonoidalStructure& m) {
  RightAction r;
  r.V = m;
  r.B = m.B;
  r.act_obj = m.ten_obj;
  r.act_1 = m.ten_1;
  r.act_2 = m.ten_2;
  r.compositor = m.ten_compositor;
  r.unit = m.ten_unit;
  r.runit = m.runit;
  r.runit_nat = m.runit_nat;
  r.assoc = m.assoc;
  r.assoc_nat = m.assoc_nat;
  r.pent = m.pent;
  r.mid = m.mid;
  r.run = m.run;
  return r;
}

Pseudofunctor left_act_psf(const LeftAction& l) {
  Pseudofunctor f;
  f.src = product_bicat(l.V.B, l.B);
  f.dst = l.B;
  f.label = "lact";
  f.on_obj = [l](const Obj& p) { return l.act_obj(obj_fst(p), obj_snd(p)); };
  f.on_1 = [l](const OneCell& p) {
    return l.act_1(cell_fst(p), cell_snd(p));
  };
  f.on_2 = [l](const TwoCell& p) {
    return l.act_2(cell2_fst(p), cell2_snd(p));
  };
  f.compositor = [l](const OneCell& g, const OneCell& f1) {
    return l.compositor(cell_fst(g), cell_snd(g), cell_fst(f1),
                        cell_snd(f1));
  };
  f.unit = [l](const Obj& p) { return l.unit(obj_fst(p), obj_snd(p)); };
  return f;
}

Pseudofunctor right_act_psf(const RightAction& r) {
  Pseudofunctor f;
  f.src = product_bicat(r.B, r.V.B);
  f.dst = r.B;
  f.label = "ract";
  f.on_obj = [r](const Obj& p) { return r.act_obj(obj_fst(p), obj_snd(p)); };
  f.on_1 = [r](const OneCell& p) {
    return r.act_1(cell_fst(p), cell_snd(p));
  };
  f.on_2 = [r](const TwoCell& p) {
    return r.act_2(cell2_fst(p), cell2_snd(p));
  };
  f.compositor = [r](const OneCell& g, const OneCell& f1) {
    return r.compositor(cell_fst(g), cell_snd(g), cell_fst(f1),
                        cell_snd(f1));
  };
  f.unit = [r](const Obj& p) { return r.unit(obj_fst(p), obj_snd(p)); };
  return f;
}

Pseudofunctor lact_fix_obj(const LeftAction& l, const Obj& x) {
  Pseudofunctor f;
  f.src = l.B;
  f.dst = l.B;
  f.label = "x|>-";
  f.on_obj = [l, x](const Obj& c) { return l.act_obj(x, c); };
  f.on_1 = [l, x](const OneCell& b) { return l.act_1(l.V.B->id1(x), b); };
  f.on_2 = [l, x](const TwoCell& t) {
    return l.act_2(l.V.B->id2(l.V.B->id1(x)), t);
  };
  f.compositor = [l, x](const OneCell& g, const OneCell& f1) {
    OneCell idx = l.V.B->id1(x);
    TwoCell step = l.compositor(idx, g, idx, f1);
    TwoCell fix = l.act_2(l.V.B->lunitor(idx),
                          l.B->id2(l.B->compose1(g, f1)));
    return l.B->vcomp(fix, step);
  };
  f.unit = [l, x](const Obj& c) { return l.unit(x, c); };
  return f;
}

Pseudofunctor lact_fix_arg(const LeftAction& l, const Obj& c) {
  Pseudofunctor f;
  f.src = l.V.B;
  f.dst = l.B;
  f.label = "-|>c";
  f.on_obj = [l, c](const Obj& x) { return l.act_obj(x, c); };
  f.on_1 = [l, c](const OneCell& u) { return l.act_1(u, l.B->id1(c)); };
  f.on_2 = [l, c](const TwoCell& t) {
    return l.act_2(t, l.B->id2(l.B->id1(c)));
  };
  f.compositor = [l, c](const OneCell& g, const OneCell& f1) {
    OneCell idc = l.B->id1(c);
    TwoCell step = l.compositor(g, idc, f1, idc);
    TwoCell fix = l.act_2(l.V.B->id2(l.V.B->compose1(g, f1)),
                          l.B->lunitor(idc));
    return l.B->vcomp(fix, step);
  };
  f.unit = [l, c](const Obj& x) { return l.unit(x, c); };
  return f;
}

Pseudofunctor ract_fix_obj(const RightAction& r, const Obj& x) {
  Pseudofunctor f;
  f.src = r.B;
  f.dst = r.B;
  f.label = "-<|x";
  f.on_obj = [r, x](const Obj& a) { return r.act_obj(a, x); };
  f.on_1 = [r, x](const OneCell& a) { return r.act_1(a, r.V.B->id1(x)); };
  f.on_2 = [r, x](const TwoCell& t) {
    return r.act_2(t, r.V.B->id2(r.V.B->id1(x)));
  };
  f.compositor = [r, x](const OneCell& g, const OneCell& f1) {
    OneCell idx = r.V.B->id1(x);
    TwoCell step = r.compositor(g, idx, f1, idx);
    TwoCell fix = r.act_2(r.B->id2(r.B->compose1(g, f1)),
                          r.V.B->lunitor(idx));
    return r.B->vcomp(fix, step);
  };
  f.unit = [r, x](const Obj& a) { return r.unit(a, x); };
  return f;
}

Pseudofunctor ract_fix_arg(const RightAction& r, const Obj& a) {
  Pseudofunctor f;
  f.src = r.V.B;
  f.dst = r.B;
  f.label = "a<|-";
  f.on_obj = [r, a](const Obj& x) { return r.act_obj(a, x); };
  f.on_1 = [r, a](const OneCell& g) { return r.act_1(r.B->id1(a), g); };
  f.on_2 = [r, a](const TwoCell& t) {
    return r.act_2(r.B->id2(r.B->id1(a)), t);
  };
  f.compositor = [r, a](const OneCell& g, const OneCell& f1) {
    OneCell ida = r.B->id1(a);
    TwoCell step = r.compositor(ida, g, ida, f1);
    TwoCell fix = r.act_2(r.B->lunitor(ida),
                          r.V.B->id2(r.V.B->compose1(g, f1)));
    return r.B->vcomp(fix, step);
  };
  f.unit = [r, a](const Obj& x) { return r.unit(a, x); };
  return f;
}

// The transformation [C |-> u |> C] for a value 1-cell u, with naturality
// from the action's interchange.
PseudonatTrans lact_vcell_psnat(const LeftAction& l, const OneCell& u) {
  PseudonatTrans s;
  s.F = lact_fix_obj(l, u.src);
  s.G = lact_fix_obj(l, u.dst);
  s.label = "u|>-";
  s.at = [l, u](const Obj& c) { return l.act_1(u, l.B->id1(c)); };
  s.nat = [l, u](const OneCell& c) {
    const Bicategory& B = *l.B;
    const Bicategory& BV = *l.V.B;
    OneCell idx = BV.id1(u.src), idx2 = BV.id1(u.dst);
    OneCell idc = B.id1(c.src), idc2 = B.id1(c.dst);
    return B.vchain({
        l.compositor(idx2, c, u, idc),
        l.act_2(BV.lunitor(u), B.runitor(c)),
        B.inv(l.act_2(BV.runitor(u), B.lunitor(c))),
        B.inv(l.compositor(u, idc2, idx, c)),
    });
  };
  return s;
}

// The transformation [X |-> X |> b] for a computation b.
PseudonatTrans lact_bcell_psnat(const LeftAction& l, const OneCell& b) {
  PseudonatTrans s;
  s.F = lact_fix_arg(l, b.src);
  s.G = lact_fix_arg(l, b.dst);
  s.label = "-|>b";
  s.at = [l, b](const Obj& x) { return l.act_1(l.V.B->id1(x), b); };
  s.nat = [l, b](const OneCell& f) {
    const Bicategory& B = *l.B;
    const Bicategory& BV = *l.V.B;
    OneCell idx = BV.id1(f.src), idx2 = BV.id1(f.dst);
    OneCell idc = B.id1(b.src), idc2 = B.id1(b.dst);
    return B.vchain({
        l.compositor(f, idc2, idx, b),
        l.act_2(BV.runitor(f), B.lunitor(b)),
        B.inv(l.act_2(BV.lunitor(f), B.runitor(b))),
        B.inv(l.compositor(idx2, b, f, idc)),
    });
  };
  return s;
}

// lunit as a transformation (I |> -) => Id over B.
PseudonatTrans lact_lunit_psnat(const LeftAction& l) {
  PseudonatTrans s;
  s.F = lact_fix_obj(l, l.V.unit);
  s.G = identity_psf(l.B);
  s.label = "lunit~";
  s.at = [l](const Obj& c) { return l.lunit(c).fwd; };
  s.nat = l.lunit_nat;
  return s;
}

// assoc family with the B argument open: (X&Y)|>(-) => X|>(Y|>-).
PseudonatTrans lact_assoc_b_psnat(const LeftAction& l, const Obj& x,
                                  const Obj& y) {
  PseudonatTrans s;
  s.F = lact_fix_obj(l, l.V.ten_obj(x, y));
  s.G = compose_psf(lact_fix_obj(l, x), lact_fix_obj(l, y));
  s.label = "assoc~b";
  s.at = [l, x, y](const Obj& c) { return l.assoc(x, y, c).fwd; };
  s.nat = [l, x, y](const OneCell& c) {
    return l.assoc_nat(l.V.B->id1(x), l.V.B->id1(y), c);
  };
  return s;
}

// assoc family with the first V argument open: (-&Y)|>C => -|>(Y|>C).
PseudonatTrans lact_assoc_v1_psnat(const LeftAction& l, const Obj& y,
                                   const Obj& c) {
  PseudonatTrans s;
  s.F = compose_psf(lact_fix_arg(l, c), tensor_fix_right(l.V, y));
  s.G = lact_fix_arg(l, l.act_obj(y, c));
  s.label = "assoc~v1";
  s.at = [l, y, c](const Obj& x) { return l.assoc(x, y, c).fwd; };
  s.nat = [l, y, c](const OneCell& f) {
    return l.assoc_nat(f, l.V.B->id1(y), l.B->id1(c));
  };
  return s;
}

// assoc family with the middle V argument open: (X&-)|>C => X|>(-|>C).
PseudonatTrans lact_assoc_v2_psnat(const LeftAction& l, const Obj& x,
                                   const Obj& c) {
  PseudonatTrans s;
  s.F = compose_psf(lact_fix_arg(l, c), tensor_fix_left(l.V, x));
  s.G = compose_psf(lact_fix_obj(l, x), lact_fix_arg(l, c));
  s.label = "assoc~v2";
  s.at = [l, x, c](const Obj& y) { return l.assoc(x, y, c).fwd; };
  s.nat = [l, x, c](const OneCell& g) {
    return l.assoc_nat(l.V.B->id1(x), g, l.B->id1(c));
  };
  return s;
}

PseudonatTrans monoidal_lunit_psnat(const MonoidalStructure& v) {
  PseudonatTrans s;
  s.F = tensor_fix_left(v, v.unit);
  s.G = identity_psf(v.B);
  s.label = "lunitV";
  s.at = [v](const Obj& y) { return v.lunit(y).fwd; };
  s.nat = v.lunit_nat;
  return s;
}

PseudonatTrans monoidal_runit_psnat(const MonoidalStructure& v) {
  PseudonatTrans s;
  s.F = tensor_fix_right(v, v.unit);
  s.G = identity_psf(v.B);
  s.label = "runitV";
  s.at = [v](const Obj& x) { return v.runit(x).fwd; };
  s.nat = v.runit_nat;
  return s;
}

std::optional<json> mod_square(const PseudonatTrans& s,
                               const PseudonatTrans& t,
                               std::function<TwoCell(const Obj&)> gamma,
                               const OneCell& open_cell) {
  Modification m;
  m.s = s;
  m.t = t;
  m.at = std::move(gamma);
  return modification_square_at(m, open_cell);
}

std::vector<LawRun> left_action_laws(const CheckCtx& vctx,
                                     const CheckCtx& bctx,
                                     const LeftAction& l) {
  std::vector<LawRun> laws;
  const std::string anchor17 = "A left action of a monoidal bicategory";
  const std::string anchor_mods =
      "satisfying the same coherence axioms as p, m, and l";

  {
    CheckCtx pctx = bctx;
    pctx.sampler = product_sampler(vctx.sampler, bctx.sampler);
    auto pl = pseudofunctor_laws(pctx, left_act_psf(l), "lact", anchor17);
    laws.insert(laws.end(), pl.begin(), pl.end());
  }
  {
    auto ll =
        pseudonat_laws(bctx, lact_lunit_psnat(l), "lact-lunit", anchor17);
    laws.insert(laws.end(), ll.begin(), ll.end());
  }
  laws.push_back(law_over_objs(
      bctx, "action.left.adjoint-triangles", anchor17, 3,
      [l, vctx](const std::vector<Obj>& o) -> std::optional<json> {
        if (auto bad = adjoint_equivalence_failure(l.lunit(o[0]))) return bad;
        Rng rng(std::hash<std::string>{}(o[1].str() + o[2].str()));
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        return adjoint_equivalence_failure(l.assoc(x, y, o[0]));
      }));
  // joint pseudonaturality of assoc~, sampled over V x V x B triples
  laws.push_back(law_over_cells(
      bctx, "action.left.assoc-pseudonatural", anchor17, 2,
      [l, vctx](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
                Rng& rng) -> std::optional<json> {
        auto vchain2 = vctx.sampler->chain(rng, 1);
        Obj y = vctx.sampler->obj(rng);
        PseudonatTrans fam = lact_assoc_v1_psnat(l, y, c[0].src);
        if (auto bad = psnat_unit_at(fam, vchain2[0].src)) return bad;
        auto pair2 = vctx.sampler->chain(rng, 2);
        if (auto bad = psnat_composition_at(fam, pair2[1], pair2[0]))
          return bad;
        PseudonatTrans famb = lact_assoc_b_psnat(l, vchain2[0].src, y);
        if (auto bad = psnat_unit_at(famb, c[0].src)) return bad;
        return psnat_composition_at(famb, c[1], c[0]);
      }));

  auto add_square =
      [&laws](const CheckCtx& open_ctx, const std::string& id,
              const std::string& anchor,
              std::function<std::optional<json>(const OneCell&, Rng&)> body) {
        laws.push_back(law_over_cells(
            open_ctx, id, anchor, 1,
            [body](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
                   Rng& rng) { return body(c[0], rng); }));
      };

  PremonoidalStructure pv = premonoidal_from_monoidal(l.V);

  add_square(vctx, "action.left.mod-l-value", anchor_mods,
             [l, bctx](const OneCell& f, Rng& rng) -> std::optional<json> {
               Obj c = bctx.sampler->obj(rng);
               PseudonatTrans s = whisker_psf_psnat(
                   lact_fix_arg(l, c), monoidal_lunit_psnat(l.V));
               PseudonatTrans t = vcomp_psnat(
                   whisker_psnat_psf(lact_lunit_psnat(l),
                                     lact_fix_arg(l, c)),
                   lact_assoc_v2_psnat(l, l.V.unit, c));
               return mod_square(
                   s, t, [l, c](const Obj& y) { return l.lun(y, c); }, f);
             });

  add_square(bctx, "action.left.mod-l-comp", anchor_mods,
             [l, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
               Obj y = vctx.sampler->obj(rng);
               PseudonatTrans s = lact_vcell_psnat(l, l.V.lunit(y).fwd);
               PseudonatTrans t = vcomp_psnat(
                   whisker_psnat_psf(lact_lunit_psnat(l),
                                     lact_fix_obj(l, y)),
                   lact_assoc_b_psnat(l, l.V.unit, y));
               return mod_square(
                   s, t, [l, y](const Obj& c) { return l.lun(y, c); }, b);
             });

  add_square(vctx, "action.left.mod-m-value", anchor_mods,
             [l, bctx](const OneCell& f, Rng& rng) -> std::optional<json> {
               Obj c = bctx.sampler->obj(rng);
               PseudonatTrans s = vcomp_psnat(
                   lact_bcell_psnat(l, l.lunit(c).fwd),
                   lact_assoc_v1_psnat(l, l.V.unit, c));
               PseudonatTrans t = whisker_psf_psnat(
                   lact_fix_arg(l, c), monoidal_runit_psnat(l.V));
               return mod_square(
                   s, t, [l, c](const Obj& x) { return l.mid(x, c); }, f);
             });

  add_square(bctx, "action.left.mod-m-comp", anchor_mods,
             [l, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
               Obj x = vctx.sampler->obj(rng);
               PseudonatTrans s = vcomp_psnat(
                   whisker_psf_psnat(lact_fix_obj(l, x),
                                     lact_lunit_psnat(l)),
                   lact_assoc_b_psnat(l, x, l.V.unit));
               PseudonatTrans t = lact_vcell_psnat(l, l.V.runit(x).fwd);
               return mod_square(
                   s, t, [l, x](const Obj& c) { return l.mid(x, c); }, b);
             });

  add_square(
      bctx, "action.left.mod-p-comp", anchor_mods,
      [l, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(l, x), lact_assoc_b_psnat(l, y, z)),
            vcomp_psnat(lact_assoc_b_psnat(l, x, l.V.ten_obj(y, z)),
                        lact_vcell_psnat(l, l.V.assoc(x, y, z).fwd)));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(lact_assoc_b_psnat(l, x, y),
                              lact_fix_obj(l, z)),
            lact_assoc_b_psnat(l, l.V.ten_obj(x, y), z));
        return mod_square(
            s, t, [l, x, y, z](const Obj& d) { return l.pent(x, y, z, d); },
            b);
      });

  add_square(
      vctx, "action.left.mod-p-first", anchor_mods,
      [l, pv, vctx, bctx](const OneCell& f, Rng& rng) -> std::optional<json> {
        Obj y = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        Obj d = bctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            lact_bcell_psnat(l, l.assoc(y, z, d).fwd),
            vcomp_psnat(
                lact_assoc_v1_psnat(l, l.V.ten_obj(y, z), d),
                whisker_psf_psnat(lact_fix_arg(l, d),
                                  assoc_l_psnat(pv, y, z))));
        PseudonatTrans t = vcomp_psnat(
            lact_assoc_v1_psnat(l, y, l.act_obj(z, d)),
            whisker_psnat_psf(lact_assoc_v1_psnat(l, z, d),
                              tensor_fix_right(l.V, y)));
        return mod_square(
            s, t, [l, y, z, d](const Obj& x) { return l.pent(x, y, z, d); },
            f);
      });

  add_square(
      vctx, "action.left.mod-p-middle", anchor_mods,
      [l, pv, vctx, bctx](const OneCell& g, Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        Obj d = bctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(l, x),
                              lact_assoc_v1_psnat(l, z, d)),
            vcomp_psnat(
                whisker_psnat_psf(lact_assoc_v2_psnat(l, x, d),
                                  tensor_fix_right(l.V, z)),
                whisker_psf_psnat(lact_fix_arg(l, d),
                                  assoc_m_psnat(pv, x, z))));
        PseudonatTrans t = vcomp_psnat(
            lact_assoc_v2_psnat(l, x, l.act_obj(z, d)),
            whisker_psnat_psf(lact_assoc_v1_psnat(l, z, d),
                              tensor_fix_left(l.V, x)));
        return mod_square(
            s, t, [l, x, z, d](const Obj& y) { return l.pent(x, y, z, d); },
            g);
      });

  add_square(
      vctx, "action.left.mod-p-last", anchor_mods,
      [l, pv, vctx, bctx](const OneCell& h, Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        Obj d = bctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(l, x),
                              lact_assoc_v2_psnat(l, y, d)),
            vcomp_psnat(
                whisker_psnat_psf(lact_assoc_v2_psnat(l, x, d),
                                  tensor_fix_left(l.V, y)),
                whisker_psf_psnat(lact_fix_arg(l, d),
                                  assoc_r_psnat(pv, x, y))));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(lact_assoc_b_psnat(l, x, y),
                              lact_fix_arg(l, d)),
            lact_assoc_v2_psnat(l, l.V.ten_obj(x, y), d));
        return mod_square(
            s, t, [l, x, y, d](const Obj& z) { return l.pent(x, y, z, d); },
            h);
      });

  return laws;
}

// ------------------------------------------------------------- right ------

PseudonatTrans ract_vcell_psnat(const RightAction& r, const OneCell& u) {
  // [A |-> A <| u] for a value 1-cell u
  PseudonatTrans s;
  s.F = ract_fix_obj(r, u.src);
  s.G = ract_fix_obj(r, u.dst);
  s.label = "-<|u";
  s.at = [r, u](const Obj& a) { return r.act_1(r.B->id1(a), u); };
  s.nat = [r, u](const OneCell& a) {
    const Bicategory& B = *r.B;
    const Bicategory& BV = *r.V.B;
    OneCell idx = BV.id1(u.src), idx2 = BV.id1(u.dst);
    OneCell ida = B.id1(a.src), ida2 = B.id1(a.dst);
    return B.vchain({
        r.compositor(a, idx2, ida, u),
        r.act_2(B.runitor(a), BV.lunitor(u)),
        B.inv(r.act_2(B.lunitor(a), BV.runitor(u))),
        B.inv(r.compositor(ida2, u, a, idx)),
    });
  };
  return s;
}

PseudonatTrans ract_bcell_psnat(const RightAction& r, const OneCell& b) {
  // [X |-> b <| X] over V for a computation b
  PseudonatTrans s;
  s.F = ract_fix_arg(r, b.src);
  s.G = ract_fix_arg(r, b.dst);
  s.label = "b<|-";
  s.at = [r, b](const Obj& x) { return r.act_1(b, r.V.B->id1(x)); };
  s.nat = [r, b](const OneCell& g) {
    const Bicategory& B = *r.B;
    const Bicategory& BV = *r.V.B;
    OneCell ida = B.id1(b.src), ida2 = B.id1(b.dst);
    OneCell idg = BV.id1(g.src), idg2 = BV.id1(g.dst);
    return B.vchain({
        r.compositor(ida2, g, b, idg),
        r.act_2(B.lunitor(b), BV.runitor(g)),
        B.inv(r.act_2(B.runitor(b), BV.lunitor(g))),
        B.inv(r.compositor(b, idg2, ida, g)),
    });
  };
  return s;
}

PseudonatTrans ract_runit_psnat(const RightAction& r) {
  PseudonatTrans s;
  s.F = ract_fix_obj(r, r.V.unit);
  s.G = identity_psf(r.B);
  s.label = "runit~";
  s.at = [r](const Obj& a) { return r.runit(a).fwd; };
  s.nat = r.runit_nat;
  return s;
}

// (-<|X)<|Y => (-)<|(X&Y) over B
PseudonatTrans ract_assoc_b_psnat(const RightAction& r, const Obj& x,
                                  const Obj& y) {
  PseudonatTrans s;
  s.F = compose_psf(ract_fix_obj(r, y), ract_fix_obj(r, x));
  s.G = ract_fix_obj(r, r.V.ten_obj(x, y));
  s.label = "ract-assoc~b";
  s.at = [r, x, y](const Obj& a) { return r.assoc(a, x, y).fwd; };
  s.nat = [r, x, y](const OneCell& a) {
    return r.assoc_nat(a, r.V.B->id1(x), r.V.B->id1(y));
  };
  return s;
}

// (A<|-)<|Y => A<|(-&Y) over V
PseudonatTrans ract_assoc_v1_psnat(const RightAction& r, const Obj& a,
                                   const Obj& y) {
  PseudonatTrans s;
  s.F = compose_psf(ract_fix_obj(r, y), ract_fix_arg(r, a));
  s.G = compose_psf(ract_fix_arg(r, a), tensor_fix_right(r.V, y));
  s.label = "ract-assoc~v1";
  s.at = [r, a, y](const Obj& x) { return r.assoc(a, x, y).fwd; };
  s.nat = [r, a, y](const OneCell& f) {
    return r.assoc_nat(r.B->id1(a), f, r.V.B->id1(y));
  };
  return s;
}

// (A<|X)<|- => A<|(X&-) over V
PseudonatTrans ract_assoc_v2_psnat(const RightAction& r, const Obj& a,
                                   const Obj& x) {
  PseudonatTrans s;
  s.F = ract_fix_arg(r, r.act_obj(a, x));
  s.G = compose_psf(ract_fix_arg(r, a), tensor_fix_left(r.V, x));
  s.label = "ract-assoc~v2";
  s.at = [r, a, x](const Obj& y) { return r.assoc(a, x, y).fwd; };
  s.nat = [r, a, x](const OneCell& g) {
    return r.assoc_nat(r.B->id1(a), r.V.B->id1(x), g);
  };
  return s;
}

std::vector<LawRun> right_action_laws(const CheckCtx& vctx,
                                      const CheckCtx& bctx,
                                      const RightAction& r) {
  std::vector<LawRun> laws;
  const std::string anchor = "A right action ract : B x V -> B";
  const std::string anchor_mods =
      "satisfying the same coherence axioms as p, m, and l";

  {
    CheckCtx pctx = bctx;
    pctx.sampler = product_sampler(bctx.sampler, vctx.sampler);
    auto pl = pseudofunctor_laws(pctx, right_act_psf(r), "ract", anchor);
    laws.insert(laws.end(), pl.begin(), pl.end());
  }
  {
    auto rl = pseudonat_laws(bctx, ract_runit_psnat(r), "ract-runit", anchor);
    laws.insert(laws.end(), rl.begin(), rl.end());
  }
  laws.push_back(law_over_objs(
      bctx, "action.right.adjoint-triangles", anchor, 1,
      [r, vctx](const std::vector<Obj>& o) -> std::optional<json> {
        if (auto bad = adjoint_equivalence_failure(r.runit(o[0]))) return bad;
        Rng rng(std::hash<std::string>{}(o[0].str()));
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        return adjoint_equivalence_failure(r.assoc(o[0], x, y));
      }));
  laws.push_back(law_over_cells(
      bctx, "action.right.assoc-pseudonatural", anchor, 2,
      [r, vctx](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
                Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        PseudonatTrans fam = ract_assoc_b_psnat(r, x, y);
        if (auto bad = psnat_unit_at(fam, c[0].src)) return bad;
        if (auto bad = psnat_composition_at(fam, c[1], c[0])) return bad;
        auto vpair = vctx.sampler->chain(rng, 2);
        PseudonatTrans famv = ract_assoc_v2_psnat(r, c[0].src, x);
        if (auto bad = psnat_unit_at(famv, vpair[0].src)) return bad;
        return psnat_composition_at(famv, vpair[1], vpair[0]);
      }));

  auto add_square =
      [&laws](const CheckCtx& open_ctx, const std::string& id,
              const std::string& anchor2,
              std::function<std::optional<json>(const OneCell&, Rng&)> body) {
        laws.push_back(law_over_cells(
            open_ctx, id, anchor2, 1,
            [body](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
                   Rng& rng) { return body(c[0], rng); }));
      };

  PremonoidalStructure pv = premonoidal_from_monoidal(r.V);

  add_square(bctx, "action.right.mod-run-comp", anchor_mods,
             [r, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
               Obj x = vctx.sampler->obj(rng);
               PseudonatTrans s = whisker_psnat_psf(ract_runit_psnat(r),
                                                    ract_fix_obj(r, x));
               PseudonatTrans t = vcomp_psnat(
                   ract_vcell_psnat(r, r.V.runit(x).fwd),
                   ract_assoc_b_psnat(r, x, r.V.unit));
               return mod_square(
                   s, t, [r, x](const Obj& a) { return r.run(a, x); }, b);
             });
  add_square(vctx, "action.right.mod-run-value", anchor_mods,
             [r, bctx](const OneCell& f, Rng& rng) -> std::optional<json> {
               Obj a = bctx.sampler->obj(rng);
               PseudonatTrans s = whisker_psnat_psf(ract_runit_psnat(r),
                                                    ract_fix_arg(r, a));
               PseudonatTrans t = vcomp_psnat(
                   whisker_psf_psnat(ract_fix_arg(r, a),
                                     monoidal_runit_psnat(r.V)),
                   ract_assoc_v1_psnat(r, a, r.V.unit));
               return mod_square(
                   s, t, [r, a](const Obj& x) { return r.run(a, x); }, f);
             });

  add_square(bctx, "action.right.mod-m-comp", anchor_mods,
             [r, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
               Obj x = vctx.sampler->obj(rng);
               PseudonatTrans s = vcomp_psnat(
                   ract_vcell_psnat(r, r.V.lunit(x).fwd),
                   ract_assoc_b_psnat(r, r.V.unit, x));
               PseudonatTrans t = whisker_psf_psnat(ract_fix_obj(r, x),
                                                    ract_runit_psnat(r));
               return mod_square(
                   s, t, [r, x](const Obj& a) { return r.mid(a, x); }, b);
             });
  add_square(vctx, "action.right.mod-m-value", anchor_mods,
             [r, bctx](const OneCell& g, Rng& rng) -> std::optional<json> {
               Obj a = bctx.sampler->obj(rng);
               PseudonatTrans s = vcomp_psnat(
                   whisker_psf_psnat(ract_fix_arg(r, a),
                                     monoidal_lunit_psnat(r.V)),
                   ract_assoc_v2_psnat(r, a, r.V.unit));
               PseudonatTrans t = ract_bcell_psnat(r, r.runit(a).fwd);
               return mod_square(
                   s, t, [r, a](const Obj& x) { return r.mid(a, x); }, g);
             });

  add_square(
      bctx, "action.right.mod-p-comp", anchor_mods,
      [r, vctx](const OneCell& b, Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            ract_vcell_psnat(r, r.V.assoc(x, y, z).fwd),
            vcomp_psnat(
                ract_assoc_b_psnat(r, r.V.ten_obj(x, y), z),
                whisker_psf_psnat(ract_fix_obj(r, z),
                                  ract_assoc_b_psnat(r, x, y))));
        PseudonatTrans t = vcomp_psnat(
            ract_assoc_b_psnat(r, x, r.V.ten_obj(y, z)),
            whisker_psnat_psf(ract_assoc_b_psnat(r, y, z),
                              ract_fix_obj(r, x)));
        return mod_square(
            s, t, [r, x, y, z](const Obj& a) { return r.pent(a, x, y, z); },
            b);
      });
  add_square(
      vctx, "action.right.mod-p-first", anchor_mods,
      [r, pv, vctx, bctx](const OneCell& f, Rng& rng) -> std::optional<json> {
        Obj a = bctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(ract_fix_arg(r, a), assoc_l_psnat(pv, y, z)),
            vcomp_psnat(
                whisker_psnat_psf(ract_assoc_v1_psnat(r, a, z),
                                  tensor_fix_right(r.V, y)),
                whisker_psf_psnat(ract_fix_obj(r, z),
                                  ract_assoc_v1_psnat(r, a, y))));
        PseudonatTrans t = vcomp_psnat(
            ract_assoc_v1_psnat(r, a, r.V.ten_obj(y, z)),
            whisker_psnat_psf(ract_assoc_b_psnat(r, y, z),
                              ract_fix_arg(r, a)));
        return mod_square(
            s, t, [r, a, y, z](const Obj& x) { return r.pent(a, x, y, z); },
            f);
      });
  add_square(
      vctx, "action.right.mod-p-middle", anchor_mods,
      [r, pv, vctx, bctx](const OneCell& g, Rng& rng) -> std::optional<json> {
        Obj a = bctx.sampler->obj(rng);
        Obj x = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(ract_fix_arg(r, a), assoc_m_psnat(pv, x, z)),
            vcomp_psnat(
                whisker_psnat_psf(ract_assoc_v1_psnat(r, a, z),
                                  tensor_fix_left(r.V, x)),
                whisker_psf_psnat(ract_fix_obj(r, z),
                                  ract_assoc_v2_psnat(r, a, x))));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(ract_assoc_v2_psnat(r, a, x),
                              tensor_fix_right(r.V, z)),
            ract_assoc_v1_psnat(r, r.act_obj(a, x), z));
        return mod_square(
            s, t, [r, a, x, z](const Obj& y) { return r.pent(a, x, y, z); },
            g);
      });
  add_square(
      vctx, "action.right.mod-p-last", anchor_mods,
      [r, pv, vctx, bctx](const OneCell& h, Rng& rng) -> std::optional<json> {
        Obj a = bctx.sampler->obj(rng);
        Obj x = vctx.sampler->obj(rng);
        Obj y = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(ract_fix_arg(r, a), assoc_r_psnat(pv, x, y)),
            vcomp_psnat(ract_assoc_v2_psnat(r, a, r.V.ten_obj(x, y)),
                        ract_bcell_psnat(r, r.assoc(a, x, y).fwd)));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(ract_assoc_v2_psnat(r, a, x),
                              tensor_fix_left(r.V, y)),
            ract_assoc_v2_psnat(r, r.act_obj(a, x), y));
        return mod_square(
            s, t, [r, a, x, y](const Obj& z) { return r.pent(a, x, y, z); },
            h);
      });

  return laws;
}

}  // namespace bicheck
