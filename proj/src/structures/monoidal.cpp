#include "bicheck/structures/monoidal.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/product.hpp"
#include "bicheck/instances/span.hpp"

namespace bicheck {

Pseudofunctor tensor_psf(const MonoidalStructure& m) {
  Pseudofunctor f;
  f.src = product_bicat(m.B, m.B);
  f.dst = m.B;
  f.label = "tensor";
  f.on_obj = [m](const Obj& p) { return m.ten_obj(obj_fst(p), obj_snd(p)); };
  f.on_1 = [m](const OneCell& p) {
    return m.ten_1(cell_fst(p), cell_snd(p));
  };
  f.on_2 = [m](const TwoCell& p) {
    return m.ten_2(cell2_fst(p), cell2_snd(p));
  };
  f.compositor = [m](const OneCell& g, const OneCell& f1) {
    return m.ten_compositor(cell_fst(g), cell_snd(g), cell_fst(f1),
                            cell_snd(f1));
  };
  f.unit = [m](const Obj& a) { return m.ten_unit(obj_fst(a), obj_snd(a)); };
  return f;
}

namespace {

// ---------------------------------------------------------------- span ---

AdjointEquivalence span_graph_adjoint(const FiniteFun& bij) {
  Bicategory::Ptr B = span_bicat();
  auto inv = bij.inverse();
  if (!inv) throw NotInvertible("graph adjoint requires a bijection");
  OneCell fwd = span_of_fun(bij);
  OneCell bwd = span_of_fun(*inv);
  OneCell unit_src = B->id1(fwd.src);
  OneCell unit_dst = B->compose1(bwd, fwd);
  TwoCell unit = mk_span_mor_fn(unit_src, unit_dst, [&](const Atom& a) {
    return Atom::pair(a, bij(a));
  });
  OneCell counit_src = B->compose1(fwd, bwd);
  OneCell counit_dst = B->id1(fwd.dst);
  TwoCell counit = mk_span_mor_fn(counit_src, counit_dst,
                                  [](const Atom& a) { return a.first(); });
  return AdjointEquivalence{B, fwd, bwd, unit, counit};
}

MonoidalStructure make_span_monoidal() {
  MonoidalStructure m;
  Bicategory::Ptr B = span_bicat();
  m.B = B;
  m.unit = span_obj(FiniteSet::range(1));
  Obj unit = m.unit;

  auto ten_obj = [](const Obj& a, const Obj& b) {
    return span_obj(FiniteSet::product(set_of(a), set_of(b)));
  };
  auto ten_1 = [](const OneCell& f, const OneCell& g) {
    const SpanData& sf = span_of(f);
    const SpanData& sg = span_of(g);
    return mk_span(FiniteSet::product(set_of(f.src), set_of(g.src)),
                   FiniteSet::product(set_of(f.dst), set_of(g.dst)),
                   SpanData{FiniteSet::product(sf.apex, sg.apex),
                            FiniteFun::product(sf.left, sg.left),
                            FiniteFun::product(sf.right, sg.right)});
  };
  auto assoc = [B](const Obj& a, const Obj& b, const Obj& c) {
    return span_graph_adjoint(rebracket_fun(set_of(a), set_of(b), set_of(c)));
  };
  auto lunit = [unit](const Obj& a) {
    return span_graph_adjoint(lunit_fun(set_of(unit), set_of(a)));
  };
  auto runit = [unit](const Obj& a) {
    return span_graph_adjoint(runit_fun(set_of(a), set_of(unit)));
  };

  m.ten_obj = ten_obj;
  m.ten_1 = ten_1;
  m.ten_2 = [ten_1](const TwoCell& a, const TwoCell& b) {
    OneCell src = ten_1(a.src, b.src);
    OneCell dst = ten_1(a.dst, b.dst);
    return mk_span_mor(src, dst,
                       FiniteFun::product(span_map_of(a), span_map_of(b)));
  };
  m.ten_compositor = [ten_1, B](const OneCell& g1, const OneCell& g2,
                                const OneCell& f1, const OneCell& f2) {
    OneCell src = B->compose1(ten_1(g1, g2), ten_1(f1, f2));
    OneCell dst = ten_1(B->compose1(g1, f1), B->compose1(g2, f2));
    // ((x1,x2),(y1,y2)) -> ((x1,y1),(x2,y2))
    return mk_span_mor_fn(src, dst, [](const Atom& a) {
      return Atom::pair(Atom::pair(a.first().first(), a.second().first()),
                        Atom::pair(a.first().second(), a.second().second()));
    });
  };
  m.ten_unit = [ten_obj, B](const Obj& a, const Obj& b) {
    return B->id2(B->id1(ten_obj(a, b)));  // id_{AxB} equals id_A & id_B
  };
  m.assoc = assoc;
  m.assoc_nat = [ten_1, assoc, B](const OneCell& f, const OneCell& g,
                                  const OneCell& h) {
    const SpanData &sf = span_of(f), &sg = span_of(g), &sh = span_of(h);
    OneCell alpha = assoc(f.src, g.src, h.src).fwd;
    OneCell alpha2 = assoc(f.dst, g.dst, h.dst).fwd;
    OneCell src = B->compose1(ten_1(f, ten_1(g, h)), alpha);
    OneCell dst = B->compose1(alpha2, ten_1(ten_1(f, g), h));
    return mk_span_mor_fn(src, dst, [&](const Atom& a) {
      const Atom& s = a.second();  // (sf, (sg, sh))
      const Atom &x = s.first(), &y = s.second().first(),
                 &z = s.second().second();
      return Atom::pair(
          Atom::pair(Atom::pair(x, y), z),
          Atom::pair(Atom::pair(sf.right(x), sg.right(y)), sh.right(z)));
    });
  };
  m.lunit = lunit;
  m.lunit_nat = [ten_1, lunit, unit, B](const OneCell& f) {
    const SpanData& sf = span_of(f);
    OneCell src = B->compose1(f, lunit(f.src).fwd);
    OneCell dst = B->compose1(lunit(f.dst).fwd, ten_1(B->id1(unit), f));
    Atom star = set_of(unit).at(0);
    return mk_span_mor_fn(src, dst, [&, star](const Atom& a) {
      const Atom& s = a.second();
      return Atom::pair(Atom::pair(star, s), Atom::pair(star, sf.right(s)));
    });
  };
  m.runit = runit;
  m.runit_nat = [ten_1, runit, unit, B](const OneCell& f) {
    const SpanData& sf = span_of(f);
    OneCell src = B->compose1(f, runit(f.src).fwd);
    OneCell dst = B->compose1(runit(f.dst).fwd, ten_1(f, B->id1(unit)));
    Atom star = set_of(unit).at(0);
    return mk_span_mor_fn(src, dst, [&, star](const Atom& a) {
      const Atom& s = a.second();
      return Atom::pair(Atom::pair(s, star), Atom::pair(sf.right(s), star));
    });
  };
  m.pent = [ten_obj, ten_1, assoc, B](const Obj& a, const Obj& b,
                                      const Obj& c, const Obj& d) {
    OneCell a1 = ten_1(assoc(a, b, c).fwd, B->id1(d));
    OneCell a2 = assoc(a, ten_obj(b, c), d).fwd;
    OneCell a3 = ten_1(B->id1(a), assoc(b, c, d).fwd);
    OneCell src = B->compose1(a3, B->compose1(a2, a1));
    OneCell dst = B->compose1(assoc(a, b, ten_obj(c, d)).fwd,
                              assoc(ten_obj(a, b), c, d).fwd);
    return span_mor_by_left_leg(src, dst);
  };
  m.mid = [ten_1, assoc, lunit, runit, unit, B](const Obj& a, const Obj& b) {
    OneCell src = B->compose1(ten_1(B->id1(a), lunit(b).fwd),
                              assoc(a, unit, b).fwd);
    OneCell dst = ten_1(runit(a).fwd, B->id1(b));
    return span_mor_by_left_leg(src, dst);
  };
  m.lun = [ten_obj, ten_1, assoc, lunit, unit, B](const Obj& a,
                                                  const Obj& b) {
    OneCell src = ten_1(lunit(a).fwd, B->id1(b));
    OneCell dst = B->compose1(lunit(ten_obj(a, b)).fwd,
                              assoc(unit, a, b).fwd);
    return span_mor_by_left_leg(src, dst);
  };
  m.run = [ten_obj, ten_1, assoc, runit, unit, B](const Obj& a,
                                                  const Obj& b) {
    OneCell src = runit(ten_obj(a, b)).fwd;
    OneCell dst = B->compose1(ten_1(B->id1(a), runit(b).fwd),
                              assoc(a, b, unit).fwd);
    return span_mor_by_left_leg(src, dst);
  };
  return m;
}

// -------------------------------------------------------------- finfun ---

MonoidalStructure make_finfun_monoidal() {
  MonoidalStructure m;
  Bicategory::Ptr B = finfun_bicat();
  m.B = B;
  m.unit = Obj{Value::of(FiniteSet::range(1))};
  Obj unit = m.unit;

  auto ten_obj = [](const Obj& a, const Obj& b) {
    return Obj{Value::of(
        FiniteSet::product(a.v.as<FiniteSet>(), b.v.as<FiniteSet>()))};
  };
  auto ten_1 = [](const OneCell& f, const OneCell& g) {
    return mk_fun_cell(FiniteFun::product(fun_of(f), fun_of(g)));
  };
  auto strict2 = [B](const OneCell& lhs, const OneCell& rhs,
                     const char* what) {
    if (lhs != rhs)
      throw InvalidValue(std::string("strictness violated: ") + what);
    return B->id2(lhs);
  };
  auto fun_adjoint = [B](const FiniteFun& bij) {
    auto inv = bij.inverse();
    if (!inv) throw NotInvertible("structural map must be a bijection");
    OneCell fwd = mk_fun_cell(bij);
    OneCell bwd = mk_fun_cell(*inv);
    return AdjointEquivalence{B, fwd, bwd, B->id2(B->id1(fwd.src)),
                              B->id2(B->id1(fwd.dst))};
  };
  auto assoc = [fun_adjoint](const Obj& a, const Obj& b, const Obj& c) {
    return fun_adjoint(rebracket_fun(a.v.as<FiniteSet>(),
                                     b.v.as<FiniteSet>(),
                                     c.v.as<FiniteSet>()));
  };
  auto lunit = [fun_adjoint, unit](const Obj& a) {
    return fun_adjoint(
        lunit_fun(unit.v.as<FiniteSet>(), a.v.as<FiniteSet>()));
  };
  auto runit = [fun_adjoint, unit](const Obj& a) {
    return fun_adjoint(
        runit_fun(a.v.as<FiniteSet>(), unit.v.as<FiniteSet>()));
  };

  m.ten_obj = ten_obj;
  m.ten_1 = ten_1;
  m.ten_2 = [ten_1, B](const TwoCell& a, const TwoCell& b) {
    return B->id2(ten_1(a.src, b.src));
  };
  m.ten_compositor = [ten_1, strict2, B](const OneCell& g1, const OneCell& g2,
                                         const OneCell& f1,
                                         const OneCell& f2) {
    return strict2(B->compose1(ten_1(g1, g2), ten_1(f1, f2)),
                   ten_1(B->compose1(g1, f1), B->compose1(g2, f2)),
                   "tensor compositor");
  };
  m.ten_unit = [ten_obj, ten_1, strict2, B](const Obj& a, const Obj& b) {
    return strict2(B->id1(ten_obj(a, b)), ten_1(B->id1(a), B->id1(b)),
                   "tensor unit");
  };
  m.assoc = assoc;
  m.assoc_nat = [ten_1, assoc, strict2, B](const OneCell& f, const OneCell& g,
                                           const OneCell& h) {
    return strict2(
        B->compose1(ten_1(f, ten_1(g, h)), assoc(f.src, g.src, h.src).fwd),
        B->compose1(assoc(f.dst, g.dst, h.dst).fwd, ten_1(ten_1(f, g), h)),
        "associator naturality");
  };
  m.lunit = lunit;
  m.lunit_nat = [ten_1, lunit, strict2, unit, B](const OneCell& f) {
    return strict2(B->compose1(f, lunit(f.src).fwd),
                   B->compose1(lunit(f.dst).fwd, ten_1(B->id1(unit), f)),
                   "left unitor naturality");
  };
  m.runit = runit;
  m.runit_nat = [ten_1, runit, strict2, unit, B](const OneCell& f) {
    return strict2(B->compose1(f, runit(f.src).fwd),
                   B->compose1(runit(f.dst).fwd, ten_1(f, B->id1(unit))),
                   "right unitor naturality");
  };
  m.pent = [ten_obj, ten_1, assoc, strict2, B](const Obj& a, const Obj& b,
                                               const Obj& c, const Obj& d) {
    OneCell a1 = ten_1(assoc(a, b, c).fwd, B->id1(d));
    OneCell a2 = assoc(a, ten_obj(b, c), d).fwd;
    OneCell a3 = ten_1(B->id1(a), assoc(b, c, d).fwd);
    return strict2(B->compose1(a3, B->compose1(a2, a1)),
                   B->compose1(assoc(a, b, ten_obj(c, d)).fwd,
                               assoc(ten_obj(a, b), c, d).fwd),
                   "pentagon");
  };
  m.mid = [ten_1, assoc, lunit, runit, strict2, unit, B](const Obj& a,
                                                         const Obj& b) {
    return strict2(B->compose1(ten_1(B->id1(a), lunit(b).fwd),
                               assoc(a, unit, b).fwd),
                   ten_1(runit(a).fwd, B->id1(b)), "middle unitor");
  };
  m.lun = [ten_obj, ten_1, assoc, lunit, strict2, unit, B](const Obj& a,
                                                           const Obj& b) {
    return strict2(ten_1(lunit(a).fwd, B->id1(b)),
                   B->compose1(lunit(ten_obj(a, b)).fwd,
                               assoc(unit, a, b).fwd),
                   "left unitor modification");
  };
  m.run = [ten_obj, ten_1, assoc, runit, strict2, unit, B](const Obj& a,
                                                           const Obj& b) {
    return strict2(runit(ten_obj(a, b)).fwd,
                   B->compose1(ten_1(B->id1(a), runit(b).fwd),
                               assoc(a, b, unit).fwd),
                   "right unitor modification");
  };
  return m;
}

Pseudofunctor assoc_source_psf(const MonoidalStructure& m) {
  // ((B x B) x B) -> B, ((f,g),h) |-> (f & g) & h
  Pseudofunctor f;
  Bicategory::Ptr inner = product_bicat(m.B, m.B);
  f.src = product_bicat(inner, m.B);
  f.dst = m.B;
  f.label = "ten-left-nested";
  f.on_obj = [m](const Obj& p) {
    return m.ten_obj(m.ten_obj(obj_fst(obj_fst(p)), obj_snd(obj_fst(p))),
                     obj_snd(p));
  };
  f.on_1 = [m](const OneCell& p) {
    return m.ten_1(m.ten_1(cell_fst(cell_fst(p)), cell_snd(cell_fst(p))),
                   cell_snd(p));
  };
  f.on_2 = [m](const TwoCell& p) {
    return m.ten_2(m.ten_2(cell2_fst(cell2_fst(p)), cell2_snd(cell2_fst(p))),
                   cell2_snd(p));
  };
  f.compositor = [m](const OneCell& g, const OneCell& f1) {
    OneCell g1 = cell_fst(cell_fst(g)), g2 = cell_snd(cell_fst(g)),
            g3 = cell_snd(g);
    OneCell f11 = cell_fst(cell_fst(f1)), f12 = cell_snd(cell_fst(f1)),
            f13 = cell_snd(f1);
    TwoCell outer = m.ten_compositor(m.ten_1(g1, g2), g3, m.ten_1(f11, f12),
                                     f13);
    TwoCell inner2 = m.ten_2(m.ten_compositor(g1, g2, f11, f12),
                             m.B->id2(m.B->compose1(g3, f13)));
    return m.B->vcomp(inner2, outer);
  };
  f.unit = [m](const Obj& p) {
    Obj a = obj_fst(obj_fst(p)), b = obj_snd(obj_fst(p)), c = obj_snd(p);
    TwoCell outer = m.ten_unit(m.ten_obj(a, b), c);
    TwoCell inner2 =
        m.ten_2(m.ten_unit(a, b), m.B->id2(m.B->id1(c)));
    return m.B->vcomp(inner2, outer);
  };
  return f;
}

Pseudofunctor assoc_target_psf(const MonoidalStructure& m) {
  // ((B x B) x B) -> B, ((f,g),h) |-> f & (g & h)
  Pseudofunctor f;
  Bicategory::Ptr inner = product_bicat(m.B, m.B);
  f.src = product_bicat(inner, m.B);
  f.dst = m.B;
  f.label = "ten-right-nested";
  f.on_obj = [m](const Obj& p) {
    return m.ten_obj(obj_fst(obj_fst(p)),
                     m.ten_obj(obj_snd(obj_fst(p)), obj_snd(p)));
  };
  f.on_1 = [m](const OneCell& p) {
    return m.ten_1(cell_fst(cell_fst(p)),
                   m.ten_1(cell_snd(cell_fst(p)), cell_snd(p)));
  };
  f.on_2 = [m](const TwoCell& p) {
    return m.ten_2(cell2_fst(cell2_fst(p)),
                   m.ten_2(cell2_snd(cell2_fst(p)), cell2_snd(p)));
  };
  f.compositor = [m](const OneCell& g, const OneCell& f1) {
    OneCell g1 = cell_fst(cell_fst(g)), g2 = cell_snd(cell_fst(g)),
            g3 = cell_snd(g);
    OneCell f11 = cell_fst(cell_fst(f1)), f12 = cell_snd(cell_fst(f1)),
            f13 = cell_snd(f1);
    TwoCell outer = m.ten_compositor(g1, m.ten_1(g2, g3), f11,
                                     m.ten_1(f12, f13));
    TwoCell inner2 = m.ten_2(m.B->id2(m.B->compose1(g1, f11)),
                             m.ten_compositor(g2, g3, f12, f13));
    return m.B->vcomp(inner2, outer);
  };
  f.unit = [m](const Obj& p) {
    Obj a = obj_fst(obj_fst(p)), b = obj_snd(obj_fst(p)), c = obj_snd(p);
    TwoCell outer = m.ten_unit(a, m.ten_obj(b, c));
    TwoCell inner2 =
        m.ten_2(m.B->id2(m.B->id1(a)), m.ten_unit(b, c));
    return m.B->vcomp(inner2, outer);
  };
  return f;
}

}  // namespace

MonoidalStructure span_monoidal() { return make_span_monoidal(); }
MonoidalStructure finfun_monoidal() { return make_finfun_monoidal(); }

std::vector<LawRun> monoidal_laws(const CheckCtx& ctx,
                                  const MonoidalStructure& m) {
  std::vector<LawRun> laws;
  const std::string anchor_data = "pseudofunctor & with unit I";
  const std::string anchor_equiv =
      "pseudonatural adjoint equivalences alpha, lambda and rho";
  const std::string anchor_mods =
      "invertible modifications p, l, m and r";

  // tensor pseudofunctoriality over the product instance
  CheckCtx pctx = ctx;
  pctx.sampler = product_sampler(ctx.sampler, ctx.sampler);
  auto tl = pseudofunctor_laws(pctx, tensor_psf(m), "tensor", anchor_data);
  laws.insert(laws.end(), tl.begin(), tl.end());

  // unitors as pseudonatural transformations
  {
    PseudonatTrans lam;
    lam.F = Pseudofunctor{};  // filled below
    Pseudofunctor fixI;
    fixI.src = m.B;
    fixI.dst = m.B;
    fixI.label = "I&-";
    Obj I = m.unit;
    fixI.on_obj = [m, I](const Obj& x) { return m.ten_obj(I, x); };
    fixI.on_1 = [m, I](const OneCell& g) {
      return m.ten_1(m.B->id1(I), g);
    };
    fixI.on_2 = [m, I](const TwoCell& t) {
      return m.ten_2(m.B->id2(m.B->id1(I)), t);
    };
    fixI.compositor = [m, I](const OneCell& g, const OneCell& f) {
      TwoCell step = m.ten_compositor(m.B->id1(I), g, m.B->id1(I), f);
      TwoCell fix = m.ten_2(m.B->lunitor(m.B->id1(I)),
                            m.B->id2(m.B->compose1(g, f)));
      return m.B->vcomp(fix, step);
    };
    fixI.unit = [m, I](const Obj& x) { return m.ten_unit(I, x); };
    lam.F = fixI;
    lam.G = identity_psf(m.B);
    lam.label = "lambda";
    lam.at = [m](const Obj& a) { return m.lunit(a).fwd; };
    lam.nat = m.lunit_nat;
    auto ll = pseudonat_laws(ctx, lam, "lambda", anchor_equiv);
    laws.insert(laws.end(), ll.begin(), ll.end());

    PseudonatTrans rho;
    Pseudofunctor fixIr;
    fixIr.src = m.B;
    fixIr.dst = m.B;
    fixIr.label = "-&I";
    fixIr.on_obj = [m, I](const Obj& x) { return m.ten_obj(x, I); };
    fixIr.on_1 = [m, I](const OneCell& g) {
      return m.ten_1(g, m.B->id1(I));
    };
    fixIr.on_2 = [m, I](const TwoCell& t) {
      return m.ten_2(t, m.B->id2(m.B->id1(I)));
    };
    fixIr.compositor = [m, I](const OneCell& g, const OneCell& f) {
      TwoCell step = m.ten_compositor(g, m.B->id1(I), f, m.B->id1(I));
      TwoCell fix = m.ten_2(m.B->id2(m.B->compose1(g, f)),
                            m.B->lunitor(m.B->id1(I)));
      return m.B->vcomp(fix, step);
    };
    fixIr.unit = [m, I](const Obj& x) { return m.ten_unit(x, I); };
    rho.F = fixIr;
    rho.G = identity_psf(m.B);
    rho.label = "rho";
    rho.at = [m](const Obj& a) { return m.runit(a).fwd; };
    rho.nat = m.runit_nat;
    auto rl = pseudonat_laws(ctx, rho, "rho", anchor_equiv);
    laws.insert(laws.end(), rl.begin(), rl.end());
  }

  // associator as a pseudonatural transformation over (B x B) x B
  {
    PseudonatTrans al;
    al.F = assoc_source_psf(m);
    al.G = assoc_target_psf(m);
    al.label = "alpha";
    al.at = [m](const Obj& p) {
      return m.assoc(obj_fst(obj_fst(p)), obj_snd(obj_fst(p)), obj_snd(p))
          .fwd;
    };
    al.nat = [m](const OneCell& p) {
      return m.assoc_nat(cell_fst(cell_fst(p)), cell_snd(cell_fst(p)),
                         cell_snd(p));
    };
    CheckCtx tctx = ctx;
    tctx.sampler = product_sampler(
        product_sampler(ctx.sampler, ctx.sampler), ctx.sampler);
    auto al_laws = pseudonat_laws(tctx, al, "alpha", anchor_equiv);
    laws.insert(laws.end(), al_laws.begin(), al_laws.end());
  }

  // triangle identities of the structural adjoint equivalences
  laws.push_back(law_over_objs(
      ctx, "monoidal.adjoint-triangles", anchor_equiv, 3,
      [m](const std::vector<Obj>& o) -> std::optional<json> {
        if (auto bad = adjoint_equivalence_failure(m.lunit(o[0]))) return bad;
        if (auto bad = adjoint_equivalence_failure(m.runit(o[0]))) return bad;
        return adjoint_equivalence_failure(m.assoc(o[0], o[1], o[2]));
      }));

  // modification components: correct boundaries and invertibility
  laws.push_back(law_over_objs(
      ctx, "monoidal.modification-cells", anchor_mods, 4,
      [m](const std::vector<Obj>& o) -> std::optional<json> {
        const Bicategory& B = *m.B;
        for (const TwoCell& t :
             {m.pent(o[0], o[1], o[2], o[3]), m.mid(o[0], o[1]),
              m.lun(o[0], o[1]), m.run(o[0], o[1])}) {
          if (auto bad = expect_valid(B, t)) return bad;
          if (!B.invert(t))
            return law_failure({{"not_invertible", t.to_json()}});
        }
        return std::nullopt;
      }));

  return laws;
}

}  // namespace bicheck
