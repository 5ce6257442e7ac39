#include "bicheck/structures/binoidal.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

Pseudofunctor tensor_fix_left(const MonoidalStructure& m, const Obj& a) {
  Pseudofunctor f;
  f.src = m.B;
  f.dst = m.B;
  f.label = "fixl";
  f.on_obj = [m, a](const Obj& x) { return m.ten_obj(a, x); };
  f.on_1 = [m, a](const OneCell& g) { return m.ten_1(m.B->id1(a), g); };
  f.on_2 = [m, a](const TwoCell& t) {
    return m.ten_2(m.B->id2(m.B->id1(a)), t);
  };
  f.compositor = [m, a](const OneCell& g, const OneCell& f1) {
    TwoCell step = m.ten_compositor(m.B->id1(a), g, m.B->id1(a), f1);
    TwoCell fix = m.ten_2(m.B->lunitor(m.B->id1(a)),
                          m.B->id2(m.B->compose1(g, f1)));
    return m.B->vcomp(fix, step);
  };
  f.unit = [m, a](const Obj& x) { return m.ten_unit(a, x); };
  return f;
}

Pseudofunctor tensor_fix_right(const MonoidalStructure& m, const Obj& b) {
  Pseudofunctor f;
  f.src = m.B;
  f.dst = m.B;
  f.label = "fixr";
  f.on_obj = [m, b](const Obj& x) { return m.ten_obj(x, b); };
  f.on_1 = [m, b](const OneCell& g) { return m.ten_1(g, m.B->id1(b)); };
  f.on_2 = [m, b](const TwoCell& t) {
    return m.ten_2(t, m.B->id2(m.B->id1(b)));
  };
  f.compositor = [m, b](const OneCell& g, const OneCell& f1) {
    TwoCell step = m.ten_compositor(g, m.B->id1(b), f1, m.B->id1(b));
    TwoCell fix = m.ten_2(m.B->id2(m.B->compose1(g, f1)),
                          m.B->lunitor(m.B->id1(b)));
    return m.B->vcomp(fix, step);
  };
  f.unit = [m, b](const Obj& x) { return m.ten_unit(x, b); };
  return f;
}

BinoidalStructure canonical_binoidal(const MonoidalStructure& m) {
  BinoidalStructure bin;
  bin.B = m.B;
  bin.ten_obj = m.ten_obj;
  bin.act_l = [m](const Obj& a) { return tensor_fix_left(m, a); };
  bin.act_r = [m](const Obj& b) { return tensor_fix_right(m, b); };
  return bin;
}

CentralOneCell canonical_central(const MonoidalStructure& m,
                                 const OneCell& f) {
  CentralOneCell c;
  c.cell = f;
  Bicategory::Ptr B = m.B;
  c.lc = [m, B, f](const OneCell& g) {
    // (f&B') o (A&g) => (f o id)&(id o g) => f&g
    //                => (id o f)&(g o id) => (A'&g) o (f&B)
    return B->vchain({
        m.ten_compositor(f, B->id1(g.dst), B->id1(f.src), g),
        m.ten_2(B->runitor(f), B->lunitor(g)),
        B->inv(m.ten_2(B->lunitor(f), B->runitor(g))),
        B->inv(m.ten_compositor(B->id1(f.dst), g, f, B->id1(g.src))),
    });
  };
  auto lc_of = [m, B](const OneCell& u, const OneCell& v) {
    return B->vchain({
        m.ten_compositor(u, B->id1(v.dst), B->id1(u.src), v),
        m.ten_2(B->runitor(u), B->lunitor(v)),
        B->inv(m.ten_2(B->lunitor(u), B->runitor(v))),
        B->inv(m.ten_compositor(B->id1(u.dst), v, u, B->id1(v.src))),
    });
  };
  c.rc = [lc_of, B, f](const OneCell& g) {
    // rc_g is the inverse of the canonical lc of g taken at f
    return B->inv(lc_of(g, f));
  };
  return c;
}

PseudonatTrans lc_psnat(const BinoidalStructure& bin,
                        const CentralOneCell& c) {
  PseudonatTrans s;
  s.F = bin.act_l(c.cell.src);
  s.G = bin.act_l(c.cell.dst);
  s.label = "lc";
  OneCell f = c.cell;
  s.at = [bin, f](const Obj& b) { return bin.wr(f, b); };
  auto lc = c.lc;
  Bicategory::Ptr B = bin.B;
  s.nat = [lc, B](const OneCell& g) { return B->inv(lc(g)); };
  return s;
}

PseudonatTrans rc_psnat(const BinoidalStructure& bin,
                        const CentralOneCell& c) {
  PseudonatTrans s;
  s.F = bin.act_r(c.cell.src);
  s.G = bin.act_r(c.cell.dst);
  s.label = "rc";
  OneCell f = c.cell;
  s.at = [bin, f](const Obj& b) { return bin.wl(b, f); };
  auto rc = c.rc;
  Bicategory::Ptr B = bin.B;
  s.nat = [rc, B](const OneCell& g) { return B->inv(rc(g)); };
  return s;
}

CentralOneCell central_id(const BinoidalStructure& bin, const Obj& a) {
  CentralOneCell c;
  Bicategory::Ptr B = bin.B;
  c.cell = B->id1(a);
  c.lc = [bin, B, a](const OneCell& g) {
    OneCell ag = bin.wl(a, g);
    TwoCell ub = bin.act_r(g.src).unit(a);   // id_{A&B} => id_A <| B
    TwoCell ub2 = bin.act_r(g.dst).unit(a);  // id_{A&B'} => id_A <| B'
    return B->vchain({
        B->whisker_r(B->inv(ub2), ag),
        B->lunitor(ag),
        B->runitor_inv(ag),
        B->whisker_l(ag, ub),
    });
  };
  c.rc = [bin, B, a](const OneCell& g) {
    OneCell ga = bin.wr(g, a);
    TwoCell ub = bin.act_l(g.src).unit(a);   // id_{B&A} => B |> id_A
    TwoCell ub2 = bin.act_l(g.dst).unit(a);  // id_{B'&A} => B' |> id_A
    return B->vchain({
        B->whisker_r(B->inv(ub2), ga),
        B->lunitor(ga),
        B->runitor_inv(ga),
        B->whisker_l(ga, ub),
    });
  };
  return c;
}

CentralOneCell central_compose(const BinoidalStructure& bin,
                               const CentralOneCell& g,
                               const CentralOneCell& f) {
  Bicategory::Ptr B = bin.B;
  if (f.cell.dst != g.cell.src)
    throw BoundaryMismatch("central composition endpoints");
  CentralOneCell out;
  out.cell = B->compose1(g.cell, f.cell);
  OneCell gc = g.cell, fc = f.cell, comp = out.cell;

  PseudonatTrans lcomp = vcomp_psnat(lc_psnat(bin, g), lc_psnat(bin, f));
  PseudonatTrans ladj = adjust_components(
      lcomp, [bin, comp](const Obj& b) { return bin.wr(comp, b); },
      [bin, gc, fc](const Obj& b) {
        return bin.act_r(b).compositor(gc, fc);
      });
  out.lc = [ladj, B](const OneCell& x) { return B->inv(ladj.nat(x)); };

  PseudonatTrans rcomp = vcomp_psnat(rc_psnat(bin, g), rc_psnat(bin, f));
  PseudonatTrans radj = adjust_components(
      rcomp, [bin, comp](const Obj& b) { return bin.wl(b, comp); },
      [bin, gc, fc](const Obj& b) {
        return bin.act_l(b).compositor(gc, fc);
      });
  out.rc = [radj, B](const OneCell& x) { return B->inv(radj.nat(x)); };
  return out;
}

std::vector<LawRun> central_1cell_laws(const CheckCtx& ctx,
                                       const BinoidalStructure& bin,
                                       std::function<CentralOneCell(Rng&)> gen,
                                       const std::string& name,
                                       const std::string& anchor) {
  std::vector<LawRun> laws;
  Bicategory::Ptr B = bin.B;

  laws.push_back(law_over_cells(
      ctx, "central." + name + ".lc", anchor, 2,
      [bin, gen](const std::vector<OneCell>& c,
                 const std::vector<TwoCell>& t,
                 Rng& rng) -> std::optional<json> {
        CentralOneCell cc = gen(rng);
        PseudonatTrans s = lc_psnat(bin, cc);
        if (!bin.B->invert(cc.lc(c[0])))
          return law_failure({{"not_invertible", "lc"}});
        if (auto bad = psnat_natural2_at(s, t[0])) return bad;
        if (auto bad = psnat_unit_at(s, c[0].src)) return bad;
        return psnat_composition_at(s, c[1], c[0]);
      }));

  laws.push_back(law_over_cells(
      ctx, "central." + name + ".rc", anchor, 2,
      [bin, gen](const std::vector<OneCell>& c,
                 const std::vector<TwoCell>& t,
                 Rng& rng) -> std::optional<json> {
        CentralOneCell cc = gen(rng);
        PseudonatTrans s = rc_psnat(bin, cc);
        if (!bin.B->invert(cc.rc(c[0])))
          return law_failure({{"not_invertible", "rc"}});
        if (auto bad = psnat_natural2_at(s, t[0])) return bad;
        if (auto bad = psnat_unit_at(s, c[0].src)) return bad;
        return psnat_composition_at(s, c[1], c[0]);
      }));

  return laws;
}

std::optional<json> central_2cell_failure(const BinoidalStructure& bin,
                                          const CentralOneCell& src,
                                          const CentralOneCell& dst,
                                          const TwoCell& sigma,
                                          const Obj& b, const OneCell& g) {
  if (sigma.src != src.cell || sigma.dst != dst.cell)
    return law_failure({{"error", "2-cell does not join the central cells"},
                        {"cell", sigma.to_json()}});
  // modification lc^src => lc^dst with components sigma <| B
  Modification ml;
  ml.s = lc_psnat(bin, src);
  ml.t = lc_psnat(bin, dst);
  ml.at = [bin, sigma](const Obj& x) { return bin.wr2(sigma, x); };
  Modification mr;
  mr.s = rc_psnat(bin, src);
  mr.t = rc_psnat(bin, dst);
  mr.at = [bin, sigma](const Obj& x) { return bin.wl2(x, sigma); };
  (void)b;
  if (auto bad = modification_square_at(ml, g))
    return law_failure({{"family", "lc"}, {"detail", *bad}});
  if (auto bad = modification_square_at(mr, g))
    return law_failure({{"family", "rc"}, {"detail", *bad}});
  return std::nullopt;
}

std::vector<LawRun> central_2cell_laws(
    const CheckCtx& ctx, const BinoidalStructure& bin,
    std::function<std::tuple<CentralOneCell, CentralOneCell, TwoCell>(Rng&)>
        gen,
    const std::string& name, const std::string& anchor) {
  std::vector<LawRun> laws;
  laws.push_back(law_over_chains(
      ctx, "central2." + name, anchor, 1,
      [bin, gen, ctx](const std::vector<OneCell>& c) -> std::optional<json> {
        // derive a deterministic generator stream from the sampled cell
        Rng rng(std::hash<std::string>{}(c[0].str()));
        auto [src, dst, sigma] = gen(rng);
        return central_2cell_failure(bin, src, dst, sigma, c[0].src, c[0]);
      }));
  return laws;
}

}  // namespace bicheck
