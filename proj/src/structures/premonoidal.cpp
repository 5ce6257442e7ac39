#include "bicheck/structures/premonoidal.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/structures/centre.hpp"

namespace bicheck {

PseudonatTrans assoc_l_psnat(const PremonoidalStructure& p, const Obj& b,
                             const Obj& c) {
  PseudonatTrans s;
  s.F = compose_psf(p.bin.act_r(c), p.bin.act_r(b));
  s.G = p.bin.act_r(p.bin.ten_obj(b, c));
  s.label = "alpha-l";
  s.at = [p, b, c](const Obj& x) { return p.assoc1(x, b, c); };
  s.nat = [p, b, c](const OneCell& f) { return p.assoc_nat_l(f, b, c); };
  return s;
}

PseudonatTrans assoc_m_psnat(const PremonoidalStructure& p, const Obj& a,
                             const Obj& c) {
  PseudonatTrans s;
  s.F = compose_psf(p.bin.act_r(c), p.bin.act_l(a));
  s.G = compose_psf(p.bin.act_l(a), p.bin.act_r(c));
  s.label = "alpha-m";
  s.at = [p, a, c](const Obj& x) { return p.assoc1(a, x, c); };
  s.nat = [p, a, c](const OneCell& g) { return p.assoc_nat_m(a, g, c); };
  return s;
}

PseudonatTrans assoc_r_psnat(const PremonoidalStructure& p, const Obj& a,
                             const Obj& b) {
  PseudonatTrans s;
  s.F = p.bin.act_l(p.bin.ten_obj(a, b));
  s.G = compose_psf(p.bin.act_l(a), p.bin.act_l(b));
  s.label = "alpha-r";
  s.at = [p, a, b](const Obj& x) { return p.assoc1(a, b, x); };
  s.nat = [p, a, b](const OneCell& h) { return p.assoc_nat_r(a, b, h); };
  return s;
}

PseudonatTrans lunit_psnat(const PremonoidalStructure& p) {
  PseudonatTrans s;
  s.F = p.bin.act_l(p.unit);
  s.G = identity_psf(p.bin.B);
  s.label = "lambda";
  s.at = [p](const Obj& a) { return p.lunit1(a); };
  s.nat = p.lunit_nat;
  return s;
}

PseudonatTrans runit_psnat(const PremonoidalStructure& p) {
  PseudonatTrans s;
  s.F = p.bin.act_r(p.unit);
  s.G = identity_psf(p.bin.B);
  s.label = "rho";
  s.at = [p](const Obj& a) { return p.runit1(a); };
  s.nat = p.runit_nat;
  return s;
}

PremonoidalStructure premonoidal_from_monoidal(const MonoidalStructure& m) {
  PremonoidalStructure p;
  p.bin = canonical_binoidal(m);
  p.unit = m.unit;
  Bicategory::Ptr B = m.B;

  p.lunit_adj = m.lunit;
  p.lunit_central = [m](const Obj& a) {
    return canonical_central(m, m.lunit(a).fwd);
  };
  p.lunit_nat = m.lunit_nat;
  p.runit_adj = m.runit;
  p.runit_central = [m](const Obj& a) {
    return canonical_central(m, m.runit(a).fwd);
  };
  p.runit_nat = m.runit_nat;
  p.assoc_adj = m.assoc;
  p.assoc_central = [m](const Obj& a, const Obj& b, const Obj& c) {
    return canonical_central(m, m.assoc(a, b, c).fwd);
  };
  p.assoc_nat_l = [m, B](const OneCell& f, const Obj& b,
                         const Obj& c) {
    OneCell alpha = m.assoc(f.src, b, c).fwd;
    TwoCell fix = m.ten_2(B->id2(f), m.ten_unit(b, c));
    return B->vcomp(m.assoc_nat(f, B->id1(b), B->id1(c)),
                    B->whisker_r(fix, alpha));
  };
  p.assoc_nat_m = [m, B](const Obj& a, const OneCell& g, const Obj& c) {
    return m.assoc_nat(B->id1(a), g, B->id1(c));
  };
  p.assoc_nat_r = [m, B](const Obj& a, const Obj& b, const OneCell& h) {
    OneCell alpha2 = m.assoc(a, b, h.dst).fwd;
    TwoCell fix = m.ten_2(B->inv(m.ten_unit(a, b)), B->id2(h));
    return B->vcomp(B->whisker_l(alpha2, fix),
                    m.assoc_nat(B->id1(a), B->id1(b), h));
  };
  p.pent = m.pent;
  p.mid = m.mid;
  p.lun = m.lun;
  p.run = m.run;
  return p;
}

namespace {

struct Fig3Law {
  std::string id;
  std::string anchor;
  // builds (sigma, tau, component) from an rng-supplied object tuple
  std::function<std::optional<json>(const PremonoidalStructure&,
                                    const std::vector<Obj>&, const OneCell&)>
      body;
};

std::optional<json> square_check(const PseudonatTrans& s,
                                 const PseudonatTrans& t, const TwoCell& at_a,
                                 const TwoCell& at_b, const OneCell& g) {
  Modification m;
  m.s = s;
  m.t = t;
  Obj a = g.src, b = g.dst;
  m.at = [a, b, at_a, at_b](const Obj& x) {
    if (x == a) return at_a;
    return at_b;
  };
  return modification_square_at(m, g);
}

}  // namespace

std::vector<LawRun> premonoidal_laws(const CheckCtx& ctx,
                                     const PremonoidalStructure& p,
                                     const CentralGen& gen) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Bp = p.bin.B;
  const std::string anchor_bino = "such that A |x B = A |x B on objects";
  const std::string anchor_def5 = "central pseudonatural adjoint equivalences";
  const std::string anchor_eq3 = "three families of pseudonatural transformations";
  const std::string anchor_fig3 = "Modification axioms for the structural 2-cells";
  const std::string anchor_central2 = "define modifications lc^f => lc^f'";

  // ---- binoidal pseudofunctor laws, per sampled object ----
  for (bool left : {true, false}) {
    std::string id = left ? "premonoidal.whisker-left-functor"
                          : "premonoidal.whisker-right-functor";
    laws.push_back(law_over_cells(
        ctx, id, anchor_bino, 3,
        [p, left, ctx](const std::vector<OneCell>& c,
                       const std::vector<TwoCell>& t,
                       Rng& rng) -> std::optional<json> {
          Obj a = ctx.sampler->obj(rng);
          Pseudofunctor F = left ? p.bin.act_l(a) : p.bin.act_r(a);
          if (auto bad = psf_hexagon_at(F, c[2], c[1], c[0])) return bad;
          if (auto bad = psf_unit_laws_at(F, c[0])) return bad;
          if (auto bad = psf_compositor_natural_at(F, t[1], t[0])) return bad;
          TwoCell stacked = ctx.sampler->two_from(rng, t[0].dst);
          return psf_respects_vcomp_at(F, stacked, t[0]);
        }));
  }
  laws.push_back(law_over_objs(
      ctx, "premonoidal.joint-objects", anchor_bino, 2,
      [p](const std::vector<Obj>& o) -> std::optional<json> {
        Obj lhs = p.bin.act_l(o[0]).on_obj(o[1]);
        Obj rhs = p.bin.act_r(o[1]).on_obj(o[0]);
        if (!(lhs == rhs))
          return law_failure({{"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}});
        return std::nullopt;
      }));

  // ---- structural transformations: pseudonaturality ----
  {
    auto ll = pseudonat_laws(ctx, lunit_psnat(p), "pre-lambda", anchor_def5);
    laws.insert(laws.end(), ll.begin(), ll.end());
    auto rl = pseudonat_laws(ctx, runit_psnat(p), "pre-rho", anchor_def5);
    laws.insert(laws.end(), rl.begin(), rl.end());
  }
  struct Fam {
    std::string id;
    std::function<PseudonatTrans(const PremonoidalStructure&, const Obj&,
                                 const Obj&)>
        build;
  };
  for (const Fam& fam :
       {Fam{"premonoidal.assoc-family-first", assoc_l_psnat},
        Fam{"premonoidal.assoc-family-middle", assoc_m_psnat},
        Fam{"premonoidal.assoc-family-last", assoc_r_psnat}}) {
    laws.push_back(law_over_cells(
        ctx, fam.id, anchor_eq3, 2,
        [p, fam, ctx](const std::vector<OneCell>& c,
                      const std::vector<TwoCell>& t,
                      Rng& rng) -> std::optional<json> {
          Obj u = ctx.sampler->obj(rng);
          Obj v = ctx.sampler->obj(rng);
          PseudonatTrans s = fam.build(p, u, v);
          if (!p.bin.B->invert(s.nat(c[0])))
            return law_failure({{"not_invertible", "naturality cell"}});
          if (auto bad = psnat_natural2_at(s, t[0])) return bad;
          if (auto bad = psnat_unit_at(s, c[0].src)) return bad;
          return psnat_composition_at(s, c[1], c[0]);
        }));
  }

  // ---- centrality of the structural 1-cells ----
  {
    CheckCtx cctx = ctx;
    auto ol = central_1cell_laws(
        cctx, p.bin,
        [p, ctx](Rng& rng) { return p.lunit_central(ctx.sampler->obj(rng)); },
        "premonoidal-lambda", anchor_def5);
    laws.insert(laws.end(), ol.begin(), ol.end());
    auto orr = central_1cell_laws(
        cctx, p.bin,
        [p, ctx](Rng& rng) { return p.runit_central(ctx.sampler->obj(rng)); },
        "premonoidal-rho", anchor_def5);
    laws.insert(laws.end(), orr.begin(), orr.end());
    auto oa = central_1cell_laws(
        cctx, p.bin,
        [p, ctx](Rng& rng) {
          Obj a = ctx.sampler->obj(rng);
          Obj b = ctx.sampler->obj(rng);
          Obj c = ctx.sampler->obj(rng);
          return p.assoc_central(a, b, c);
        },
        "premonoidal-alpha", anchor_def5);
    laws.insert(laws.end(), oa.begin(), oa.end());
  }

  // ---- adjoint-equivalence triangles ----
  laws.push_back(law_over_objs(
      ctx, "premonoidal.adjoint-triangles",
      "satisfy the usual triangle laws", 3,
      [p](const std::vector<Obj>& o) -> std::optional<json> {
        if (auto bad = adjoint_equivalence_failure(p.lunit_adj(o[0])))
          return bad;
        if (auto bad = adjoint_equivalence_failure(p.runit_adj(o[0])))
          return bad;
        return adjoint_equivalence_failure(p.assoc_adj(o[0], o[1], o[2]));
      }));

  // ---- Fig. 3: modification squares in every argument ----
  auto add_fig3 = [&](const std::string& id,
                      std::function<std::optional<json>(
                          const std::vector<Obj>&, const OneCell&, Rng&)>
                          body) {
    laws.push_back(law_over_cells(
        ctx, id, anchor_fig3, 1,
        [body, ctx](const std::vector<OneCell>& c,
                    const std::vector<TwoCell>&,
                    Rng& rng) -> std::optional<json> {
          std::vector<Obj> o;
          for (int i = 0; i < 3; ++i) o.push_back(ctx.sampler->obj(rng));
          return body(o, c[0], rng);
        }));
  };

  add_fig3("premonoidal.fig3.pent-first",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj &B = o[0], &C = o[1], &D = o[2];
             PseudonatTrans s = vcomp_psnat(
                 rc_psnat(p.bin, p.assoc_central(B, C, D)),
                 vcomp_psnat(assoc_l_psnat(p, p.bin.ten_obj(B, C), D),
                             whisker_psf_psnat(p.bin.act_r(D),
                                               assoc_l_psnat(p, B, C))));
             PseudonatTrans t = vcomp_psnat(
                 assoc_l_psnat(p, B, p.bin.ten_obj(C, D)),
                 whisker_psnat_psf(assoc_l_psnat(p, C, D), p.bin.act_r(B)));
             return square_check(s, t, p.pent(g.src, B, C, D),
                                 p.pent(g.dst, B, C, D), g);
           });
  add_fig3("premonoidal.fig3.pent-second",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj &A = o[0], &C = o[1], &D = o[2];
             PseudonatTrans s = vcomp_psnat(
                 whisker_psf_psnat(p.bin.act_l(A), assoc_l_psnat(p, C, D)),
                 vcomp_psnat(whisker_psnat_psf(assoc_m_psnat(p, A, D),
                                               p.bin.act_r(C)),
                             whisker_psf_psnat(p.bin.act_r(D),
                                               assoc_m_psnat(p, A, C))));
             PseudonatTrans t = vcomp_psnat(
                 assoc_m_psnat(p, A, p.bin.ten_obj(C, D)),
                 whisker_psnat_psf(assoc_l_psnat(p, C, D), p.bin.act_l(A)));
             return square_check(s, t, p.pent(A, g.src, C, D),
                                 p.pent(A, g.dst, C, D), g);
           });
  add_fig3("premonoidal.fig3.pent-third",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj &A = o[0], &B = o[1], &D = o[2];
             PseudonatTrans s = vcomp_psnat(
                 whisker_psf_psnat(p.bin.act_l(A), assoc_m_psnat(p, B, D)),
                 vcomp_psnat(whisker_psnat_psf(assoc_m_psnat(p, A, D),
                                               p.bin.act_l(B)),
                             whisker_psf_psnat(p.bin.act_r(D),
                                               assoc_r_psnat(p, A, B))));
             PseudonatTrans t = vcomp_psnat(
                 whisker_psnat_psf(assoc_r_psnat(p, A, B), p.bin.act_r(D)),
                 assoc_m_psnat(p, p.bin.ten_obj(A, B), D));
             return square_check(s, t, p.pent(A, B, g.src, D),
                                 p.pent(A, B, g.dst, D), g);
           });
  add_fig3("premonoidal.fig3.pent-last",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj &A = o[0], &B = o[1], &C = o[2];
             PseudonatTrans s = vcomp_psnat(
                 whisker_psf_psnat(p.bin.act_l(A), assoc_r_psnat(p, B, C)),
                 vcomp_psnat(assoc_r_psnat(p, A, p.bin.ten_obj(B, C)),
                             lc_psnat(p.bin, p.assoc_central(A, B, C))));
             PseudonatTrans t = vcomp_psnat(
                 whisker_psnat_psf(assoc_r_psnat(p, A, B), p.bin.act_l(C)),
                 assoc_r_psnat(p, p.bin.ten_obj(A, B), C));
             return square_check(s, t, p.pent(A, B, C, g.src),
                                 p.pent(A, B, C, g.dst), g);
           });
  add_fig3("premonoidal.fig3.m-first",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& B = o[0];
             PseudonatTrans s =
                 vcomp_psnat(rc_psnat(p.bin, p.lunit_central(B)),
                             assoc_l_psnat(p, p.unit, B));
             PseudonatTrans t =
                 whisker_psf_psnat(p.bin.act_r(B), runit_psnat(p));
             return square_check(s, t, p.mid(g.src, B), p.mid(g.dst, B), g);
           });
  add_fig3("premonoidal.fig3.m-second",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& A = o[0];
             PseudonatTrans s = vcomp_psnat(
                 whisker_psf_psnat(p.bin.act_l(A), lunit_psnat(p)),
                 assoc_r_psnat(p, A, p.unit));
             PseudonatTrans t = lc_psnat(p.bin, p.runit_central(A));
             return square_check(s, t, p.mid(A, g.src), p.mid(A, g.dst), g);
           });
  add_fig3("premonoidal.fig3.l-first",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& B = o[0];
             PseudonatTrans s =
                 whisker_psf_psnat(p.bin.act_r(B), lunit_psnat(p));
             PseudonatTrans t = vcomp_psnat(
                 whisker_psnat_psf(lunit_psnat(p), p.bin.act_r(B)),
                 assoc_m_psnat(p, p.unit, B));
             return square_check(s, t, p.lun(g.src, B), p.lun(g.dst, B), g);
           });
  add_fig3("premonoidal.fig3.l-second",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& A = o[0];
             PseudonatTrans s = lc_psnat(p.bin, p.lunit_central(A));
             PseudonatTrans t = vcomp_psnat(
                 whisker_psnat_psf(lunit_psnat(p), p.bin.act_l(A)),
                 assoc_r_psnat(p, p.unit, A));
             return square_check(s, t, p.lun(A, g.src), p.lun(A, g.dst), g);
           });
  add_fig3("premonoidal.fig3.r-first",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& B = o[0];
             PseudonatTrans s =
                 whisker_psnat_psf(runit_psnat(p), p.bin.act_r(B));
             PseudonatTrans t =
                 vcomp_psnat(rc_psnat(p.bin, p.runit_central(B)),
                             assoc_l_psnat(p, B, p.unit));
             return square_check(s, t, p.run(g.src, B), p.run(g.dst, B), g);
           });
  add_fig3("premonoidal.fig3.r-second",
           [p](const std::vector<Obj>& o, const OneCell& g,
               Rng&) -> std::optional<json> {
             const Obj& A = o[0];
             PseudonatTrans s =
                 whisker_psnat_psf(runit_psnat(p), p.bin.act_l(A));
             PseudonatTrans t = vcomp_psnat(
                 whisker_psf_psnat(p.bin.act_l(A), runit_psnat(p)),
                 assoc_m_psnat(p, A, p.unit));
             return square_check(s, t, p.run(A, g.src), p.run(A, g.dst), g);
           });

  // ---- centrality of the modification components ----
  laws.push_back(law_over_cells(
      ctx, "premonoidal.central2.structural", anchor_central2, 1,
      [p, ctx](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
               Rng& rng) -> std::optional<json> {
        const BinoidalStructure& bin = p.bin;
        Obj A = ctx.sampler->obj(rng);
        Obj B = ctx.sampler->obj(rng);
        // m: (A |> lambda_B) o alpha_{A,I,B} => rho_A <| B
        CentralOneCell src_m = central_compose(
            bin, centre_whisker(p, A, p.lunit_central(B), Side::Left),
            p.assoc_central(A, p.unit, B));
        CentralOneCell dst_m =
            centre_whisker(p, B, p.runit_central(A), Side::Right);
        if (auto bad = central_2cell_failure(bin, src_m, dst_m, p.mid(A, B),
                                             c[0].src, c[0]))
          return law_failure({{"cell", "m"}, {"detail", *bad}});
        // l: lambda_A <| B => lambda_{A&B} o alpha_{I,A,B}
        CentralOneCell src_l =
            centre_whisker(p, B, p.lunit_central(A), Side::Right);
        CentralOneCell dst_l = central_compose(
            bin, p.lunit_central(bin.ten_obj(A, B)),
            p.assoc_central(p.unit, A, B));
        if (auto bad = central_2cell_failure(bin, src_l, dst_l, p.lun(A, B),
                                             c[0].src, c[0]))
          return law_failure({{"cell", "l"}, {"detail", *bad}});
        // r: rho_{A&B} => (A |> rho_B) o alpha_{A,B,I}
        CentralOneCell src_r = p.runit_central(bin.ten_obj(A, B));
        CentralOneCell dst_r = central_compose(
            bin, centre_whisker(p, A, p.runit_central(B), Side::Left),
            p.assoc_central(A, B, p.unit));
        if (auto bad = central_2cell_failure(bin, src_r, dst_r, p.run(A, B),
                                             c[0].src, c[0]))
          return law_failure({{"cell", "r"}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "premonoidal.central2.pent", anchor_central2, 1,
      [p, ctx](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
               Rng& rng) -> std::optional<json> {
        const BinoidalStructure& bin = p.bin;
        Obj A = ctx.sampler->obj(rng);
        Obj B = ctx.sampler->obj(rng);
        Obj C = ctx.sampler->obj(rng);
        Obj D = ctx.sampler->obj(rng);
        CentralOneCell src = central_compose(
            bin, centre_whisker(p, A, p.assoc_central(B, C, D), Side::Left),
            central_compose(
                bin, p.assoc_central(A, bin.ten_obj(B, C), D),
                centre_whisker(p, D, p.assoc_central(A, B, C), Side::Right)));
        CentralOneCell dst = central_compose(
            bin, p.assoc_central(A, B, bin.ten_obj(C, D)),
            p.assoc_central(bin.ten_obj(A, B), C, D));
        if (auto bad = central_2cell_failure(bin, src, dst,
                                             p.pent(A, B, C, D), c[0].src,
                                             c[0]))
          return law_failure({{"cell", "p"}, {"detail", *bad}});
        return std::nullopt;
      }));

  // ---- centre: whisker equation and closure ----
  auto cl = centre_laws(ctx, p, gen);
  laws.insert(laws.end(), cl.begin(), cl.end());

  return laws;
}

}  // namespace bicheck
