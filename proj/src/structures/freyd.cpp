#include "bicheck/structures/freyd.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/structures/scripts.hpp"

namespace bicheck {

json InterchangeWitness::to_json() const {
  return json{{"f", f.to_json()},
              {"g", g.to_json()},
              {"left_then_right", left_then_right.to_json()},
              {"right_then_left", right_then_left.to_json()}};
}

std::optional<InterchangeWitness> find_interchange_failure(
    const BinoidalStructure& bin, const InstanceSampler& sampler) {
  std::vector<Obj> objs = sampler.universe();
  for (const Obj& a : objs)
    for (const Obj& a2 : objs)
      for (const Obj& b : objs)
        for (const Obj& b2 : objs) {
          auto fs = sampler.all_ones(a, a2);
          auto gs = sampler.all_ones(b, b2);
          if (!fs || !gs) continue;
          for (const OneCell& f : *fs)
            for (const OneCell& g : *gs) {
              OneCell ltr = bin.B->compose1(bin.wr(f, b2), bin.wl(a, g));
              OneCell rtl = bin.B->compose1(bin.wl(a2, g), bin.wr(f, b));
              if (ltr != rtl)
                return InterchangeWitness{f, g, ltr, rtl};
            }
        }
  return std::nullopt;
}

namespace {

// V-side interchange isomorphism J(x & Y') o J(X & y) => J(x & y) through
// the compositors, taking the upper route of the axiom-3 display.
TwoCell value_interchange_upper(const FreydStructure& fr, const OneCell& x,
                                const OneCell& y) {
  const MonoidalStructure& V = fr.jp.V;
  const Bicategory& BV = *V.B;
  const Bicategory& BK = *fr.jp.P.bin.B;
  OneCell idx = BV.id1(x.src);
  OneCell idy2 = BV.id1(y.dst);
  OneCell upper_out = V.ten_1(x, idy2);   // x & Y'
  OneCell upper_in = V.ten_1(idx, y);     // X & y
  TwoCell inter = BV.vcomp(
      V.ten_2(BV.runitor(x), BV.lunitor(y)),
      V.ten_compositor(x, idy2, idx, y));
  return BK.vcomp(fr.jp.J.on_2(inter),
                  fr.jp.J.compositor(upper_out, upper_in));
}

TwoCell value_interchange_middle(const FreydStructure& fr, const OneCell& x,
                                 const OneCell& y) {
  const MonoidalStructure& V = fr.jp.V;
  const Bicategory& BV = *V.B;
  const Bicategory& BK = *fr.jp.P.bin.B;
  OneCell idx2 = BV.id1(x.dst);
  OneCell idy = BV.id1(y.src);
  OneCell first = V.ten_1(idx2, y);   // X' & y
  OneCell second = V.ten_1(x, idy);   // x & Y
  TwoCell inter = BV.vcomp(
      V.ten_2(BV.lunitor(x), BV.runitor(y)),
      V.ten_compositor(idx2, y, x, idy));
  return BK.vcomp(fr.jp.J.on_2(inter), fr.jp.J.compositor(first, second));
}

}  // namespace

std::vector<LawRun> freyd_laws(const CheckCtx& vctx, const CheckCtx& bctx,
                               const FreydStructure& fr) {
  std::vector<LawRun> laws;
  const PremonoidalStructure P = fr.jp.P;
  const MonoidalStructure V = fr.jp.V;
  const Pseudofunctor J = fr.jp.J;
  Bicategory::Ptr BK = P.bin.B;
  PremonoidalStructure PV = premonoidal_from_monoidal(V);
  const std::string anchor13 = "families of invertible icons";
  const std::string anchor14 = "factoring J through the centre";

  // J is a pseudofunctor
  {
    auto jl = pseudofunctor_laws(vctx, J, "J", anchor13);
    laws.insert(laws.end(), jl.begin(), jl.end());
  }

  // axiom 1 of the premonoidal pseudofunctor: strict structural 1-cells
  laws.push_back(law_over_objs(
      vctx, "freyd.strict-structural",
      "strictly preserves the components of the structural transformations",
      3, [fr, P, V, J](const std::vector<Obj>& o) -> std::optional<json> {
        OneCell lam = J.on_1(V.lunit(o[0]).fwd);
        if (lam != P.lunit1(o[0]))
          return law_failure({{"cell", "lambda"}, {"got", lam.to_json()}});
        OneCell rho = J.on_1(V.runit(o[0]).fwd);
        if (rho != P.runit1(o[0]))
          return law_failure({{"cell", "rho"}, {"got", rho.to_json()}});
        OneCell al = J.on_1(V.assoc(o[0], o[1], o[2]).fwd);
        if (al != P.assoc1(o[0], o[1], o[2]))
          return law_failure({{"cell", "alpha"}, {"got", al.to_json()}});
        return std::nullopt;
      }));

  // theta and zeta are invertible icons, per sampled fixed object
  for (bool is_theta : {true, false}) {
    std::string id = is_theta ? "freyd.icon-theta" : "freyd.icon-zeta";
    laws.push_back(law_over_cells(
        vctx, id, anchor13, 2,
        [fr, is_theta, vctx](const std::vector<OneCell>& c,
                             const std::vector<TwoCell>& t,
                             Rng& rng) -> std::optional<json> {
          Obj a = vctx.sampler->obj(rng);
          Icon icon = is_theta ? fr.jp.theta(a) : fr.jp.zeta(a);
          if (!icon.F.dst->invert(icon.at(c[0])))
            return law_failure({{"not_invertible", c[0].to_json()}});
          if (auto bad = icon_natural_at(icon, t[0])) return bad;
          if (auto bad = icon_identity_at(icon, c[0].src)) return bad;
          return icon_composition_at(icon, c[1], c[0]);
        }));
  }

  // compatibility pastings for the structural transformations (Def. 13)
  laws.push_back(law_over_cells(
      vctx, "freyd.compat.lambda", anchor13, 1,
      [fr, P, V, J, BK](const std::vector<OneCell>& c,
                        const std::vector<TwoCell>&,
                        Rng&) -> std::optional<json> {
        const OneCell& g = c[0];
        OneCell lamV = V.lunit(g.src).fwd;
        OneCell lamV2 = V.lunit(g.dst).fwd;
        OneCell ig = V.ten_1(V.B->id1(V.unit), g);
        Env env;
        env.one("lam2", P.lunit1(g.dst));
        env.two("phi1", J.compositor(g, lamV));
        env.two("jnat", J.on_2(V.lunit_nat(g)));
        env.two("phi2i", BK->inv(J.compositor(lamV2, ig)));
        env.two("thi", BK->inv(fr.jp.theta(V.unit).at(g)));
        env.two("rhs0", P.lunit_nat(J.on_1(g)));
        return script_failure(*BK, "def13_lambda", env);
      }));
  laws.back().script = "def13_lambda";

  laws.push_back(law_over_cells(
      vctx, "freyd.compat.rho", anchor13, 1,
      [fr, P, V, J, BK](const std::vector<OneCell>& c,
                        const std::vector<TwoCell>&,
                        Rng&) -> std::optional<json> {
        const OneCell& f = c[0];
        OneCell rhoV = V.runit(f.src).fwd;
        OneCell rhoV2 = V.runit(f.dst).fwd;
        OneCell fi = V.ten_1(f, V.B->id1(V.unit));
        Env env;
        env.one("rho2", P.runit1(f.dst));
        env.two("phi1", J.compositor(f, rhoV));
        env.two("jnat", J.on_2(V.runit_nat(f)));
        env.two("phi2i", BK->inv(J.compositor(rhoV2, fi)));
        env.two("zei", BK->inv(fr.jp.zeta(V.unit).at(f)));
        env.two("rhs0", P.runit_nat(J.on_1(f)));
        return script_failure(*BK, "def13_rho", env);
      }));
  laws.back().script = "def13_rho";

  laws.push_back(law_over_cells(
      vctx, "freyd.compat.alpha-first", anchor13, 1,
      [fr, P, V, J, PV, BK, vctx](const std::vector<OneCell>& c,
                                  const std::vector<TwoCell>&,
                                  Rng& rng) -> std::optional<json> {
        const OneCell& f = c[0];
        Obj b = vctx.sampler->obj(rng);
        Obj cc = vctx.sampler->obj(rng);
        Obj bc = V.ten_obj(b, cc);
        OneCell alphaV = V.assoc(f.src, b, cc).fwd;
        OneCell alphaV2 = V.assoc(f.dst, b, cc).fwd;
        OneCell f_bc = V.ten_1(f, V.B->id1(bc));
        OneCell fb_c = V.ten_1(V.ten_1(f, V.B->id1(b)), V.B->id1(cc));
        OneCell fb = V.ten_1(f, V.B->id1(b));
        Env env;
        env.one("alpha", P.assoc1(f.src, b, cc));
        env.one("alpha2", P.assoc1(f.dst, b, cc));
        env.two("ze_bc", fr.jp.zeta(bc).at(f));
        env.two("phi1", J.compositor(f_bc, alphaV));
        env.two("jnat", J.on_2(PV.assoc_nat_l(f, b, cc)));
        env.two("phi2i", BK->inv(J.compositor(alphaV2, fb_c)));
        env.two("ze_ci", BK->inv(fr.jp.zeta(cc).at(fb)));
        env.two("ze_bw",
                P.bin.act_r(cc).on_2(BK->inv(fr.jp.zeta(b).at(f))));
        env.two("natl", P.assoc_nat_l(J.on_1(f), b, cc));
        return script_failure(*BK, "def13_alpha_first", env);
      }));
  laws.back().script = "def13_alpha_first";

  laws.push_back(law_over_cells(
      vctx, "freyd.compat.alpha-middle", anchor13, 1,
      [fr, P, V, J, PV, BK, vctx](const std::vector<OneCell>& c,
                                  const std::vector<TwoCell>&,
                                  Rng& rng) -> std::optional<json> {
        const OneCell& g = c[0];
        Obj a = vctx.sampler->obj(rng);
        Obj cc = vctx.sampler->obj(rng);
        OneCell alphaV = V.assoc(a, g.src, cc).fwd;
        OneCell alphaV2 = V.assoc(a, g.dst, cc).fwd;
        OneCell gc = V.ten_1(g, V.B->id1(cc));
        OneCell a_gc = V.ten_1(V.B->id1(a), gc);
        OneCell ag = V.ten_1(V.B->id1(a), g);
        OneCell ag_c = V.ten_1(ag, V.B->id1(cc));
        Env env;
        env.one("alpha", P.assoc1(a, g.src, cc));
        env.one("alpha2", P.assoc1(a, g.dst, cc));
        env.two("ze_cw", P.bin.act_l(a).on_2(fr.jp.zeta(cc).at(g)));
        env.two("th_gc", fr.jp.theta(a).at(gc));
        env.two("phi1", J.compositor(a_gc, alphaV));
        env.two("jnat", J.on_2(PV.assoc_nat_m(a, g, cc)));
        env.two("phi2i", BK->inv(J.compositor(alphaV2, ag_c)));
        env.two("ze_ci2", BK->inv(fr.jp.zeta(cc).at(ag)));
        env.two("th_gw",
                P.bin.act_r(cc).on_2(BK->inv(fr.jp.theta(a).at(g))));
        env.two("natm", P.assoc_nat_m(a, J.on_1(g), cc));
        return script_failure(*BK, "def13_alpha_middle", env);
      }));
  laws.back().script = "def13_alpha_middle";

  laws.push_back(law_over_cells(
      vctx, "freyd.compat.alpha-last", anchor13, 1,
      [fr, P, V, J, PV, BK, vctx](const std::vector<OneCell>& c,
                                  const std::vector<TwoCell>&,
                                  Rng& rng) -> std::optional<json> {
        const OneCell& h = c[0];
        Obj a = vctx.sampler->obj(rng);
        Obj b = vctx.sampler->obj(rng);
        Obj ab = V.ten_obj(a, b);
        OneCell alphaV = V.assoc(a, b, h.src).fwd;
        OneCell alphaV2 = V.assoc(a, b, h.dst).fwd;
        OneCell bh = V.ten_1(V.B->id1(b), h);
        OneCell a_bh = V.ten_1(V.B->id1(a), bh);
        OneCell ab_h = V.ten_1(V.B->id1(ab), h);
        Env env;
        env.one("alpha", P.assoc1(a, b, h.src));
        env.one("alpha2", P.assoc1(a, b, h.dst));
        env.two("th_bw", P.bin.act_l(a).on_2(fr.jp.theta(b).at(h)));
        env.two("th_a", fr.jp.theta(a).at(bh));
        env.two("phi1", J.compositor(a_bh, alphaV));
        env.two("jnat", J.on_2(PV.assoc_nat_r(a, b, h)));
        env.two("phi2i", BK->inv(J.compositor(alphaV2, ab_h)));
        env.two("th_abi", BK->inv(fr.jp.theta(ab).at(h)));
        env.two("natr", P.assoc_nat_r(a, b, J.on_1(h)));
        return script_failure(*BK, "def13_alpha_last", env);
      }));
  laws.back().script = "def13_alpha_last";

  // compatibility pastings for the structural modifications (Def. 13)
  laws.push_back(law_over_objs(
      vctx, "freyd.compat.l", anchor13, 2,
      [fr, P, V, J, BK](const std::vector<Obj>& o) -> std::optional<json> {
        const Obj &a = o[0], &b = o[1];
        OneCell lamV = V.lunit(a).fwd;
        OneCell lamAB = V.lunit(V.ten_obj(a, b)).fwd;
        OneCell alphaV = V.assoc(V.unit, a, b).fwd;
        Env env;
        env.two("ze_lam", fr.jp.zeta(b).at(lamV));
        env.two("jlun", J.on_2(V.lun(a, b)));
        env.two("phi2i", BK->inv(J.compositor(lamAB, alphaV)));
        env.two("plun", P.lun(a, b));
        return script_failure(*BK, "def13_l", env);
      }));
  laws.back().script = "def13_l";

  laws.push_back(law_over_objs(
      vctx, "freyd.compat.r", anchor13, 2,
      [fr, P, V, J, BK](const std::vector<Obj>& o) -> std::optional<json> {
        const Obj &a = o[0], &b = o[1];
        OneCell rhoV = V.runit(b).fwd;
        OneCell a_rho = V.ten_1(V.B->id1(a), rhoV);
        OneCell alphaV = V.assoc(a, b, V.unit).fwd;
        Env env;
        env.one("alpha2", P.assoc1(a, b, V.unit));
        env.two("jrun", J.on_2(V.run(a, b)));
        env.two("phi2i", BK->inv(J.compositor(a_rho, alphaV)));
        env.two("th_rhoi", BK->inv(fr.jp.theta(a).at(rhoV)));
        env.two("prun", P.run(a, b));
        return script_failure(*BK, "def13_r", env);
      }));
  laws.back().script = "def13_r";

  laws.push_back(law_over_objs(
      vctx, "freyd.compat.m", anchor13, 2,
      [fr, P, V, J, BK](const std::vector<Obj>& o) -> std::optional<json> {
        const Obj &a = o[0], &b = o[1];
        OneCell lamV = V.lunit(b).fwd;
        OneCell rhoV = V.runit(a).fwd;
        OneCell a_lam = V.ten_1(V.B->id1(a), lamV);
        OneCell alphaV = V.assoc(a, V.unit, b).fwd;
        Env env;
        env.one("alpha", P.assoc1(a, V.unit, b));
        env.two("th_lam", fr.jp.theta(a).at(lamV));
        env.two("phi1", J.compositor(a_lam, alphaV));
        env.two("jmid", J.on_2(V.mid(a, b)));
        env.two("ze_rhoi", BK->inv(fr.jp.zeta(b).at(rhoV)));
        env.two("pmid", P.mid(a, b));
        return script_failure(*BK, "def13_m", env);
      }));
  laws.back().script = "def13_m";

  laws.push_back(law_over_objs(
      vctx, "freyd.compat.p", anchor13, 4,
      [fr, P, V, J, BK](const std::vector<Obj>& o) -> std::optional<json> {
        const Obj &a = o[0], &b = o[1], &cc = o[2], &d = o[3];
        const Bicategory& BV = *V.B;
        OneCell alBCD = V.assoc(b, cc, d).fwd;
        OneCell alABC = V.assoc(a, b, cc).fwd;
        OneCell al_mid = V.assoc(a, V.ten_obj(b, cc), d).fwd;
        OneCell alpha_d = V.ten_1(alABC, BV.id1(d));
        OneCell a_alpha = V.ten_1(BV.id1(a), alBCD);
        OneCell inner = BV.compose1(al_mid, alpha_d);
        Env env;
        env.one("aal", P.bin.wl(a, J.on_1(alBCD)));
        env.one("amid", P.assoc1(a, V.ten_obj(b, cc), d));
        env.one("jj", J.on_1(inner));
        env.two("ze_al", fr.jp.zeta(d).at(alABC));
        env.two("phi1", J.compositor(al_mid, alpha_d));
        env.two("th_al", fr.jp.theta(a).at(alBCD));
        env.two("phi2", J.compositor(a_alpha, inner));
        env.two("jpent", J.on_2(V.pent(a, b, cc, d)));
        env.two("phi3i",
                BK->inv(J.compositor(V.assoc(a, b, V.ten_obj(cc, d)).fwd,
                                     V.assoc(V.ten_obj(a, b), cc, d).fwd)));
        env.two("ppent", P.pent(a, b, cc, d));
        return script_failure(*BK, "def13_p", env);
      }));
  laws.back().script = "def13_p";

  // Def. 14 axiom 1: the factoring picks the premonoidal witnesses on the
  // structural 1-cells.
  laws.push_back(law_over_cells(
      bctx, "freyd.axiom1", anchor14, 1,
      [fr, P, V, vctx](const std::vector<OneCell>& c,
                       const std::vector<TwoCell>&,
                       Rng& rng) -> std::optional<json> {
        const OneCell& g = c[0];
        Obj a = vctx.sampler->obj(rng);
        Obj b = vctx.sampler->obj(rng);
        Obj cc = vctx.sampler->obj(rng);
        struct Case {
          const char* name;
          OneCell value;
          CentralOneCell chosen;
        };
        std::vector<Case> cases = {
            {"lambda", V.lunit(a).fwd, P.lunit_central(a)},
            {"rho", V.runit(a).fwd, P.runit_central(a)},
            {"alpha", V.assoc(a, b, cc).fwd, P.assoc_central(a, b, cc)},
        };
        for (const Case& k : cases) {
          CentralOneCell via_j = fr.central(k.value);
          if (via_j.cell != k.chosen.cell)
            return law_failure({{"cell", k.name}, {"which", "underlying"}});
          if (via_j.lc(g) != k.chosen.lc(g))
            return law_failure({{"cell", k.name}, {"which", "lc"}});
          if (via_j.rc(g) != k.chosen.rc(g))
            return law_failure({{"cell", k.name}, {"which", "rc"}});
        }
        return std::nullopt;
      }));

  // Def. 14 axiom 2: compatibility of the chosen lc with whiskering.
  laws.push_back(law_over_cells(
      bctx, "freyd.axiom2", "Def. 14 axiom 2 compatibility pasting", 1,
      [fr, P, BK, vctx](const std::vector<OneCell>& c,
                        const std::vector<TwoCell>&,
                        Rng& rng) -> std::optional<json> {
        const OneCell& g = c[0];
        OneCell fv = vctx.sampler->chain(rng, 1)[0];
        Obj x = vctx.sampler->obj(rng);
        CentralOneCell jf = fr.central(fv);
        OneCell jf1 = jf.cell;
        Obj a = jf1.src, a2 = jf1.dst, b = g.src, b2 = g.dst;
        const BinoidalStructure& bin = P.bin;
        Pseudofunctor actX = bin.act_r(x);
        Env env;
        env.one("top", bin.wr(jf1, bin.ten_obj(b2, x)));
        env.one("ax", P.assoc1(a, b, x));
        env.one("ax2", P.assoc1(a, b2, x));
        env.one("ay", P.assoc1(a2, b, x));
        env.one("az", P.assoc1(a2, b2, x));
        env.one("gx_w", actX.on_1(bin.wl(a, g)));
        env.one("fb2x", actX.on_1(bin.wr(jf1, b2)));
        env.one("g2x", actX.on_1(bin.wl(a2, g)));
        env.one("fbx", actX.on_1(bin.wr(jf1, b)));
        env.one("a2gx", bin.wl(a2, bin.wr(g, x)));
        env.one("agx", bin.wl(a, bin.wr(g, x)));
        env.one("fbxr", bin.wr(jf1, bin.ten_obj(b, x)));
        env.two("lcw", BK->vchain({
                           actX.compositor(bin.wr(jf1, b2), bin.wl(a, g)),
                           actX.on_2(jf.lc(g)),
                           BK->inv(actX.compositor(bin.wl(a2, g),
                                                   bin.wr(jf1, b))),
                       }));
        env.two("lcgx", jf.lc(bin.wr(g, x)));
        env.two("natm_a", P.assoc_nat_m(a, g, x));
        env.two("natm_a2", P.assoc_nat_m(a2, g, x));
        env.two("natl_b", P.assoc_nat_l(jf1, b, x));
        env.two("natl_b2", P.assoc_nat_l(jf1, b2, x));
        return script_failure(*BK, "freyd_axiom2", env);
      }));
  laws.back().script = "freyd_axiom2";

  // Def. 14 axiom 3: the three displayed composites agree pairwise.
  for (const auto& [script, tag] :
       {std::pair<const char*, const char*>{"freyd_axiom3_rm",
                                            "rc-vs-interchange"},
        {"freyd_axiom3_ml", "interchange-vs-lc"}}) {
    laws.push_back(law_over_cells(
        vctx, std::string("freyd.axiom3.") + tag,
        "determined by the interchange law in V", 2,
        [fr, P, V, script](const std::vector<OneCell>& c,
                           const std::vector<TwoCell>&,
                           Rng&) -> std::optional<json> {
          const OneCell &x = c[0], &y = c[1];
          CentralOneCell jx = fr.central(x);
          CentralOneCell jy = fr.central(y);
          Env env;
          env.two("rc", jy.rc(jx.cell));
          env.two("lc", jx.lc(jy.cell));
          env.two("ze1", fr.jp.zeta(y.dst).at(x));
          env.two("th1", fr.jp.theta(x.src).at(y));
          env.two("th2", fr.jp.theta(x.dst).at(y));
          env.two("ze2", fr.jp.zeta(y.src).at(x));
          env.two("iso1", value_interchange_upper(fr, x, y));
          env.two("iso2", value_interchange_middle(fr, x, y));
          return script_failure(*P.bin.B, script, env);
        }));
    laws.back().script = script;
  }

  // factoring through the centre: witnesses are pseudonatural, and the
  // compositor/unit of J are central 2-cells
  {
    auto cl = central_1cell_laws(
        bctx, P.bin,
        [fr, vctx](Rng& rng) {
          return fr.central(vctx.sampler->chain(rng, 1)[0]);
        },
        "freyd-value", anchor14);
    laws.insert(laws.end(), cl.begin(), cl.end());
  }
  laws.push_back(law_over_cells(
      bctx, "freyd.jz-functorial",
      "the compositor and unit of J are central 2-cells", 1,
      [fr, P, BK, vctx](const std::vector<OneCell>& c,
                        const std::vector<TwoCell>&,
                        Rng& rng) -> std::optional<json> {
        auto chain = vctx.sampler->chain(rng, 2);
        CentralOneCell jf = fr.central(chain[0]);
        CentralOneCell jg = fr.central(chain[1]);
        CentralOneCell jgf =
            fr.central(vctx.sampler->bicat()->compose1(chain[1], chain[0]));
        TwoCell phi = fr.jp.J.compositor(chain[1], chain[0]);
        if (auto bad = central_2cell_failure(
                P.bin, central_compose(P.bin, jg, jf), jgf, phi, c[0].src,
                c[0]))
          return law_failure({{"witness", "compositor"}, {"detail", *bad}});
        Obj a = chain[0].src;
        TwoCell unit = fr.jp.J.unit(a);
        CentralOneCell jid = fr.central(vctx.sampler->bicat()->id1(a));
        if (auto bad = central_2cell_failure(P.bin, central_id(P.bin, a),
                                             jid, unit, c[0].src, c[0]))
          return law_failure({{"witness", "unit"}, {"detail", *bad}});
        return std::nullopt;
      }));

  // reported separately: icon components are central 2-cells
  laws.push_back(law_over_cells(
      bctx, "freyd.info.icon-centrality",
      "icon components checked for centrality (recorded, Def. 14 open point)",
      1,
      [fr, P, vctx](const std::vector<OneCell>& c,
                    const std::vector<TwoCell>&,
                    Rng& rng) -> std::optional<json> {
        OneCell fv = vctx.sampler->chain(rng, 1)[0];
        Obj a = vctx.sampler->obj(rng);
        CentralOneCell jf = fr.central(fv);
        // theta^A_f : A |> J f => J(A & f)
        TwoCell th = fr.jp.theta(a).at(fv);
        CentralOneCell src = centre_whisker(P, a, jf, Side::Left);
        CentralOneCell dst = fr.central(fr.jp.V.ten_1(
            fr.jp.V.B->id1(a), fv));
        if (auto bad =
                central_2cell_failure(P.bin, src, dst, th, c[0].src, c[0]))
          return law_failure({{"icon", "theta"}, {"detail", *bad}});
        TwoCell ze = fr.jp.zeta(a).at(fv);
        CentralOneCell src2 = centre_whisker(P, a, jf, Side::Right);
        CentralOneCell dst2 = fr.central(fr.jp.V.ten_1(
            fv, fr.jp.V.B->id1(a)));
        if (auto bad = central_2cell_failure(P.bin, src2, dst2, ze, c[0].src,
                                             c[0]))
          return law_failure({{"icon", "zeta"}, {"detail", *bad}});
        return std::nullopt;
      }));

  return laws;
}

}  // namespace bicheck
