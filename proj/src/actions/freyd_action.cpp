#include "bicheck/actions/freyd_action.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/structures/scripts.hpp"

namespace bicheck {

TwoCell nu(const FreydAction& fa, const OneCell& f, const OneCell& g) {
  const Bicategory& B = *fa.left.B;
  return B.vcomp(B.inv(fa.theta(f, g)), fa.zeta(f, g));
}

TwoCell nu_at_obj(const FreydAction& fa, const OneCell& f, const Obj& b) {
  const Bicategory& B = *fa.left.B;
  OneCell idb = fa.V.B->id1(b);
  return B.vchain({
      nu(fa, f, idb),
      fa.left.act_2(fa.V.B->id2(f), B.inv(fa.J.unit(b))),
  });
}

namespace {

// Pseudonatural view of kappa with the middle (computation) argument open.
PseudonatTrans kappa_mid_psnat(const FreydAction& fa, const Obj& x,
                               const Obj& z) {
  PseudonatTrans s;
  s.F = compose_psf(ract_fix_obj(fa.right, z), lact_fix_obj(fa.left, x));
  s.G = compose_psf(lact_fix_obj(fa.left, x), ract_fix_obj(fa.right, z));
  s.label = "kappa";
  s.at = [fa, x, z](const Obj& b) { return fa.kappa(x, b, z).fwd; };
  s.nat = [fa, x, z](const OneCell& b) {
    return fa.kappa_nat(fa.V.B->id1(x), b, fa.V.B->id1(z));
  };
  return s;
}

PseudonatTrans fa_lunit_psnat(const FreydAction& fa) {
  return lact_lunit_psnat(fa.left);
}
PseudonatTrans fa_runit_psnat(const FreydAction& fa) {
  return ract_runit_psnat(fa.right);
}

// A |> J(alpha_{B,C,D}) => A <| alpha_{B,C,D}, through nu at the identity.
TwoCell lconv_to_ract(const FreydAction& fa, const Obj& a,
                      const OneCell& u) {
  const Bicategory& B = *fa.left.B;
  OneCell ida = fa.V.B->id1(a);
  return B.vchain({
      B.inv(nu(fa, ida, u)),
      fa.right.act_2(B.inv(fa.J.unit(a)), fa.V.B->id2(u)),
  });
}

}  // namespace

std::vector<LawRun> freyd_action_laws(const CheckCtx& vctx,
                                      const CheckCtx& bctx,
                                      const FreydAction& fa) {
  std::vector<LawRun> laws;
  const MonoidalStructure V = fa.V;
  const Pseudofunctor J = fa.J;
  const LeftAction L = fa.left;
  const RightAction R = fa.right;
  Bicategory::Ptr BK = L.B;
  Bicategory::Ptr BV = V.B;
  const std::string anchor20 = "left extension of the canonical action";
  const std::string anchor22 = "A Freyd action consists of";
  const std::string anchorA = "we write nu for the composite";

  // strict preservation of the structural components by both extensions,
  // and kappa's 1-cells are the J-images of the associator
  laws.push_back(law_over_objs(
      vctx, "freyd-action.strict-structural", anchor22, 3,
      [fa, V, J, L, R](const std::vector<Obj>& o) -> std::optional<json> {
        if (L.lunit(o[0]).fwd != J.on_1(V.lunit(o[0]).fwd))
          return law_failure({{"cell", "left unitor"}});
        if (R.runit(o[0]).fwd != J.on_1(V.runit(o[0]).fwd))
          return law_failure({{"cell", "right unitor"}});
        OneCell ja = J.on_1(V.assoc(o[0], o[1], o[2]).fwd);
        if (L.assoc(o[0], o[1], o[2]).fwd != ja)
          return law_failure({{"cell", "left associator"}});
        if (R.assoc(o[0], o[1], o[2]).fwd != ja)
          return law_failure({{"cell", "right associator"}});
        if (fa.kappa(o[0], o[1], o[2]).fwd != ja)
          return law_failure({{"cell", "kappa"}});
        return std::nullopt;
      }));

  // kappa is a pseudonatural adjoint equivalence
  laws.push_back(law_over_cells(
      bctx, "freyd-action.kappa-pseudonatural",
      "pseudonatural adjoint equivalence kappa", 2,
      [fa, vctx](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
                 Rng& rng) -> std::optional<json> {
        Obj x = vctx.sampler->obj(rng);
        Obj z = vctx.sampler->obj(rng);
        if (auto bad = adjoint_equivalence_failure(fa.kappa(x, c[0].src, z)))
          return bad;
        PseudonatTrans s = kappa_mid_psnat(fa, x, z);
        if (auto bad = psnat_natural2_at(s, t[0])) return bad;
        if (auto bad = psnat_unit_at(s, c[0].src)) return bad;
        return psnat_composition_at(s, c[1], c[0]);
      }));

  // nu is invertible and collapses to unit cells on identities
  laws.push_back(law_over_cells(
      vctx, "freyd-action.nu", anchorA, 2,
      [fa, L, R, J, BK, BV](const std::vector<OneCell>& c,
                            const std::vector<TwoCell>&,
                            Rng&) -> std::optional<json> {
        TwoCell n = nu(fa, c[0], c[1]);
        auto inv = BK->invert(n);
        if (!inv) return law_failure({{"not_invertible", "nu"}});
        if (BK->vcomp(*inv, n) != BK->id2(n.src))
          return law_failure({{"inverse_law", "nu"}});
        // nu at identities equals the composite of unit cells
        Obj x = c[0].src, y = c[1].src;
        OneCell idx = BV->id1(x), idy = BV->id1(y);
        TwoCell lhs = nu(fa, idx, idy);
        TwoCell rhs = BK->vchain({
            R.act_2(BK->inv(J.unit(x)), BV->id2(idy)),
            BK->inv(R.unit(x, y)),
            L.unit(x, y),
            L.act_2(BV->id2(idx), J.unit(y)),
        });
        return expect_equal(*BK, lhs, rhs);
      }));

  // ---- the five compatibility equations for the left extension ----
  laws.push_back(law_over_cells(
      vctx, "freyd-action.left-extension", anchor20, 3,
      [fa, V, J, L, BK, BV](const std::vector<OneCell>& c,
                            const std::vector<TwoCell>&,
                            Rng& rng) -> std::optional<json> {
        const Bicategory& B = *BK;
        const OneCell &f = c[0], &g = c[1], &cc = c[2];
        // (i) lunit naturality transported through theta, at g
        {
          OneCell lamV = V.lunit(g.src).fwd;
          OneCell lamV2 = V.lunit(g.dst).fwd;
          OneCell ig = V.ten_1(BV->id1(V.unit), g);
          TwoCell lhs = B.vchain({
              J.compositor(g, lamV),
              J.on_2(V.lunit_nat(g)),
              B.inv(J.compositor(lamV2, ig)),
              B.whisker_l(J.on_1(lamV2),
                          B.inv(fa.theta(BV->id1(V.unit), g))),
          });
          if (auto bad = expect_equal(B, lhs, L.lunit_nat(J.on_1(g))))
            return law_failure({{"clause", "lunit"}, {"detail", *bad}});
        }
        // (ii) associator naturality transported through theta, at (f,g,c)
        {
          OneCell alphaV = V.assoc(f.src, g.src, cc.src).fwd;
          OneCell alphaV2 = V.assoc(f.dst, g.dst, cc.dst).fwd;
          OneCell fg = V.ten_1(f, g);
          OneCell f_gc = V.ten_1(f, V.ten_1(g, cc));
          OneCell fg_c = V.ten_1(fg, cc);
          TwoCell lhs = B.vchain({
              J.compositor(f_gc, alphaV),
              J.on_2(V.assoc_nat(f, g, cc)),
              B.inv(J.compositor(alphaV2, fg_c)),
              B.whisker_l(J.on_1(alphaV2), B.inv(fa.theta(fg, cc))),
          });
          TwoCell rhs = B.vchain({
              B.whisker_r(B.vchain({
                              B.inv(fa.theta(f, V.ten_1(g, cc))),
                              L.act_2(BV->id2(f), B.inv(fa.theta(g, cc))),
                          }),
                          J.on_1(alphaV)),
              L.assoc_nat(f, g, J.on_1(cc)),
          });
          if (auto bad = expect_equal(B, lhs, rhs))
            return law_failure({{"clause", "assoc"}, {"detail", *bad}});
        }
        Obj a = f.src, b = g.src;
        Obj c3 = cc.src, d = cc.dst;
        (void)rng;
        // (iii) lun compatibility
        {
          OneCell lamV = V.lunit(a).fwd;
          TwoCell conv = B.vchain({
              L.act_2(BV->id2(lamV), J.unit(b)),
              fa.theta(lamV, BV->id1(b)),
          });
          TwoCell lhs = B.vchain({
              conv,
              J.on_2(V.lun(a, b)),
              B.inv(J.compositor(V.lunit(V.ten_obj(a, b)).fwd,
                                 V.assoc(V.unit, a, b).fwd)),
          });
          if (auto bad = expect_equal(B, lhs, L.lun(a, b)))
            return law_failure({{"clause", "lun"}, {"detail", *bad}});
        }
        // (iv) mid compatibility
        {
          OneCell lamV = V.lunit(b).fwd;
          OneCell rhoV = V.runit(a).fwd;
          OneCell a_lam = V.ten_1(BV->id1(a), lamV);
          OneCell alphaV = V.assoc(a, V.unit, b).fwd;
          TwoCell conv_rho = B.vchain({
              L.act_2(BV->id2(rhoV), J.unit(b)),
              fa.theta(rhoV, BV->id1(b)),
          });
          TwoCell lhs = B.vchain({
              B.whisker_r(fa.theta(BV->id1(a), lamV), J.on_1(alphaV)),
              J.compositor(a_lam, alphaV),
              J.on_2(V.mid(a, b)),
              B.inv(conv_rho),
          });
          if (auto bad = expect_equal(B, lhs, L.mid(a, b)))
            return law_failure({{"clause", "mid"}, {"detail", *bad}});
        }
        // (v) pent compatibility
        {
          OneCell alBCD = V.assoc(b, c3, d).fwd;
          OneCell alABC = V.assoc(a, b, c3).fwd;
          OneCell al_mid = V.assoc(a, V.ten_obj(b, c3), d).fwd;
          OneCell alpha_d = V.ten_1(alABC, BV->id1(d));
          OneCell inner = BV->compose1(al_mid, alpha_d);
          OneCell a_alpha = V.ten_1(BV->id1(a), alBCD);
          OneCell x_al = L.act_1(BV->id1(a), J.on_1(alBCD));
          TwoCell conv_d = B.vchain({
              L.act_2(BV->id2(alABC), J.unit(d)),
              fa.theta(alABC, BV->id1(d)),
          });
          TwoCell lhs = B.vchain({
              B.whisker_l(x_al, B.whisker_l(J.on_1(al_mid), conv_d)),
              B.whisker_l(x_al, J.compositor(al_mid, alpha_d)),
              B.whisker_r(fa.theta(BV->id1(a), alBCD), J.on_1(inner)),
              J.compositor(a_alpha, inner),
              J.on_2(V.pent(a, b, c3, d)),
              B.inv(J.compositor(V.assoc(a, b, V.ten_obj(c3, d)).fwd,
                                 V.assoc(V.ten_obj(a, b), c3, d).fwd)),
          });
          if (auto bad = expect_equal(B, lhs, L.pent(a, b, c3, d)))
            return law_failure({{"clause", "pent"}, {"detail", *bad}});
        }
        return std::nullopt;
      }));

  // ---- the five compatibility equations for the right extension ----
  laws.push_back(law_over_cells(
      vctx, "freyd-action.right-extension", anchor20, 3,
      [fa, V, J, R, BK, BV](const std::vector<OneCell>& c,
                            const std::vector<TwoCell>&,
                            Rng&) -> std::optional<json> {
        const Bicategory& B = *BK;
        const OneCell &f = c[0], &g = c[1], &h = c[2];
        // (i) runit naturality transported through zeta
        {
          OneCell rhoV = V.runit(f.src).fwd;
          OneCell rhoV2 = V.runit(f.dst).fwd;
          OneCell fi = V.ten_1(f, BV->id1(V.unit));
          TwoCell lhs = B.vchain({
              J.compositor(f, rhoV),
              J.on_2(V.runit_nat(f)),
              B.inv(J.compositor(rhoV2, fi)),
              B.whisker_l(J.on_1(rhoV2),
                          B.inv(fa.zeta(f, BV->id1(V.unit)))),
          });
          if (auto bad = expect_equal(B, lhs, R.runit_nat(J.on_1(f))))
            return law_failure({{"clause", "runit"}, {"detail", *bad}});
        }
        // (ii) associator naturality transported through zeta
        {
          OneCell alphaV = V.assoc(f.src, g.src, h.src).fwd;
          OneCell alphaV2 = V.assoc(f.dst, g.dst, h.dst).fwd;
          OneCell gh = V.ten_1(g, h);
          OneCell f_gh = V.ten_1(f, gh);
          OneCell fg_h = V.ten_1(V.ten_1(f, g), h);
          TwoCell lhs = B.vchain({
              J.compositor(f_gh, alphaV),
              J.on_2(V.assoc_nat(f, g, h)),
              B.inv(J.compositor(alphaV2, fg_h)),
              B.whisker_l(J.on_1(alphaV2), B.inv(fa.zeta(V.ten_1(f, g), h))),
              B.whisker_l(J.on_1(alphaV2),
                          R.act_2(B.inv(fa.zeta(f, g)), BV->id2(h))),
          });
          TwoCell rhs = B.vchain({
              B.whisker_r(B.inv(fa.zeta(f, gh)), J.on_1(alphaV)),
              R.assoc_nat(J.on_1(f), g, h),
          });
          if (auto bad = expect_equal(B, lhs, rhs))
            return law_failure({{"clause", "assoc"}, {"detail", *bad}});
        }
        Obj a = f.src, b = g.src, c3 = h.src, d = h.dst;
        // (iii) run compatibility
        {
          OneCell rhoV = V.runit(b).fwd;
          OneCell a_rho = V.ten_1(BV->id1(a), rhoV);
          OneCell alphaV = V.assoc(a, b, V.unit).fwd;
          TwoCell conv = B.vchain({
              R.act_2(J.unit(a), BV->id2(rhoV)),
              fa.zeta(BV->id1(a), rhoV),
          });
          TwoCell lhs = B.vchain({
              J.on_2(V.run(a, b)),
              B.inv(J.compositor(a_rho, alphaV)),
              B.whisker_r(B.inv(conv), J.on_1(alphaV)),
          });
          if (auto bad = expect_equal(B, lhs, R.run(a, b)))
            return law_failure({{"clause", "run"}, {"detail", *bad}});
        }
        // (iv) mid compatibility
        {
          OneCell lamV = V.lunit(b).fwd;
          OneCell rhoV = V.runit(a).fwd;
          OneCell a_lam = V.ten_1(BV->id1(a), lamV);
          OneCell alphaV = V.assoc(a, V.unit, b).fwd;
          TwoCell conv_lam = B.vchain({
              R.act_2(J.unit(a), BV->id2(lamV)),
              fa.zeta(BV->id1(a), lamV),
          });
          TwoCell lhs = B.vchain({
              B.whisker_r(conv_lam, J.on_1(alphaV)),
              J.compositor(a_lam, alphaV),
              J.on_2(V.mid(a, b)),
              B.inv(fa.zeta(rhoV, BV->id1(b))),
          });
          if (auto bad = expect_equal(B, lhs, R.mid(a, b)))
            return law_failure({{"clause", "mid"}, {"detail", *bad}});
        }
        // (v) pent compatibility
        {
          OneCell alBCD = V.assoc(b, c3, d).fwd;
          OneCell alABC = V.assoc(a, b, c3).fwd;
          OneCell al_mid = V.assoc(a, V.ten_obj(b, c3), d).fwd;
          OneCell alpha_d = V.ten_1(alABC, BV->id1(d));
          OneCell inner = BV->compose1(al_mid, alpha_d);
          OneCell a_alpha = V.ten_1(BV->id1(a), alBCD);
          OneCell a_al = R.act_1(BK->id1(a), alBCD);
          TwoCell conv = B.vchain({
              R.act_2(J.unit(a), BV->id2(alBCD)),
              fa.zeta(BV->id1(a), alBCD),
          });
          TwoCell lhs = B.vchain({
              B.whisker_l(a_al,
                          B.whisker_l(J.on_1(al_mid),
                                      fa.zeta(alABC, BV->id1(d)))),
              B.whisker_l(a_al, J.compositor(al_mid, alpha_d)),
              B.whisker_r(conv, J.on_1(inner)),
              J.compositor(a_alpha, inner),
              J.on_2(V.pent(a, b, c3, d)),
              B.inv(J.compositor(V.assoc(a, b, V.ten_obj(c3, d)).fwd,
                                 V.assoc(V.ten_obj(a, b), c3, d).fwd)),
          });
          if (auto bad = expect_equal(B, lhs, R.pent(a, b, c3, d)))
            return law_failure({{"clause", "pent"}, {"detail", *bad}});
        }
        return std::nullopt;
      }));

  // ---- Def. 22 main equation ----
  laws.push_back(law_over_cells(
      vctx, "freyd-action.kappa-compat",
      "subject to the equation below and additional axioms", 3,
      [fa, V, J, L, R, BK, BV](const std::vector<OneCell>& c,
                               const std::vector<TwoCell>&,
                               Rng&) -> std::optional<json> {
        const Bicategory& B = *BK;
        const OneCell &f = c[0], &g = c[1], &h = c[2];
        OneCell alphaV = V.assoc(f.src, g.src, h.src).fwd;
        OneCell alphaV2 = V.assoc(f.dst, g.dst, h.dst).fwd;
        OneCell gh = V.ten_1(g, h);
        OneCell f_gh = V.ten_1(f, gh);
        OneCell fg = V.ten_1(f, g);
        OneCell fg_h = V.ten_1(fg, h);
        Env env;
        env.two("lhs_theta", B.whisker_r(B.inv(fa.theta(f, gh)),
                                         J.on_1(alphaV)));
        env.two("lhs_zeta",
                B.whisker_r(L.act_2(BV->id2(f), B.inv(fa.zeta(g, h))),
                            J.on_1(alphaV)));
        env.two("kappa_nat", fa.kappa_nat(f, J.on_1(g), h));
        env.two("jalpha", B.vchain({
                              J.compositor(f_gh, alphaV),
                              J.on_2(V.assoc_nat(f, g, h)),
                              B.inv(J.compositor(alphaV2, fg_h)),
                          }));
        env.two("rhs_zeta", B.whisker_l(J.on_1(alphaV2),
                                        B.inv(fa.zeta(fg, h))));
        env.two("rhs_theta",
                B.whisker_l(J.on_1(alphaV2),
                            R.act_2(B.inv(fa.theta(f, g)), BV->id2(h))));
        return script_failure(B, "def22_kappa", env);
      }));
  laws.back().script = "def22_kappa";

  // ---- the four appendix axioms, as exact modification squares ----
  auto square_law = [&](const std::string& id, const std::string& script,
                        std::function<std::optional<json>(
                            const OneCell&, Rng&)> body) {
    laws.push_back(law_over_cells(
        bctx, id, anchorA, 1,
        [body](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
               Rng& rng) { return body(c[0], rng); }));
    laws.back().script = script;
  };

  auto run_square_script = [BK](const char* script, const PseudonatTrans& s,
                                const PseudonatTrans& t, const TwoCell& gamA,
                                const TwoCell& gamB,
                                const OneCell& b) -> std::optional<json> {
    Env env;
    env.one("Fb", s.F.on_1(b));
    env.one("Gb", s.G.on_1(b));
    env.two("gamA", gamA);
    env.two("gamB", gamB);
    env.two("sig", s.nat(b));
    env.two("tau", t.nat(b));
    return script_failure(*BK, script, env);
  };

  square_law(
      "freyd-action.appendix-l", "appa_l",
      [fa, V, J, BK, vctx, run_square_script](
          const OneCell& a, Rng& rng) -> std::optional<json> {
        const Bicategory& B = *BK;
        Obj bo = vctx.sampler->obj(rng);
        PseudonatTrans s = whisker_psf_psnat(ract_fix_obj(fa.right, bo),
                                             fa_lunit_psnat(fa));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(fa_lunit_psnat(fa), ract_fix_obj(fa.right, bo)),
            kappa_mid_psnat(fa, V.unit, bo));
        auto gamma = [fa, V, J, BK, bo](const Obj& x) {
          const Bicategory& B2 = *BK;
          OneCell lamV = V.lunit(x).fwd;
          return B2.vchain({
              fa.zeta(lamV, V.B->id1(bo)),
              J.on_2(V.lun(x, bo)),
              B2.inv(J.compositor(V.lunit(V.ten_obj(x, bo)).fwd,
                                  V.assoc(V.unit, x, bo).fwd)),
          });
        };
        (void)B;
        return run_square_script("appa_l", s, t, gamma(a.src), gamma(a.dst),
                                 a);
      });

  square_law(
      "freyd-action.appendix-r", "appa_r",
      [fa, V, J, BK, vctx, run_square_script](
          const OneCell& b, Rng& rng) -> std::optional<json> {
        Obj ao = vctx.sampler->obj(rng);
        PseudonatTrans s = whisker_psnat_psf(fa_runit_psnat(fa),
                                             lact_fix_obj(fa.left, ao));
        PseudonatTrans t = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(fa.left, ao), fa_runit_psnat(fa)),
            kappa_mid_psnat(fa, ao, V.unit));
        auto gamma = [fa, V, J, BK, ao](const Obj& x) {
          const Bicategory& B2 = *BK;
          OneCell rhoV = V.runit(x).fwd;
          OneCell a_rho = V.ten_1(V.B->id1(ao), rhoV);
          OneCell alphaV = V.assoc(ao, x, V.unit).fwd;
          return B2.vchain({
              J.on_2(V.run(ao, x)),
              B2.inv(J.compositor(a_rho, alphaV)),
              B2.whisker_r(B2.inv(fa.theta(V.B->id1(ao), rhoV)),
                           J.on_1(alphaV)),
          });
        };
        return run_square_script("appa_r", s, t, gamma(b.src), gamma(b.dst),
                                 b);
      });

  auto pent_gamma = [fa, V, J, BK](const Obj& ao, const Obj& x,
                                   const Obj& co, const Obj& dob) {
    // path components are J-images; convert the outer leg and apply the
    // right-action pentagonator
    const Bicategory& B2 = *BK;
    OneCell alphaV = V.assoc(x, co, dob).fwd;
    OneCell tail = B2.compose1(
        fa.kappa(ao, V.ten_obj(x, co), dob).fwd,
        ract_fix_obj(fa.right, dob).on_1(fa.kappa(ao, x, co).fwd));
    return B2.vchain({
        B2.whisker_r(lconv_to_ract(fa, ao, alphaV), tail),
        fa.right.pent(ao, x, co, dob),
    });
  };

  square_law(
      "freyd-action.appendix-p-middle", "appa_p_middle",
      [fa, V, vctx, run_square_script, pent_gamma](
          const OneCell& b, Rng& rng) -> std::optional<json> {
        Obj ao = vctx.sampler->obj(rng);
        Obj co = vctx.sampler->obj(rng);
        Obj dob = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(fa.left, ao),
                              ract_assoc_b_psnat(fa.right, co, dob)),
            vcomp_psnat(
                whisker_psnat_psf(kappa_mid_psnat(fa, ao, dob),
                                  ract_fix_obj(fa.right, co)),
                whisker_psf_psnat(ract_fix_obj(fa.right, dob),
                                  kappa_mid_psnat(fa, ao, co))));
        PseudonatTrans t = vcomp_psnat(
            kappa_mid_psnat(fa, ao, V.ten_obj(co, dob)),
            whisker_psnat_psf(ract_assoc_b_psnat(fa.right, co, dob),
                              lact_fix_obj(fa.left, ao)));
        return run_square_script("appa_p_middle", s, t,
                                 pent_gamma(ao, b.src, co, dob),
                                 pent_gamma(ao, b.dst, co, dob), b);
      });

  square_law(
      "freyd-action.appendix-p-third", "appa_p_third",
      [fa, V, vctx, run_square_script, pent_gamma](
          const OneCell& c, Rng& rng) -> std::optional<json> {
        Obj ao = vctx.sampler->obj(rng);
        Obj bo = vctx.sampler->obj(rng);
        Obj dob = vctx.sampler->obj(rng);
        PseudonatTrans s = vcomp_psnat(
            whisker_psf_psnat(lact_fix_obj(fa.left, ao),
                              kappa_mid_psnat(fa, bo, dob)),
            vcomp_psnat(
                whisker_psnat_psf(kappa_mid_psnat(fa, ao, dob),
                                  lact_fix_obj(fa.left, bo)),
                whisker_psf_psnat(ract_fix_obj(fa.right, dob),
                                  lact_assoc_b_psnat(fa.left, ao, bo))));
        PseudonatTrans t = vcomp_psnat(
            whisker_psnat_psf(lact_assoc_b_psnat(fa.left, ao, bo),
                              ract_fix_obj(fa.right, dob)),
            kappa_mid_psnat(fa, V.ten_obj(ao, bo), dob));
        return run_square_script("appa_p_third", s, t,
                                 pent_gamma(ao, bo, c.src, dob),
                                 pent_gamma(ao, bo, c.dst, dob), c);
      });

  return laws;
}

}  // namespace bicheck
