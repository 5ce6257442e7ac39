#include "bicheck/structures/centre.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

OneCell centre_cell(const CentralOneCell& c) {
  return OneCell{c.cell.src, c.cell.dst,
                 Value::of(CentralPayload{
                     std::make_shared<const CentralOneCell>(c)})};
}

const CentralOneCell& central_of(const OneCell& f) {
  return *f.v.as<CentralPayload>().c;
}

OneCell CentreBicat::id1(const Obj& a) const {
  return centre_cell(central_id(p_.bin, a));
}

OneCell CentreBicat::compose1(const OneCell& g, const OneCell& f) const {
  return centre_cell(central_compose(p_.bin, central_of(g), central_of(f)));
}

TwoCell CentreBicat::id2(const OneCell& f) const {
  return TwoCell{f, f, base_->id2(central_of(f).cell).v};
}

namespace {

TwoCell lift(const OneCell& src, const OneCell& dst, const TwoCell& under) {
  return TwoCell{src, dst, under.v};
}

TwoCell under_of(const TwoCell& a) {
  return TwoCell{central_of(a.src).cell, central_of(a.dst).cell, a.v};
}

}  // namespace

TwoCell CentreBicat::vcomp(const TwoCell& b, const TwoCell& a) const {
  if (a.dst != b.src) throw BoundaryMismatch("centre vertical composition");
  return lift(a.src, b.dst, base_->vcomp(under_of(b), under_of(a)));
}

TwoCell CentreBicat::whisker_l(const OneCell& h, const TwoCell& a) const {
  return lift(compose1(h, a.src), compose1(h, a.dst),
              base_->whisker_l(central_of(h).cell, under_of(a)));
}

TwoCell CentreBicat::whisker_r(const TwoCell& a, const OneCell& f) const {
  return lift(compose1(a.src, f), compose1(a.dst, f),
              base_->whisker_r(under_of(a), central_of(f).cell));
}

TwoCell CentreBicat::associator(const OneCell& h, const OneCell& g,
                                const OneCell& f) const {
  return lift(compose1(compose1(h, g), f), compose1(h, compose1(g, f)),
              base_->associator(central_of(h).cell, central_of(g).cell,
                                central_of(f).cell));
}

TwoCell CentreBicat::lunitor(const OneCell& f) const {
  return lift(compose1(id1(f.dst), f), f, base_->lunitor(central_of(f).cell));
}

TwoCell CentreBicat::runitor(const OneCell& f) const {
  return lift(compose1(f, id1(f.src)), f, base_->runitor(central_of(f).cell));
}

std::optional<TwoCell> CentreBicat::invert(const TwoCell& a) const {
  auto inv = base_->invert(under_of(a));
  if (!inv) return std::nullopt;
  return lift(a.dst, a.src, *inv);
}

std::optional<std::string> CentreBicat::validate2(const TwoCell& a) const {
  return base_->validate2(under_of(a));
}

Bicategory::Ptr centre_bicat(const PremonoidalStructure& p) {
  return std::make_shared<CentreBicat>(p);
}

TwoCell unwhisker_l(const Bicategory& B, const AdjointEquivalence& e,
                    const OneCell& u, const OneCell& v, const TwoCell& z) {
  return B.vchain({
      B.lunitor_inv(u),
      B.whisker_r(e.unit, u),
      B.associator(e.bwd, e.fwd, u),
      B.whisker_l(e.bwd, z),
      B.assoc_inv(e.bwd, e.fwd, v),
      B.whisker_r(B.inv(e.unit), v),
      B.lunitor(v),
  });
}

TwoCell unwhisker_r(const Bicategory& B, const AdjointEquivalence& e,
                    const OneCell& u, const OneCell& v, const TwoCell& z) {
  return B.vchain({
      B.runitor_inv(u),
      B.whisker_l(u, B.inv(e.counit)),
      B.assoc_inv(u, e.fwd, e.bwd),
      B.whisker_r(z, e.bwd),
      B.associator(v, e.fwd, e.bwd),
      B.whisker_l(v, e.counit),
      B.runitor(v),
  });
}

namespace {

// F(a) o F(b) => F(a o b) => F(a' o b') => F(a') o F(b')
TwoCell through_compositor(const Bicategory& B, const Pseudofunctor& F,
                           const OneCell& a, const OneCell& b,
                           const OneCell& a2, const OneCell& b2,
                           const TwoCell& t) {
  return B.vchain({
      F.compositor(a, b),
      F.on_2(t),
      F.compositor_inv(a2, b2),
  });
}

}  // namespace

CentralOneCell centre_whisker(const PremonoidalStructure& p, const Obj& x,
                              const CentralOneCell& c, Side side) {
  const BinoidalStructure& bin = p.bin;
  Bicategory::Ptr Bp = bin.B;
  OneCell f = c.cell;
  Obj a = f.src, a2 = f.dst;
  CentralOneCell out;
  out.cell = side == Side::Left ? bin.wl(x, f) : bin.wr(f, x);

  if (side == Side::Left) {
    // lc of X |> f : transport along alpha_{X,A,-} to the X |> lc square.
    out.lc = [p, bin, Bp, x, a, a2, f, c](const OneCell& g) {
      const Bicategory& B = *Bp;
      Obj b = g.src, b2 = g.dst;
      OneCell xf = bin.wl(x, f);
      OneCell alpha_b = p.assoc1(x, a, b);
      OneCell alpha_f2 = p.assoc1(x, a, b2);
      OneCell alpha_b2 = p.assoc1(x, a2, b);
      AdjointEquivalence outer = p.assoc_adj(x, a2, b2);
      Pseudofunctor actX = bin.act_l(x);
      TwoCell inner = through_compositor(
          B, actX, bin.wr(f, b2), bin.wl(a, g), bin.wl(a2, g), bin.wr(f, b),
          c.lc(g));
      // start: (X |> (f <| B')) o (alpha o ((XA) |> g))
      TwoCell rhs = B.vchain({
          B.whisker_l(actX.on_1(bin.wr(f, b2)),
                      B.inv(p.assoc_nat_r(x, a, g))),
          B.assoc_inv(actX.on_1(bin.wr(f, b2)), actX.on_1(bin.wl(a, g)),
                      alpha_b),
          B.whisker_r(inner, alpha_b),
          B.associator(actX.on_1(bin.wl(a2, g)), actX.on_1(bin.wr(f, b)),
                       alpha_b),
          B.whisker_l(actX.on_1(bin.wl(a2, g)), p.assoc_nat_m(x, f, b)),
      });
      OneCell u_src = B.compose1(bin.wr(xf, b2), bin.wl(bin.ten_obj(x, a), g));
      OneCell u_dst = B.compose1(bin.wl(bin.ten_obj(x, a2), g), bin.wr(xf, b));
      TwoCell pre = B.vchain({
          B.assoc_inv(actX.on_1(bin.wr(f, b2)), alpha_f2,
                      bin.wl(bin.ten_obj(x, a), g)),
          B.whisker_r(p.assoc_nat_m(x, f, b2), bin.wl(bin.ten_obj(x, a), g)),
          B.associator(outer.fwd, bin.wr(xf, b2),
                       bin.wl(bin.ten_obj(x, a), g)),
      });
      TwoCell post = B.vchain({
          B.assoc_inv(outer.fwd, bin.wl(bin.ten_obj(x, a2), g), bin.wr(xf, b)),
          B.whisker_r(B.inv(p.assoc_nat_r(x, a2, g)), bin.wr(xf, b)),
          B.associator(actX.on_1(bin.wl(a2, g)), alpha_b2, bin.wr(xf, b)),
      });
      TwoCell z = B.vchain({B.inv(pre), rhs, B.inv(post)});
      return unwhisker_l(B, outer, u_src, u_dst, z);
    };
    // rc of X |> f : transport along alpha_{-,X,A} to rc^f at g <| X.
    out.rc = [p, bin, Bp, x, a, a2, f, c](const OneCell& g) {
      const Bicategory& B = *Bp;
      Obj b = g.src, b2 = g.dst;
      OneCell xf = bin.wl(x, f);
      AdjointEquivalence inner_adj = p.assoc_adj(b, x, a);
      OneCell alpha_a = inner_adj.fwd;       // (BX)A -> B(XA)
      OneCell alpha_a2 = p.assoc1(b, x, a2); // (BX)A' -> B(XA')
      OneCell alpha_b2 = p.assoc1(b2, x, a); // (B'X)A -> B'(XA)
      OneCell alpha_z = p.assoc1(b2, x, a2);
      OneCell gx = bin.wr(g, x);
      TwoCell inner = c.rc(gx);
      TwoCell known = B.vchain({
          B.whisker_l(bin.wl(b2, xf), p.assoc_nat_l(g, x, a)),
          B.assoc_inv(bin.wl(b2, xf), alpha_b2, bin.wr(gx, a)),
          B.whisker_r(p.assoc_nat_r(b2, x, f), bin.wr(gx, a)),
          B.associator(alpha_z, bin.wl(bin.ten_obj(b2, x), f),
                       bin.wr(gx, a)),
          B.whisker_l(alpha_z, inner),
      });
      OneCell u_src = B.compose1(bin.wl(b2, xf), bin.wr(g, bin.ten_obj(x, a)));
      OneCell u_dst =
          B.compose1(bin.wr(g, bin.ten_obj(x, a2)), bin.wl(b, xf));
      TwoCell pre = B.assoc_inv(bin.wl(b2, xf), bin.wr(g, bin.ten_obj(x, a)),
                                alpha_a);
      TwoCell post = B.vchain({
          B.associator(bin.wr(g, bin.ten_obj(x, a2)), bin.wl(b, xf), alpha_a),
          B.whisker_l(bin.wr(g, bin.ten_obj(x, a2)), p.assoc_nat_r(b, x, f)),
          B.assoc_inv(bin.wr(g, bin.ten_obj(x, a2)), alpha_a2,
                      bin.wl(bin.ten_obj(b, x), f)),
          B.whisker_r(p.assoc_nat_l(g, x, a2), bin.wl(bin.ten_obj(b, x), f)),
          B.associator(alpha_z, bin.wr(gx, a2), bin.wl(bin.ten_obj(b, x), f)),
      });
      TwoCell z = B.vchain({B.inv(pre), known, B.inv(post)});
      return unwhisker_r(B, inner_adj, u_src, u_dst, z);
    };
  } else {
    // lc of f <| X : transport along alpha_{A,X,-} to lc^f at X |> g.
    out.lc = [p, bin, Bp, x, a, a2, f, c](const OneCell& g) {
      const Bicategory& B = *Bp;
      Obj b = g.src, b2 = g.dst;
      OneCell fx = bin.wr(f, x);
      OneCell alpha_x = p.assoc1(a, x, b);     // (AX)B -> A(XB)
      OneCell alpha_x2 = p.assoc1(a, x, b2);   // (AX)B' -> A(XB')
      OneCell alpha_y = p.assoc1(a2, x, b);    // (A'X)B -> A'(XB)
      AdjointEquivalence outer = p.assoc_adj(a2, x, b2);
      OneCell alpha_z = outer.fwd;
      OneCell xg = bin.wl(x, g);
      TwoCell inner = c.lc(xg);
      // start: ((f <| (XB')) o (A |> (Xg))) o alpha_{A,X,B}
      TwoCell known = B.vchain({
          B.whisker_r(inner, alpha_x),
          B.associator(bin.wl(a2, xg), bin.wr(f, bin.ten_obj(x, b)), alpha_x),
          B.whisker_l(bin.wl(a2, xg), p.assoc_nat_l(f, x, b)),
          B.assoc_inv(bin.wl(a2, xg), alpha_y, bin.wr(fx, b)),
          B.whisker_r(p.assoc_nat_r(a2, x, g), bin.wr(fx, b)),
          B.associator(alpha_z, bin.wl(bin.ten_obj(a2, x), g), bin.wr(fx, b)),
      });
      OneCell u_src = B.compose1(bin.wr(fx, b2), bin.wl(bin.ten_obj(a, x), g));
      OneCell u_dst =
          B.compose1(bin.wl(bin.ten_obj(a2, x), g), bin.wr(fx, b));
      TwoCell pre = B.vchain({
          B.associator(bin.wr(f, bin.ten_obj(x, b2)), bin.wl(a, xg), alpha_x),
          B.whisker_l(bin.wr(f, bin.ten_obj(x, b2)), p.assoc_nat_r(a, x, g)),
          B.assoc_inv(bin.wr(f, bin.ten_obj(x, b2)), alpha_x2,
                      bin.wl(bin.ten_obj(a, x), g)),
          B.whisker_r(p.assoc_nat_l(f, x, b2), bin.wl(bin.ten_obj(a, x), g)),
          B.associator(alpha_z, bin.wr(fx, b2), bin.wl(bin.ten_obj(a, x), g)),
      });
      TwoCell z = B.vchain({B.inv(pre), known});
      return unwhisker_l(B, outer, u_src, u_dst, z);
    };
    // rc of f <| X : transport along alpha_{-,A,X} to rc^f <| X.
    out.rc = [p, bin, Bp, x, a, a2, f, c](const OneCell& g) {
      const Bicategory& B = *Bp;
      Obj b = g.src, b2 = g.dst;
      OneCell fx = bin.wr(f, x);
      AdjointEquivalence base_adj = p.assoc_adj(b, a, x);
      OneCell alpha_y = base_adj.fwd;         // (BA)X -> B(AX)
      OneCell alpha_v = p.assoc1(b, a2, x);   // (BA')X -> B(A'X)
      OneCell alpha_y2 = p.assoc1(b2, a, x);  // (B'A)X -> B'(AX)
      OneCell alpha_w = p.assoc1(b2, a2, x);
      Pseudofunctor actX = bin.act_r(x);
      TwoCell inner = through_compositor(
          B, actX, bin.wl(b2, f), bin.wr(g, a), bin.wr(g, a2), bin.wl(b, f),
          c.rc(g));
      TwoCell known = B.vchain({
          B.whisker_l(bin.wl(b2, fx), p.assoc_nat_l(g, a, x)),
          B.assoc_inv(bin.wl(b2, fx), alpha_y2, actX.on_1(bin.wr(g, a))),
          B.whisker_r(p.assoc_nat_m(b2, f, x), actX.on_1(bin.wr(g, a))),
          B.associator(alpha_w, actX.on_1(bin.wl(b2, f)),
                       actX.on_1(bin.wr(g, a))),
          B.whisker_l(alpha_w, inner),
      });
      OneCell u_src = B.compose1(bin.wl(b2, fx), bin.wr(g, bin.ten_obj(a, x)));
      OneCell u_dst =
          B.compose1(bin.wr(g, bin.ten_obj(a2, x)), bin.wl(b, fx));
      TwoCell pre = B.assoc_inv(bin.wl(b2, fx), bin.wr(g, bin.ten_obj(a, x)),
                                alpha_y);
      TwoCell post = B.vchain({
          B.associator(bin.wr(g, bin.ten_obj(a2, x)), bin.wl(b, fx), alpha_y),
          B.whisker_l(bin.wr(g, bin.ten_obj(a2, x)), p.assoc_nat_m(b, f, x)),
          B.assoc_inv(bin.wr(g, bin.ten_obj(a2, x)), alpha_v,
                      actX.on_1(bin.wl(b, f))),
          B.whisker_r(p.assoc_nat_l(g, a2, x), actX.on_1(bin.wl(b, f))),
          B.associator(alpha_w, actX.on_1(bin.wr(g, a2)),
                       actX.on_1(bin.wl(b, f))),
      });
      TwoCell z = B.vchain({B.inv(pre), known, B.inv(post)});
      return unwhisker_r(B, base_adj, u_src, u_dst, z);
    };
  }
  return out;
}

std::pair<TwoCell, TwoCell> whisker_eq_sides(const PremonoidalStructure& p,
                                             const Obj& x,
                                             const CentralOneCell& c,
                                             const CentralOneCell& out,
                                             Side side, const OneCell& g) {
  const BinoidalStructure& bin = p.bin;
  const Bicategory& B = *bin.B;
  OneCell f = c.cell;
  Obj a = f.src, a2 = f.dst;
  Obj b = g.src, b2 = g.dst;
  if (side == Side::Left) {
    OneCell xf = bin.wl(x, f);
    OneCell alpha_b = p.assoc1(x, a, b);
    OneCell alpha_f2 = p.assoc1(x, a, b2);
    OneCell alpha_b2 = p.assoc1(x, a2, b);
    OneCell alpha_z = p.assoc1(x, a2, b2);
    Pseudofunctor actX = bin.act_l(x);
    TwoCell inner = B.vchain({
        actX.compositor(bin.wr(f, b2), bin.wl(a, g)),
        actX.on_2(c.lc(g)),
        actX.compositor_inv(bin.wl(a2, g), bin.wr(f, b)),
    });
    TwoCell rhs = B.vchain({
        B.whisker_l(actX.on_1(bin.wr(f, b2)), B.inv(p.assoc_nat_r(x, a, g))),
        B.assoc_inv(actX.on_1(bin.wr(f, b2)), actX.on_1(bin.wl(a, g)),
                    alpha_b),
        B.whisker_r(inner, alpha_b),
        B.associator(actX.on_1(bin.wl(a2, g)), actX.on_1(bin.wr(f, b)),
                     alpha_b),
        B.whisker_l(actX.on_1(bin.wl(a2, g)), p.assoc_nat_m(x, f, b)),
    });
    TwoCell lhs = B.vchain({
        B.assoc_inv(actX.on_1(bin.wr(f, b2)), alpha_f2,
                    bin.wl(bin.ten_obj(x, a), g)),
        B.whisker_r(p.assoc_nat_m(x, f, b2), bin.wl(bin.ten_obj(x, a), g)),
        B.associator(alpha_z, bin.wr(xf, b2), bin.wl(bin.ten_obj(x, a), g)),
        B.whisker_l(alpha_z, out.lc(g)),
        B.assoc_inv(alpha_z, bin.wl(bin.ten_obj(x, a2), g), bin.wr(xf, b)),
        B.whisker_r(B.inv(p.assoc_nat_r(x, a2, g)), bin.wr(xf, b)),
        B.associator(actX.on_1(bin.wl(a2, g)), alpha_b2, bin.wr(xf, b)),
    });
    return {lhs, rhs};
  }
  // side == Right: the mirrored display for lc of f <| X
  OneCell fx = bin.wr(f, x);
  OneCell alpha_x = p.assoc1(a, x, b);
  OneCell alpha_x2 = p.assoc1(a, x, b2);
  OneCell alpha_y = p.assoc1(a2, x, b);
  OneCell alpha_z = p.assoc1(a2, x, b2);
  OneCell xg = bin.wl(x, g);
  TwoCell known = B.vchain({
      B.whisker_r(c.lc(xg), alpha_x),
      B.associator(bin.wl(a2, xg), bin.wr(f, bin.ten_obj(x, b)), alpha_x),
      B.whisker_l(bin.wl(a2, xg), p.assoc_nat_l(f, x, b)),
      B.assoc_inv(bin.wl(a2, xg), alpha_y, bin.wr(fx, b)),
      B.whisker_r(p.assoc_nat_r(a2, x, g), bin.wr(fx, b)),
      B.associator(alpha_z, bin.wl(bin.ten_obj(a2, x), g), bin.wr(fx, b)),
  });
  TwoCell with_u = B.vchain({
      B.associator(bin.wr(f, bin.ten_obj(x, b2)), bin.wl(a, xg), alpha_x),
      B.whisker_l(bin.wr(f, bin.ten_obj(x, b2)), p.assoc_nat_r(a, x, g)),
      B.assoc_inv(bin.wr(f, bin.ten_obj(x, b2)), alpha_x2,
                  bin.wl(bin.ten_obj(a, x), g)),
      B.whisker_r(p.assoc_nat_l(f, x, b2), bin.wl(bin.ten_obj(a, x), g)),
      B.associator(alpha_z, bin.wr(fx, b2), bin.wl(bin.ten_obj(a, x), g)),
      B.whisker_l(alpha_z, out.lc(g)),
  });
  return {with_u, known};
}

std::vector<LawRun> centre_laws(const CheckCtx& ctx,
                                const PremonoidalStructure& p,
                                const CentralGen& gen) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Bp = p.bin.B;
  const std::string anchor_eq6 = "uniquely determined by the equation";
  const std::string anchor_centre = "whose 1-cells and 2-cells are the central";

  laws.push_back(law_over_chains(
      ctx, "centre.whisker-eq", anchor_eq6, 1,
      [p, gen](const std::vector<OneCell>& c) -> std::optional<json> {
        Rng rng(std::hash<std::string>{}(c[0].str()));
        CentralOneCell cc = gen.free(rng);
        Obj x = rng.coin() ? c[0].src : cc.cell.src;
        for (Side side : {Side::Left, Side::Right}) {
          CentralOneCell w = centre_whisker(p, x, cc, side);
          auto [lhs, rhs] = whisker_eq_sides(p, x, cc, w, side, c[0]);
          if (auto bad = expect_equal(*p.bin.B, lhs, rhs))
            return law_failure({{"side", side == Side::Left ? "left" : "right"},
                                {"detail", *bad}});
        }
        return std::nullopt;
      }));
  laws.back().script = "eq6_whisker.eqn";

  laws.push_back(law_over_cells(
      ctx, "centre.whisker-central", anchor_centre, 2,
      [p, gen](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
               Rng& rng) -> std::optional<json> {
        CentralOneCell cc = gen.free(rng);
        Obj x = c[0].src;
        Side side = rng.coin() ? Side::Left : Side::Right;
        CentralOneCell w = centre_whisker(p, x, cc, side);
        PseudonatTrans l = lc_psnat(p.bin, w);
        PseudonatTrans r = rc_psnat(p.bin, w);
        if (auto bad = psnat_natural2_at(l, t[0])) return bad;
        if (auto bad = psnat_composition_at(l, c[1], c[0])) return bad;
        if (auto bad = psnat_unit_at(l, c[0].src)) return bad;
        if (auto bad = psnat_natural2_at(r, t[0])) return bad;
        if (auto bad = psnat_composition_at(r, c[1], c[0])) return bad;
        return psnat_unit_at(r, c[0].src);
      }));

  laws.push_back(law_over_cells(
      ctx, "centre.compose-central", anchor_centre, 2,
      [p, gen](const std::vector<OneCell>& c, const std::vector<TwoCell>&,
               Rng& rng) -> std::optional<json> {
        CentralOneCell f = gen.free(rng);
        CentralOneCell g;
        try {
          g = gen.at(rng, f.cell.dst, c[0].src);
        } catch (const InvalidValue&) {
          return std::nullopt;  // no central cell with these endpoints
        }
        CentralOneCell fg = central_compose(p.bin, g, f);
        PseudonatTrans l = lc_psnat(p.bin, fg);
        if (auto bad = psnat_composition_at(l, c[1], c[0])) return bad;
        PseudonatTrans r = rc_psnat(p.bin, fg);
        return psnat_composition_at(r, c[1], c[0]);
      }));

  laws.push_back(law_over_cells(
      ctx, "centre.identity-central", anchor_centre, 2,
      [p](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
          Rng& rng) -> std::optional<json> {
        Obj a = c[0].src;
        (void)rng;
        CentralOneCell id = central_id(p.bin, a);
        PseudonatTrans l = lc_psnat(p.bin, id);
        if (auto bad = psnat_natural2_at(l, t[0])) return bad;
        if (auto bad = psnat_composition_at(l, c[1], c[0])) return bad;
        PseudonatTrans r = rc_psnat(p.bin, id);
        if (auto bad = psnat_natural2_at(r, t[0])) return bad;
        return psnat_composition_at(r, c[1], c[0]);
      }));

  return laws;
}

}  // namespace bicheck
