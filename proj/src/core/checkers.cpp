#include "bicheck/core/checkers.hpp"

namespace bicheck {

namespace {

std::uint64_t mix(std::uint64_t seed, const std::string& tag,
                  std::uint64_t i) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h ^= i + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

json law_failure(std::initializer_list<std::pair<std::string, json>> fields) {
  json j = json::object();
  for (auto& [k, v] : fields) j[k] = v;
  return j;
}

json cells_json(const std::vector<OneCell>& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(c.to_json());
  return arr;
}

std::optional<json> expect_equal(const Bicategory& B, const TwoCell& lhs,
                                 const TwoCell& rhs) {
  if (auto e = B.validate2(lhs))
    return law_failure({{"invalid", "lhs"}, {"reason", *e},
                        {"lhs", lhs.to_json()}});
  if (auto e = B.validate2(rhs))
    return law_failure({{"invalid", "rhs"}, {"reason", *e},
                        {"rhs", rhs.to_json()}});
  if (lhs == rhs) return std::nullopt;
  return law_failure({{"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}});
}

std::optional<json> expect_valid(const Bicategory& B, const TwoCell& a) {
  if (auto e = B.validate2(a))
    return law_failure({{"invalid", "cell"}, {"reason", *e},
                        {"cell", a.to_json()}});
  return std::nullopt;
}

LawRun law_over_chains(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k,
    std::function<std::optional<json>(const std::vector<OneCell>&)> body) {
  LawRun law;
  law.id = ctx.id_prefix + id;
  law.anchor = anchor;
  auto space = std::make_shared<ChainSpace>(*ctx.sampler, k);
  if (space->available() && space->total() <= ctx.threshold &&
      space->total() > 0) {
    law.mode = "exhaustive";
    law.count = static_cast<std::size_t>(space->total());
    law.check = [space, body](std::size_t i) {
      return body(space->decode(static_cast<std::int64_t>(i)));
    };
  } else {
    law.mode = "sampled";
    law.count = ctx.samples;
    auto sampler = ctx.sampler;
    std::uint64_t seed = ctx.seed;
    std::string tag = law.id;
    law.check = [sampler, seed, tag, k, body](std::size_t i) {
      Rng rng(mix(seed, tag, i));
      return body(sampler->chain(rng, k));
    };
  }
  return law;
}

LawRun law_over_cells(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k,
    std::function<std::optional<json>(const std::vector<OneCell>&,
                                      const std::vector<TwoCell>&, Rng&)>
        body) {
  LawRun law;
  law.id = ctx.id_prefix + id;
  law.anchor = anchor;
  law.mode = "sampled";
  law.count = ctx.samples;
  auto sampler = ctx.sampler;
  std::uint64_t seed = ctx.seed;
  std::string tag = law.id;
  law.check = [sampler, seed, tag, k, body](std::size_t i) {
    Rng rng(mix(seed, tag, i));
    std::vector<OneCell> chain = sampler->chain(rng, k);
    std::vector<TwoCell> twos;
    twos.reserve(chain.size());
    for (const auto& c : chain) twos.push_back(sampler->two_from(rng, c));
    return body(chain, twos, rng);
  };
  return law;
}

LawRun law_over_objs(
    const CheckCtx& ctx, const std::string& id, const std::string& anchor,
    int k, std::function<std::optional<json>(const std::vector<Obj>&)> body) {
  LawRun law;
  law.id = ctx.id_prefix + id;
  law.anchor = anchor;
  auto universe = std::make_shared<std::vector<Obj>>(ctx.sampler->universe());
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::int64_t>(universe->size());
    if (total > ctx.threshold) break;
  }
  if (total <= ctx.threshold && total > 0) {
    law.mode = "exhaustive";
    law.count = static_cast<std::size_t>(total);
    law.check = [universe, k, body](std::size_t i) {
      std::vector<Obj> objs;
      std::size_t rem = i;
      for (int j = 0; j < k; ++j) {
        objs.push_back((*universe)[rem % universe->size()]);
        rem /= universe->size();
      }
      return body(objs);
    };
  } else {
    law.mode = "sampled";
    law.count = ctx.samples;
    auto sampler = ctx.sampler;
    std::uint64_t seed = ctx.seed;
    std::string tag = law.id;
    law.check = [sampler, seed, tag, k, body](std::size_t i) {
      Rng rng(mix(seed, tag, i));
      std::vector<Obj> objs;
      for (int j = 0; j < k; ++j) objs.push_back(sampler->obj(rng));
      return body(objs);
    };
  }
  return law;
}

std::vector<LawRun> bicategory_laws(const CheckCtx& ctx) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Bp = ctx.sampler->bicat();
  const std::string anchor_weak =
      "replaced by invertible 2-cells satisfying coherence axioms";

  laws.push_back(law_over_chains(
      ctx, "bicat.pentagon", "pentagon law for the associator", 4,
      [Bp](const std::vector<OneCell>& c) -> std::optional<json> {
        const Bicategory& B = *Bp;
        const OneCell &f = c[0], &g = c[1], &h = c[2], &k = c[3];
        TwoCell lhs = B.vchain({
            B.whisker_r(B.associator(k, h, g), f),
            B.associator(k, B.compose1(h, g), f),
            B.whisker_l(k, B.associator(h, g, f)),
        });
        TwoCell rhs = B.vchain({
            B.associator(B.compose1(k, h), g, f),
            B.associator(k, h, B.compose1(g, f)),
        });
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_chains(
      ctx, "bicat.triangle", "triangle law for the unitors", 2,
      [Bp](const std::vector<OneCell>& c) -> std::optional<json> {
        const Bicategory& B = *Bp;
        const OneCell &f = c[0], &g = c[1];
        OneCell idb = B.id1(f.dst);
        TwoCell lhs = B.vchain({
            B.associator(g, idb, f),
            B.whisker_l(g, B.lunitor(f)),
        });
        TwoCell rhs = B.whisker_r(B.runitor(g), f);
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.assoc-natural", "naturality of the associator", 3,
      [Bp](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
           Rng&) -> std::optional<json> {
        const Bicategory& B = *Bp;
        TwoCell lhs = B.vcomp(B.associator(t[2].dst, t[1].dst, t[0].dst),
                              B.hcomp2(B.hcomp2(t[2], t[1]), t[0]));
        TwoCell rhs = B.vcomp(B.hcomp2(t[2], B.hcomp2(t[1], t[0])),
                              B.associator(c[2], c[1], c[0]));
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.lunitor-natural", "naturality of the left unitor", 1,
      [Bp](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
           Rng&) -> std::optional<json> {
        const Bicategory& B = *Bp;
        TwoCell lhs = B.vcomp(B.lunitor(t[0].dst),
                              B.whisker_l(B.id1(c[0].dst), t[0]));
        TwoCell rhs = B.vcomp(t[0], B.lunitor(c[0]));
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.runitor-natural", "naturality of the right unitor", 1,
      [Bp](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
           Rng&) -> std::optional<json> {
        const Bicategory& B = *Bp;
        TwoCell lhs = B.vcomp(B.runitor(t[0].dst),
                              B.whisker_r(t[0], B.id1(c[0].src)));
        TwoCell rhs = B.vcomp(t[0], B.runitor(c[0]));
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.interchange",
      "interchange of vertical and horizontal composition", 2,
      [Bp, ctx](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
                Rng& rng) -> std::optional<json> {
        const Bicategory& B = *Bp;
        TwoCell a1 = t[0];
        TwoCell b1 = t[1];
        TwoCell a2 = ctx.sampler->two_from(rng, a1.dst);
        TwoCell b2 = ctx.sampler->two_from(rng, b1.dst);
        TwoCell lhs = B.hcomp2(B.vcomp(b2, b1), B.vcomp(a2, a1));
        TwoCell rhs = B.vcomp(B.hcomp2(b2, a2), B.hcomp2(b1, a1));
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"cells", cells_json(c)}, {"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.hcomp-order",
      "the two whiskering orders compute the same horizontal composite", 2,
      [Bp](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
           Rng&) -> std::optional<json> {
        const Bicategory& B = *Bp;
        (void)c;
        TwoCell lhs = B.vcomp(B.whisker_r(t[1], t[0].dst),
                              B.whisker_l(t[1].src, t[0]));
        TwoCell rhs = B.vcomp(B.whisker_l(t[1].dst, t[0]),
                              B.whisker_r(t[1], t[0].src));
        if (auto bad = expect_equal(B, lhs, rhs))
          return law_failure({{"detail", *bad}});
        return std::nullopt;
      }));

  laws.push_back(law_over_chains(
      ctx, "bicat.structural-invertible", anchor_weak, 3,
      [Bp](const std::vector<OneCell>& c) -> std::optional<json> {
        const Bicategory& B = *Bp;
        auto check_inv = [&](const TwoCell& a,
                             const char* which) -> std::optional<json> {
          auto i = B.invert(a);
          if (!i)
            return law_failure({{"not_invertible", which},
                                {"cell", a.to_json()}});
          if (B.vcomp(*i, a) != B.id2(a.src) || B.vcomp(a, *i) != B.id2(a.dst))
            return law_failure({{"inverse_law_fails", which}});
          return std::nullopt;
        };
        if (auto bad = check_inv(B.associator(c[2], c[1], c[0]), "associator"))
          return bad;
        if (auto bad = check_inv(B.lunitor(c[0]), "lunitor")) return bad;
        if (auto bad = check_inv(B.runitor(c[0]), "runitor")) return bad;
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, "bicat.vcomp-unital", "identity 2-cells are units for vcomp", 1,
      [Bp](const std::vector<OneCell>& c, const std::vector<TwoCell>& t,
           Rng&) -> std::optional<json> {
        const Bicategory& B = *Bp;
        (void)c;
        if (B.vcomp(B.id2(t[0].dst), t[0]) != t[0] ||
            B.vcomp(t[0], B.id2(t[0].src)) != t[0])
          return law_failure({{"cell", t[0].to_json()}});
        return std::nullopt;
      }));

  laws.push_back(law_over_chains(
      ctx, "bicat.whisker-id", "whiskering an identity 2-cell is an identity",
      2, [Bp](const std::vector<OneCell>& c) -> std::optional<json> {
        const Bicategory& B = *Bp;
        if (B.whisker_l(c[1], B.id2(c[0])) != B.id2(B.compose1(c[1], c[0])) ||
            B.whisker_r(B.id2(c[1]), c[0]) != B.id2(B.compose1(c[1], c[0])))
          return law_failure({{"cells", cells_json(c)}});
        return std::nullopt;
      }));

  return laws;
}


std::optional<json> psf_respects_vcomp_at(const Pseudofunctor& F,
                                          const TwoCell& b, const TwoCell& a) {
  TwoCell lhs = F.on_2(F.src->vcomp(b, a));
  TwoCell rhs = F.dst->vcomp(F.on_2(b), F.on_2(a));
  return expect_equal(*F.dst, lhs, rhs);
}

std::optional<json> psf_compositor_natural_at(const Pseudofunctor& F,
                                              const TwoCell& b,
                                              const TwoCell& a) {
  const Bicategory& D = *F.dst;
  TwoCell lhs = D.vcomp(F.compositor(b.dst, a.dst),
                        D.hcomp2(F.on_2(b), F.on_2(a)));
  TwoCell rhs = D.vcomp(F.on_2(F.src->hcomp2(b, a)),
                        F.compositor(b.src, a.src));
  return expect_equal(D, lhs, rhs);
}

std::optional<json> psf_hexagon_at(const Pseudofunctor& F, const OneCell& h,
                                   const OneCell& g, const OneCell& f) {
  const Bicategory& D = *F.dst;
  const Bicategory& S = *F.src;
  TwoCell lhs = D.vchain({
      D.whisker_r(F.compositor(h, g), F.on_1(f)),
      F.compositor(S.compose1(h, g), f),
      F.on_2(S.associator(h, g, f)),
  });
  TwoCell rhs = D.vchain({
      D.associator(F.on_1(h), F.on_1(g), F.on_1(f)),
      D.whisker_l(F.on_1(h), F.compositor(g, f)),
      F.compositor(h, S.compose1(g, f)),
  });
  return expect_equal(D, lhs, rhs);
}

std::optional<json> psf_unit_laws_at(const Pseudofunctor& F,
                                     const OneCell& f) {
  const Bicategory& D = *F.dst;
  const Bicategory& S = *F.src;
  OneCell Ff = F.on_1(f);
  TwoCell lhs = D.vchain({
      D.whisker_r(F.unit(f.dst), Ff),
      F.compositor(S.id1(f.dst), f),
      F.on_2(S.lunitor(f)),
  });
  if (auto bad = expect_equal(D, lhs, D.lunitor(Ff))) return bad;
  TwoCell rhs = D.vchain({
      D.whisker_l(Ff, F.unit(f.src)),
      F.compositor(f, S.id1(f.src)),
      F.on_2(S.runitor(f)),
  });
  return expect_equal(D, rhs, D.runitor(Ff));
}

std::optional<json> psnat_natural2_at(const PseudonatTrans& s,
                                      const TwoCell& tau) {
  const Bicategory& D = *s.F.dst;
  TwoCell lhs = D.vcomp(s.nat(tau.dst),
                        D.whisker_r(s.G.on_2(tau), s.at(tau.src.src)));
  TwoCell rhs = D.vcomp(D.whisker_l(s.at(tau.src.dst), s.F.on_2(tau)),
                        s.nat(tau.src));
  return expect_equal(D, lhs, rhs);
}

std::optional<json> psnat_unit_at(const PseudonatTrans& s, const Obj& a) {
  const Bicategory& D = *s.F.dst;
  OneCell sa = s.at(a);
  TwoCell lhs = s.nat(s.F.src->id1(a));
  TwoCell rhs = D.vchain({
      D.whisker_r(s.G.unit_inv(a), sa),
      D.lunitor(sa),
      D.runitor_inv(sa),
      D.whisker_l(sa, s.F.unit(a)),
  });
  return expect_equal(D, lhs, rhs);
}

std::optional<json> psnat_composition_at(const PseudonatTrans& s,
                                         const OneCell& g, const OneCell& f) {
  const Bicategory& D = *s.F.dst;
  OneCell sa = s.at(f.src), sb = s.at(f.dst), sc = s.at(g.dst);
  OneCell Ff = s.F.on_1(f), Fg = s.F.on_1(g);
  OneCell Gf = s.G.on_1(f), Gg = s.G.on_1(g);
  TwoCell lhs = s.nat(s.F.src->compose1(g, f));
  TwoCell rhs = D.vchain({
      D.whisker_r(s.G.compositor_inv(g, f), sa),
      D.associator(Gg, Gf, sa),
      D.whisker_l(Gg, s.nat(f)),
      D.assoc_inv(Gg, sb, Ff),
      D.whisker_r(s.nat(g), Ff),
      D.associator(sc, Fg, Ff),
      D.whisker_l(sc, s.F.compositor(g, f)),
  });
  return expect_equal(D, lhs, rhs);
}

std::optional<json> modification_square_at(const Modification& m,
                                           const OneCell& f) {
  const Bicategory& D = *m.s.F.dst;
  TwoCell lhs = D.vcomp(m.t.nat(f), D.whisker_l(m.s.G.on_1(f), m.at(f.src)));
  TwoCell rhs = D.vcomp(D.whisker_r(m.at(f.dst), m.s.F.on_1(f)), m.s.nat(f));
  return expect_equal(D, lhs, rhs);
}

std::optional<json> icon_natural_at(const Icon& icon, const TwoCell& tau) {
  const Bicategory& D = *icon.F.dst;
  TwoCell lhs = D.vcomp(icon.at(tau.dst), icon.F.on_2(tau));
  TwoCell rhs = D.vcomp(icon.G.on_2(tau), icon.at(tau.src));
  return expect_equal(D, lhs, rhs);
}

std::optional<json> icon_identity_at(const Icon& icon, const Obj& a) {
  const Bicategory& D = *icon.F.dst;
  TwoCell lhs = D.vcomp(icon.at(icon.F.src->id1(a)), icon.F.unit(a));
  return expect_equal(D, lhs, icon.G.unit(a));
}

std::optional<json> icon_composition_at(const Icon& icon, const OneCell& g,
                                        const OneCell& f) {
  const Bicategory& D = *icon.F.dst;
  TwoCell lhs = D.vcomp(icon.at(icon.F.src->compose1(g, f)),
                        icon.F.compositor(g, f));
  TwoCell rhs = D.vcomp(icon.G.compositor(g, f),
                        D.hcomp2(icon.at(g), icon.at(f)));
  return expect_equal(D, lhs, rhs);
}

std::vector<LawRun> pseudofunctor_laws(const CheckCtx& ctx,
                                       const Pseudofunctor& F,
                                       const std::string& name,
                                       const std::string& anchor) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Dp = F.dst;
  auto pre = [&](const std::string& s) { return "psf." + name + "." + s; };

  laws.push_back(law_over_cells(
      ctx, pre("boundaries"), anchor, 1,
      [F, Dp](const std::vector<OneCell>&, const std::vector<TwoCell>& t,
              Rng&) -> std::optional<json> {
        TwoCell img = F.on_2(t[0]);
        if (img.src != F.on_1(t[0].src) || img.dst != F.on_1(t[0].dst))
          return law_failure({{"cell", t[0].to_json()}});
        return expect_valid(*Dp, img);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("respects-id"), anchor, 1,
      [F, Dp](const std::vector<OneCell>& c) -> std::optional<json> {
        if (F.on_2(F.src->id2(c[0])) != Dp->id2(F.on_1(c[0])))
          return law_failure({{"cell", c[0].to_json()}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, pre("respects-vcomp"), anchor, 1,
      [F, ctx](const std::vector<OneCell>&, const std::vector<TwoCell>& t,
               Rng& rng) -> std::optional<json> {
        TwoCell a = t[0];
        TwoCell b = ctx.sampler->two_from(rng, a.dst);
        return psf_respects_vcomp_at(F, b, a);
      }));

  laws.push_back(law_over_cells(
      ctx, pre("compositor-natural"), anchor, 2,
      [F](const std::vector<OneCell>&, const std::vector<TwoCell>& t,
          Rng&) -> std::optional<json> {
        return psf_compositor_natural_at(F, t[1], t[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("hexagon"), anchor, 3,
      [F](const std::vector<OneCell>& c) -> std::optional<json> {
        return psf_hexagon_at(F, c[2], c[1], c[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("unit-laws"), anchor, 1,
      [F](const std::vector<OneCell>& c) -> std::optional<json> {
        return psf_unit_laws_at(F, c[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("witness-invertible"), anchor, 2,
      [F, Dp](const std::vector<OneCell>& c) -> std::optional<json> {
        if (!Dp->invert(F.compositor(c[1], c[0])))
          return law_failure({{"not_invertible", "compositor"}});
        if (!Dp->invert(F.unit(c[0].src)))
          return law_failure({{"not_invertible", "unit"}});
        return std::nullopt;
      }));

  return laws;
}

std::vector<LawRun> pseudonat_laws(const CheckCtx& ctx,
                                   const PseudonatTrans& s,
                                   const std::string& name,
                                   const std::string& anchor) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Dp = s.F.dst;
  auto pre = [&](const std::string& t) { return "psnat." + name + "." + t; };

  laws.push_back(law_over_cells(
      ctx, pre("natural-2"), anchor, 1,
      [s](const std::vector<OneCell>&, const std::vector<TwoCell>& t,
          Rng&) -> std::optional<json> {
        return psnat_natural2_at(s, t[0]);
      }));

  laws.push_back(law_over_objs(
      ctx, pre("unit"), anchor, 1,
      [s](const std::vector<Obj>& objs) -> std::optional<json> {
        return psnat_unit_at(s, objs[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("composition"), anchor, 2,
      [s](const std::vector<OneCell>& c) -> std::optional<json> {
        return psnat_composition_at(s, c[1], c[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("witness-invertible"), anchor, 1,
      [s, Dp](const std::vector<OneCell>& c) -> std::optional<json> {
        if (!Dp->invert(s.nat(c[0])))
          return law_failure({{"not_invertible", c[0].to_json()}});
        return std::nullopt;
      }));

  return laws;
}

std::vector<LawRun> modification_laws(const CheckCtx& ctx,
                                      const Modification& m,
                                      const std::string& name,
                                      const std::string& anchor) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Dp = m.s.F.dst;
  laws.push_back(law_over_chains(
      ctx, "mod." + name + ".square", anchor, 1,
      [m](const std::vector<OneCell>& c) -> std::optional<json> {
        return modification_square_at(m, c[0]);
      }));
  return laws;
}

std::vector<LawRun> icon_laws(const CheckCtx& ctx, const Icon& icon,
                              const std::string& name,
                              const std::string& anchor,
                              bool require_invertible) {
  std::vector<LawRun> laws;
  Bicategory::Ptr Dp = icon.F.dst;
  auto pre = [&](const std::string& t) { return "icon." + name + "." + t; };

  laws.push_back(law_over_objs(
      ctx, pre("objects-agree"), anchor, 1,
      [icon](const std::vector<Obj>& objs) -> std::optional<json> {
        if (!(icon.F.on_obj(objs[0]) == icon.G.on_obj(objs[0])))
          return law_failure({{"obj", objs[0].to_json()}});
        return std::nullopt;
      }));

  laws.push_back(law_over_cells(
      ctx, pre("natural"), anchor, 1,
      [icon](const std::vector<OneCell>&, const std::vector<TwoCell>& t,
             Rng&) -> std::optional<json> {
        return icon_natural_at(icon, t[0]);
      }));

  laws.push_back(law_over_objs(
      ctx, pre("identity-law"), anchor, 1,
      [icon](const std::vector<Obj>& objs) -> std::optional<json> {
        return icon_identity_at(icon, objs[0]);
      }));

  laws.push_back(law_over_chains(
      ctx, pre("composition-law"), anchor, 2,
      [icon](const std::vector<OneCell>& c) -> std::optional<json> {
        return icon_composition_at(icon, c[1], c[0]);
      }));

  if (require_invertible) {
    laws.push_back(law_over_chains(
        ctx, pre("invertible"), anchor, 1,
        [icon, Dp](const std::vector<OneCell>& c) -> std::optional<json> {
          if (!Dp->invert(icon.at(c[0])))
            return law_failure({{"not_invertible", c[0].to_json()}});
          return std::nullopt;
        }));
  }
  return laws;
}

std::optional<json> adjoint_equivalence_failure(const AdjointEquivalence& e) {
  const Bicategory& B = *e.B;
  if (auto bad = expect_valid(B, e.unit)) return bad;
  if (auto bad = expect_valid(B, e.counit)) return bad;
  if (!B.invert(e.unit)) return law_failure({{"not_invertible", "unit"}});
  if (!B.invert(e.counit)) return law_failure({{"not_invertible", "counit"}});
  // f => f o id => f o (f* o f) => (f o f*) o f => id o f => f
  TwoCell tri1 = B.vchain({
      B.runitor_inv(e.fwd),
      B.whisker_l(e.fwd, e.unit),
      B.assoc_inv(e.fwd, e.bwd, e.fwd),
      B.whisker_r(e.counit, e.fwd),
      B.lunitor(e.fwd),
  });
  if (tri1 != B.id2(e.fwd))
    return law_failure({{"triangle", "forward"}, {"lhs", tri1.to_json()}});
  // f* => id o f* => (f* o f) o f* => f* o (f o f*) => f* o id => f*
  TwoCell tri2 = B.vchain({
      B.lunitor_inv(e.bwd),
      B.whisker_r(e.unit, e.bwd),
      B.associator(e.bwd, e.fwd, e.bwd),
      B.whisker_l(e.bwd, e.counit),
      B.runitor(e.bwd),
  });
  if (tri2 != B.id2(e.bwd))
    return law_failure({{"triangle", "backward"}, {"lhs", tri2.to_json()}});
  return std::nullopt;
}

std::vector<LawRun> adjoint_equivalence_laws(const std::string& id,
                                             const std::string& anchor,
                                             const AdjointEquivalence& e) {
  LawRun law;
  law.id = id;
  law.anchor = anchor;
  law.mode = "exhaustive";
  law.count = 1;
  law.check = [e](std::size_t) { return adjoint_equivalence_failure(e); };
  return {law};
}

}  // namespace bicheck
