#include "bicheck/instances/builders.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/graded.hpp"
#include "bicheck/instances/span.hpp"

namespace bicheck {

PremonoidalStructure span_premonoidal() {
  return premonoidal_from_monoidal(span_monoidal());
}

// ---------------------------------------------------------------- copara ---

namespace {

const FiniteSet& kset(const Obj& a) { return a.v.as<FiniteSet>(); }

// A |> g through the left strength t^e : A x (B' x e) -> (A x B') x e.
OneCell copara_wl(const FiniteSet& a, const OneCell& g) {
  const GradedData& d = graded_of(g);
  const FiniteSet& b = kset(g.src);
  const FiniteSet& b2 = kset(g.dst);
  FiniteSet src = FiniteSet::product(a, b);
  FiniteSet dst = FiniteSet::product(a, b2);
  FiniteFun map = FiniteFun::from_fn(
      src, FiniteSet::product(dst, d.grade), [&](const Atom& x) {
        Atom img = d.map(x.second());
        return Atom::pair(Atom::pair(x.first(), img.first()), img.second());
      });
  return mk_graded(src, dst, GradedData{d.grade, std::move(map)});
}

// f <| B through the right strength s^e : (A' x e) x B -> (A' x B) x e.
OneCell copara_wr(const OneCell& f, const FiniteSet& b) {
  const GradedData& d = graded_of(f);
  const FiniteSet& a = kset(f.src);
  const FiniteSet& a2 = kset(f.dst);
  FiniteSet src = FiniteSet::product(a, b);
  FiniteSet dst = FiniteSet::product(a2, b);
  FiniteFun map = FiniteFun::from_fn(
      src, FiniteSet::product(dst, d.grade), [&](const Atom& x) {
        Atom img = d.map(x.first());
        return Atom::pair(Atom::pair(img.first(), x.second()), img.second());
      });
  return mk_graded(src, dst, GradedData{d.grade, std::move(map)});
}

BinoidalStructure copara_binoidal() {
  BinoidalStructure bin;
  Bicategory::Ptr B = graded_bicat();
  bin.B = B;
  bin.ten_obj = [](const Obj& a, const Obj& b) {
    return graded_obj(FiniteSet::product(kset(a), kset(b)));
  };
  bin.act_l = [B](const Obj& a) {
    FiniteSet as = kset(a);
    return strict_psf(
        B, B, "copara-actl",
        [as](const Obj& x) {
          return graded_obj(FiniteSet::product(as, kset(x)));
        },
        [as](const OneCell& g) { return copara_wl(as, g); },
        [as](const TwoCell& t) {
          return mk_regrade(copara_wl(as, t.src), copara_wl(as, t.dst),
                            regrade_of(t));
        });
  };
  bin.act_r = [B](const Obj& b) {
    FiniteSet bs = kset(b);
    return strict_psf(
        B, B, "copara-actr",
        [bs](const Obj& x) {
          return graded_obj(FiniteSet::product(kset(x), bs));
        },
        [bs](const OneCell& f) { return copara_wr(f, bs); },
        [bs](const TwoCell& t) {
          return mk_regrade(copara_wr(t.src, bs), copara_wr(t.dst, bs),
                            regrade_of(t));
        });
  };
  return bin;
}

// unique re-grading into a singleton grade
TwoCell singleton_regrade(const OneCell& src, const OneCell& dst) {
  const FiniteSet& g2 = graded_of(dst).grade;
  if (g2.size() != 1)
    throw InvalidValue("expected a singleton target grade");
  return mk_regrade(
      src, dst,
      FiniteFun::constant(graded_of(src).grade, g2, g2.at(0)));
}

AdjointEquivalence pure_adjoint(const FiniteFun& bij) {
  Bicategory::Ptr B = graded_bicat();
  auto inv = bij.inverse();
  if (!inv) throw NotInvertible("pure adjoint requires a bijection");
  OneCell fwd = graded_pure_cell(bij);
  OneCell bwd = graded_pure_cell(*inv);
  TwoCell unit =
      singleton_regrade(B->id1(fwd.src), B->compose1(bwd, fwd));
  // hold: the composite has grade I x I which is a singleton product
  TwoCell counit =
      singleton_regrade(B->compose1(fwd, bwd), B->id1(fwd.dst));
  return AdjointEquivalence{B, fwd, bwd, unit, counit};
}

}  // namespace

CentralOneCell copara_pure_central(const FiniteFun& f) {
  CentralOneCell c;
  c.cell = graded_pure_cell(f);
  OneCell pf = c.cell;
  Bicategory::Ptr B = graded_bicat();
  c.lc = [pf, B](const OneCell& g) {
    // (pf <| B') o (A |> g) => (A' |> g) o (pf <| B), swapping I x e -> e x I
    const GradedData& dg = graded_of(g);
    OneCell lhs = B->compose1(copara_wr(pf, kset(g.dst)),
                              copara_wl(kset(pf.src), g));
    OneCell rhs = B->compose1(copara_wl(kset(pf.dst), g),
                              copara_wr(pf, kset(g.src)));
    return mk_regrade(lhs, rhs, swap_fun(unit_grade(), dg.grade));
  };
  c.rc = [pf, B](const OneCell& g) {
    const GradedData& dg = graded_of(g);
    OneCell lhs = B->compose1(copara_wl(kset(g.dst), pf),
                              copara_wr(g, kset(pf.src)));
    OneCell rhs = B->compose1(copara_wr(g, kset(pf.dst)),
                              copara_wl(kset(g.src), pf));
    return mk_regrade(lhs, rhs, swap_fun(unit_grade(), dg.grade));
  };
  return c;
}

PremonoidalStructure copara_premonoidal() {
  PremonoidalStructure p;
  p.bin = copara_binoidal();
  Bicategory::Ptr B = p.bin.B;
  p.unit = graded_obj(FiniteSet::range(1));
  FiniteSet us = FiniteSet::range(1);

  auto lunit_fun_at = [us](const Obj& a) { return lunit_fun(us, kset(a)); };
  auto runit_fun_at = [us](const Obj& a) { return runit_fun(kset(a), us); };
  auto assoc_fun_at = [](const Obj& a, const Obj& b, const Obj& c) {
    return rebracket_fun(kset(a), kset(b), kset(c));
  };

  p.lunit_adj = [lunit_fun_at](const Obj& a) {
    return pure_adjoint(lunit_fun_at(a));
  };
  p.lunit_central = [lunit_fun_at](const Obj& a) {
    return copara_pure_central(lunit_fun_at(a));
  };
  p.lunit_nat = [lunit_fun_at, us, B](const OneCell& g) {
    // g o lambda_A => lambda_{A'} o (I |> g): swap e x I -> I x e
    OneCell lam = graded_pure_cell(lunit_fun_at(g.src));
    OneCell lam2 = graded_pure_cell(lunit_fun_at(g.dst));
    OneCell lhs = B->compose1(g, lam);
    OneCell rhs = B->compose1(lam2, copara_wl(us, g));
    return mk_regrade(lhs, rhs,
                      swap_fun(graded_of(g).grade, unit_grade()));
  };
  p.runit_adj = [runit_fun_at](const Obj& a) {
    return pure_adjoint(runit_fun_at(a));
  };
  p.runit_central = [runit_fun_at](const Obj& a) {
    return copara_pure_central(runit_fun_at(a));
  };
  p.runit_nat = [runit_fun_at, us, B](const OneCell& f) {
    OneCell rho = graded_pure_cell(runit_fun_at(f.src));
    OneCell rho2 = graded_pure_cell(runit_fun_at(f.dst));
    OneCell lhs = B->compose1(f, rho);
    OneCell rhs = B->compose1(rho2, copara_wr(f, us));
    return mk_regrade(lhs, rhs,
                      swap_fun(graded_of(f).grade, unit_grade()));
  };
  p.assoc_adj = [assoc_fun_at](const Obj& a, const Obj& b, const Obj& c) {
    return pure_adjoint(assoc_fun_at(a, b, c));
  };
  p.assoc_central = [assoc_fun_at](const Obj& a, const Obj& b, const Obj& c) {
    return copara_pure_central(assoc_fun_at(a, b, c));
  };
  p.assoc_nat_l = [assoc_fun_at, B](const OneCell& f, const Obj& b,
                                    const Obj& c) {
    OneCell al = graded_pure_cell(assoc_fun_at(f.src, b, c));
    OneCell al2 = graded_pure_cell(assoc_fun_at(f.dst, b, c));
    OneCell lhs = B->compose1(
        copara_wr(f, FiniteSet::product(kset(b), kset(c))), al);
    OneCell rhs =
        B->compose1(al2, copara_wr(copara_wr(f, kset(b)), kset(c)));
    return mk_regrade(lhs, rhs,
                      swap_fun(graded_of(f).grade, unit_grade()));
  };
  p.assoc_nat_m = [assoc_fun_at, B](const Obj& a, const OneCell& g,
                                    const Obj& c) {
    OneCell al = graded_pure_cell(assoc_fun_at(a, g.src, c));
    OneCell al2 = graded_pure_cell(assoc_fun_at(a, g.dst, c));
    OneCell lhs = B->compose1(copara_wl(kset(a), copara_wr(g, kset(c))), al);
    OneCell rhs =
        B->compose1(al2, copara_wr(copara_wl(kset(a), g), kset(c)));
    return mk_regrade(lhs, rhs,
                      swap_fun(graded_of(g).grade, unit_grade()));
  };
  p.assoc_nat_r = [assoc_fun_at, B](const Obj& a, const Obj& b,
                                    const OneCell& h) {
    OneCell al = graded_pure_cell(assoc_fun_at(a, b, h.src));
    OneCell al2 = graded_pure_cell(assoc_fun_at(a, b, h.dst));
    OneCell lhs = B->compose1(copara_wl(kset(a), copara_wl(kset(b), h)), al);
    OneCell rhs = B->compose1(
        al2, copara_wl(FiniteSet::product(kset(a), kset(b)), h));
    return mk_regrade(lhs, rhs,
                      swap_fun(graded_of(h).grade, unit_grade()));
  };
  p.pent = [assoc_fun_at, B](const Obj& a, const Obj& b, const Obj& c,
                             const Obj& d) {
    OneCell a1 = copara_wr(graded_pure_cell(assoc_fun_at(a, b, c)), kset(d));
    Obj bc = graded_obj(FiniteSet::product(kset(b), kset(c)));
    OneCell a2 = graded_pure_cell(assoc_fun_at(a, bc, d));
    OneCell a3 = copara_wl(kset(a), graded_pure_cell(assoc_fun_at(b, c, d)));
    OneCell src = B->compose1(a3, B->compose1(a2, a1));
    Obj cd = graded_obj(FiniteSet::product(kset(c), kset(d)));
    Obj ab = graded_obj(FiniteSet::product(kset(a), kset(b)));
    OneCell dst = B->compose1(graded_pure_cell(assoc_fun_at(a, b, cd)),
                              graded_pure_cell(assoc_fun_at(ab, c, d)));
    return singleton_regrade(src, dst);
  };
  p.mid = [assoc_fun_at, lunit_fun_at, runit_fun_at, us, B](const Obj& a,
                                                            const Obj& b) {
    OneCell src = B->compose1(
        copara_wl(kset(a), graded_pure_cell(lunit_fun_at(b))),
        graded_pure_cell(assoc_fun_at(a, graded_obj(us), b)));
    OneCell dst = copara_wr(graded_pure_cell(runit_fun_at(a)), kset(b));
    return singleton_regrade(src, dst);
  };
  p.lun = [assoc_fun_at, lunit_fun_at, us, B](const Obj& a, const Obj& b) {
    OneCell src = copara_wr(graded_pure_cell(lunit_fun_at(a)), kset(b));
    Obj ab = graded_obj(FiniteSet::product(kset(a), kset(b)));
    OneCell dst =
        B->compose1(graded_pure_cell(lunit_fun_at(ab)),
                    graded_pure_cell(assoc_fun_at(graded_obj(us), a, b)));
    return singleton_regrade(src, dst);
  };
  p.run = [assoc_fun_at, runit_fun_at, us, B](const Obj& a, const Obj& b) {
    Obj ab = graded_obj(FiniteSet::product(kset(a), kset(b)));
    OneCell src = graded_pure_cell(runit_fun_at(ab));
    OneCell dst = B->compose1(
        copara_wl(kset(a), graded_pure_cell(runit_fun_at(b))),
        graded_pure_cell(assoc_fun_at(a, b, graded_obj(us))));
    return singleton_regrade(src, dst);
  };
  return p;
}

FreydStructure copara_freyd() {
  FreydStructure f;
  f.jp.V = finfun_monoidal();
  f.jp.P = copara_premonoidal();
  Bicategory::Ptr V = f.jp.V.B;
  Bicategory::Ptr K = f.jp.P.bin.B;

  Pseudofunctor J;
  J.src = V;
  J.dst = K;
  J.label = "J-pure";
  J.on_obj = [](const Obj& a) { return a; };
  J.on_1 = [](const OneCell& c) { return graded_pure_cell(fun_of(c)); };
  J.on_2 = [K](const TwoCell& t) {
    return K->id2(graded_pure_cell(fun_of(t.src)));
  };
  J.compositor = [V, K](const OneCell& g, const OneCell& c) {
    OneCell lhs = K->compose1(graded_pure_cell(fun_of(g)),
                              graded_pure_cell(fun_of(c)));
    OneCell rhs = graded_pure_cell(fun_of(g).after(fun_of(c)));
    return singleton_regrade(lhs, rhs);
  };
  J.unit = [K](const Obj& a) {
    return K->id2(K->id1(a));  // J(id) is the Kleisli identity on the nose
  };
  f.jp.J = J;

  // theta and zeta are identity icons: A |> J(f) literally equals J(A x f).
  PremonoidalStructure P = f.jp.P;
  MonoidalStructure Vm = f.jp.V;
  f.jp.theta = [J, P, Vm, K](const Obj& a) {
    Icon icon;
    icon.F = compose_psf(P.bin.act_l(a), J);
    icon.G = compose_psf(J, tensor_fix_left(Vm, a));
    icon.label = "theta";
    icon.at = [icon, K](const OneCell& c) {
      OneCell lhs = icon.F.on_1(c);
      OneCell rhs = icon.G.on_1(c);
      if (lhs != rhs)
        throw InvalidValue("theta components must be identities here");
      return K->id2(lhs);
    };
    return icon;
  };
  f.jp.zeta = [J, P, Vm, K](const Obj& a) {
    Icon icon;
    icon.F = compose_psf(P.bin.act_r(a), J);
    icon.G = compose_psf(J, tensor_fix_right(Vm, a));
    icon.label = "zeta";
    icon.at = [icon, K](const OneCell& c) {
      OneCell lhs = icon.F.on_1(c);
      OneCell rhs = icon.G.on_1(c);
      if (lhs != rhs)
        throw InvalidValue("zeta components must be identities here");
      return K->id2(lhs);
    };
    return icon;
  };
  f.central = [](const OneCell& c) {
    return copara_pure_central(fun_of(c));
  };
  return f;
}

// ----------------------------------------------------------------- state ---

namespace {

OneCell state_wl(const FiniteSet& s, const FiniteSet& a, const OneCell& g) {
  // S x (A x B) -> A x (S x B) -> A x (S x B') -> S x (A x B')
  const FiniteFun& gf = state_fun_of(g);
  const FiniteSet& b = kset(g.src);
  const FiniteSet& b2 = kset(g.dst);
  FiniteSet src = FiniteSet::product(s, FiniteSet::product(a, b));
  FiniteSet dst = FiniteSet::product(s, FiniteSet::product(a, b2));
  FiniteFun fun = FiniteFun::from_fn(src, dst, [&](const Atom& x) {
    const Atom& st = x.first();
    const Atom& aa = x.second().first();
    const Atom& bb = x.second().second();
    Atom img = gf(Atom::pair(st, bb));
    return Atom::pair(img.first(), Atom::pair(aa, img.second()));
  });
  return mk_state_cell(FiniteSet::product(a, b), FiniteSet::product(a, b2),
                       fun, s);
}

OneCell state_wr(const FiniteSet& s, const OneCell& f, const FiniteSet& b) {
  // S x (A x B) -> (S x A) x B -> (S x A') x B -> S x (A' x B)
  const FiniteFun& ff = state_fun_of(f);
  const FiniteSet& a = kset(f.src);
  const FiniteSet& a2 = kset(f.dst);
  FiniteSet src = FiniteSet::product(s, FiniteSet::product(a, b));
  FiniteSet dst = FiniteSet::product(s, FiniteSet::product(a2, b));
  FiniteFun fun = FiniteFun::from_fn(src, dst, [&](const Atom& x) {
    const Atom& st = x.first();
    const Atom& aa = x.second().first();
    const Atom& bb = x.second().second();
    Atom img = ff(Atom::pair(st, aa));
    return Atom::pair(img.first(), Atom::pair(img.second(), bb));
  });
  return mk_state_cell(FiniteSet::product(a, b), FiniteSet::product(a2, b),
                       fun, s);
}

TwoCell strict_cell2(Bicategory::Ptr b, const OneCell& lhs,
                     const OneCell& rhs, const char* what) {
  if (lhs != rhs)
    throw InvalidValue(std::string("state structural equality fails: ") +
                       what);
  return b->id2(lhs);
}

OneCell state_of_fun(const FiniteSet& s, const FiniteFun& f) {
  FiniteSet dom = FiniteSet::product(s, f.dom());
  FiniteSet cod = FiniteSet::product(s, f.cod());
  FiniteFun fun = FiniteFun::from_fn(dom, cod, [&](const Atom& x) {
    return Atom::pair(x.first(), f(x.second()));
  });
  return mk_state_cell(f.dom(), f.cod(), fun, s);
}

}  // namespace

CentralOneCell state_value_central(const FiniteSet& s, const FiniteFun& f) {
  CentralOneCell c;
  c.cell = state_of_fun(s, f);
  OneCell jf = c.cell;
  Bicategory::Ptr B = state_bicat(s);
  FiniteSet sv = s;
  c.lc = [jf, B, sv](const OneCell& g) {
    OneCell lhs = B->compose1(state_wr(sv, jf, kset(g.dst)),
                              state_wl(sv, kset(jf.src), g));
    OneCell rhs = B->compose1(state_wl(sv, kset(jf.dst), g),
                              state_wr(sv, jf, kset(g.src)));
    return strict_cell2(B, lhs, rhs, "value lc witness");
  };
  c.rc = [jf, B, sv](const OneCell& g) {
    OneCell lhs = B->compose1(state_wl(sv, kset(g.dst), jf),
                              state_wr(sv, g, kset(jf.src)));
    OneCell rhs = B->compose1(state_wr(sv, g, kset(jf.dst)),
                              state_wl(sv, kset(g.src), jf));
    return strict_cell2(B, lhs, rhs, "value rc witness");
  };
  return c;
}

PremonoidalStructure state_premonoidal(const FiniteSet& s) {
  PremonoidalStructure p;
  Bicategory::Ptr B = state_bicat(s);
  p.bin.B = B;
  FiniteSet sv = s;
  p.bin.ten_obj = [](const Obj& a, const Obj& b) {
    return Obj{Value::of(FiniteSet::product(kset(a), kset(b)))};
  };
  p.bin.act_l = [B, sv](const Obj& a) {
    FiniteSet as = kset(a);
    return strict_psf(
        B, B, "state-actl",
        [as](const Obj& x) {
          return Obj{Value::of(FiniteSet::product(as, kset(x)))};
        },
        [as, sv](const OneCell& g) { return state_wl(sv, as, g); },
        [as, sv, B](const TwoCell& t) {
          return B->id2(state_wl(sv, as, t.src));
        });
  };
  p.bin.act_r = [B, sv](const Obj& b) {
    FiniteSet bs = kset(b);
    return strict_psf(
        B, B, "state-actr",
        [bs](const Obj& x) {
          return Obj{Value::of(FiniteSet::product(kset(x), bs))};
        },
        [bs, sv](const OneCell& f) { return state_wr(sv, f, bs); },
        [bs, sv, B](const TwoCell& t) {
          return B->id2(state_wr(sv, t.src, bs));
        });
  };
  p.unit = Obj{Value::of(FiniteSet::range(1))};
  FiniteSet us = FiniteSet::range(1);

  auto adjoint_of = [B, sv](const FiniteFun& bij) {
    auto inv = bij.inverse();
    if (!inv) throw NotInvertible("structural map must be a bijection");
    OneCell fwd = state_of_fun(sv, bij);
    OneCell bwd = state_of_fun(sv, *inv);
    TwoCell u = strict_cell2(B, B->id1(fwd.src), B->compose1(bwd, fwd),
                             "adjoint unit");
    TwoCell c = strict_cell2(B, B->compose1(fwd, bwd), B->id1(fwd.dst),
                             "adjoint counit");
    return AdjointEquivalence{B, fwd, bwd, u, c};
  };
  p.lunit_adj = [adjoint_of, us](const Obj& a) {
    return adjoint_of(lunit_fun(us, kset(a)));
  };
  p.lunit_central = [sv, us](const Obj& a) {
    return state_value_central(sv, lunit_fun(us, kset(a)));
  };
  p.lunit_nat = [B, sv, us](const OneCell& g) {
    OneCell lam = state_of_fun(sv, lunit_fun(us, kset(g.src)));
    OneCell lam2 = state_of_fun(sv, lunit_fun(us, kset(g.dst)));
    return strict_cell2(B, B->compose1(g, lam),
                        B->compose1(lam2, state_wl(sv, us, g)),
                        "left unitor naturality");
  };
  p.runit_adj = [adjoint_of, us](const Obj& a) {
    return adjoint_of(runit_fun(kset(a), us));
  };
  p.runit_central = [sv, us](const Obj& a) {
    return state_value_central(sv, runit_fun(kset(a), us));
  };
  p.runit_nat = [B, sv, us](const OneCell& f) {
    OneCell rho = state_of_fun(sv, runit_fun(kset(f.src), us));
    OneCell rho2 = state_of_fun(sv, runit_fun(kset(f.dst), us));
    return strict_cell2(B, B->compose1(f, rho),
                        B->compose1(rho2, state_wr(sv, f, us)),
                        "right unitor naturality");
  };
  p.assoc_adj = [adjoint_of](const Obj& a, const Obj& b, const Obj& c) {
    return adjoint_of(rebracket_fun(kset(a), kset(b), kset(c)));
  };
  p.assoc_central = [sv](const Obj& a, const Obj& b, const Obj& c) {
    return state_value_central(sv,
                               rebracket_fun(kset(a), kset(b), kset(c)));
  };
  p.assoc_nat_l = [B, sv](const OneCell& f, const Obj& b, const Obj& c) {
    OneCell al = state_of_fun(sv, rebracket_fun(kset(f.src), kset(b),
                                                kset(c)));
    OneCell al2 = state_of_fun(sv, rebracket_fun(kset(f.dst), kset(b),
                                                 kset(c)));
    FiniteSet bc = FiniteSet::product(kset(b), kset(c));
    return strict_cell2(
        B, B->compose1(state_wr(sv, f, bc), al),
        B->compose1(al2, state_wr(sv, state_wr(sv, f, kset(b)), kset(c))),
        "associator naturality (first)");
  };
  p.assoc_nat_m = [B, sv](const Obj& a, const OneCell& g, const Obj& c) {
    OneCell al = state_of_fun(sv, rebracket_fun(kset(a), kset(g.src),
                                                kset(c)));
    OneCell al2 = state_of_fun(sv, rebracket_fun(kset(a), kset(g.dst),
                                                 kset(c)));
    return strict_cell2(
        B,
        B->compose1(state_wl(sv, kset(a), state_wr(sv, g, kset(c))), al),
        B->compose1(al2, state_wr(sv, state_wl(sv, kset(a), g), kset(c))),
        "associator naturality (middle)");
  };
  p.assoc_nat_r = [B, sv](const Obj& a, const Obj& b, const OneCell& h) {
    OneCell al = state_of_fun(sv, rebracket_fun(kset(a), kset(b),
                                                kset(h.src)));
    OneCell al2 = state_of_fun(sv, rebracket_fun(kset(a), kset(b),
                                                 kset(h.dst)));
    FiniteSet ab = FiniteSet::product(kset(a), kset(b));
    return strict_cell2(
        B, B->compose1(state_wl(sv, kset(a), state_wl(sv, kset(b), h)), al),
        B->compose1(al2, state_wl(sv, ab, h)),
        "associator naturality (last)");
  };
  p.pent = [B, sv](const Obj& a, const Obj& b, const Obj& c, const Obj& d) {
    auto reb = [&](const FiniteSet& x, const FiniteSet& y,
                   const FiniteSet& z) {
      return state_of_fun(sv, rebracket_fun(x, y, z));
    };
    FiniteSet as = kset(a), bs = kset(b), cs = kset(c), ds = kset(d);
    OneCell a1 = state_wr(sv, reb(as, bs, cs), ds);
    OneCell a2 = reb(as, FiniteSet::product(bs, cs), ds);
    OneCell a3 = state_wl(sv, as, reb(bs, cs, ds));
    OneCell src = B->compose1(a3, B->compose1(a2, a1));
    OneCell dst = B->compose1(reb(as, bs, FiniteSet::product(cs, ds)),
                              reb(FiniteSet::product(as, bs), cs, ds));
    return strict_cell2(B, src, dst, "pentagon");
  };
  p.mid = [B, sv, us](const Obj& a, const Obj& b) {
    FiniteSet as = kset(a), bs = kset(b);
    OneCell src = B->compose1(
        state_wl(sv, as, state_of_fun(sv, lunit_fun(us, bs))),
        state_of_fun(sv, rebracket_fun(as, us, bs)));
    OneCell dst = state_wr(sv, state_of_fun(sv, runit_fun(as, us)), bs);
    return strict_cell2(B, src, dst, "middle unitor");
  };
  p.lun = [B, sv, us](const Obj& a, const Obj& b) {
    FiniteSet as = kset(a), bs = kset(b);
    OneCell src = state_wr(sv, state_of_fun(sv, lunit_fun(us, as)), bs);
    OneCell dst = B->compose1(
        state_of_fun(sv, lunit_fun(us, FiniteSet::product(as, bs))),
        state_of_fun(sv, rebracket_fun(us, as, bs)));
    return strict_cell2(B, src, dst, "left unitor modification");
  };
  p.run = [B, sv, us](const Obj& a, const Obj& b) {
    FiniteSet as = kset(a), bs = kset(b);
    OneCell src = state_of_fun(sv, runit_fun(FiniteSet::product(as, bs), us));
    OneCell dst = B->compose1(
        state_wl(sv, as, state_of_fun(sv, runit_fun(bs, us))),
        state_of_fun(sv, rebracket_fun(as, bs, us)));
    return strict_cell2(B, src, dst, "right unitor modification");
  };
  return p;
}

FreydStructure state_freyd(const FiniteSet& s) {
  FreydStructure f;
  f.jp.V = finfun_monoidal();
  f.jp.P = state_premonoidal(s);
  Bicategory::Ptr V = f.jp.V.B;
  Bicategory::Ptr K = f.jp.P.bin.B;
  FiniteSet sv = s;

  f.jp.J = strict_psf(
      V, K, "J-state", [](const Obj& a) { return a; },
      [sv](const OneCell& c) { return state_of_fun(sv, fun_of(c)); },
      [sv, K](const TwoCell& t) {
        return K->id2(state_of_fun(sv, fun_of(t.src)));
      });

  Pseudofunctor J = f.jp.J;
  PremonoidalStructure P = f.jp.P;
  MonoidalStructure Vm = f.jp.V;
  f.jp.theta = [J, P, Vm, K](const Obj& a) {
    Icon icon;
    icon.F = compose_psf(P.bin.act_l(a), J);
    icon.G = compose_psf(J, tensor_fix_left(Vm, a));
    icon.label = "theta";
    icon.at = [icon, K](const OneCell& c) {
      OneCell lhs = icon.F.on_1(c);
      OneCell rhs = icon.G.on_1(c);
      if (lhs != rhs)
        throw InvalidValue("theta components must be identities here");
      return K->id2(lhs);
    };
    return icon;
  };
  f.jp.zeta = [J, P, Vm, K](const Obj& a) {
    Icon icon;
    icon.F = compose_psf(P.bin.act_r(a), J);
    icon.G = compose_psf(J, tensor_fix_right(Vm, a));
    icon.label = "zeta";
    icon.at = [icon, K](const OneCell& c) {
      OneCell lhs = icon.F.on_1(c);
      OneCell rhs = icon.G.on_1(c);
      if (lhs != rhs)
        throw InvalidValue("zeta components must be identities here");
      return K->id2(lhs);
    };
    return icon;
  };
  f.central = [sv](const OneCell& c) {
    return state_value_central(sv, fun_of(c));
  };
  return f;
}

}  // namespace bicheck
