#include <doctest.h>

#include "bicheck/core/sampler.hpp"
#include "bicheck/instances/graded.hpp"

using namespace bicheck;

TEST_CASE("composition grade convention: g after f has grade e_g x e_f") {
  // f: {0,1} -> {0} x {a,b}  with grades {0,1} playing a,b
  FiniteSet two = FiniteSet::range(2), one = FiniteSet::range(1);
  FiniteSet ef = FiniteSet::range(2);
  FiniteFun fmap = FiniteFun::from_fn(
      two, FiniteSet::product(one, ef),
      [](const Atom& x) { return Atom::pair(Atom(0), x); });
  OneCell f = mk_graded(two, one, GradedData{ef, fmap});
  // g: {0} -> {0} x {c}
  FiniteSet eg = FiniteSet::range(1);
  FiniteFun gmap = FiniteFun::from_fn(
      one, FiniteSet::product(one, eg),
      [](const Atom&) { return Atom::pair(Atom(0), Atom(0)); });
  OneCell g = mk_graded(one, one, GradedData{eg, gmap});

  OneCell gf = graded_bicat()->compose1(g, f);
  const GradedData& d = graded_of(gf);
  CHECK(d.grade == FiniteSet::product(eg, ef));
  // pointwise: x maps to (0, (c, x))
  CHECK(d.map(Atom(1)) ==
        Atom::pair(Atom(0), Atom::pair(Atom(0), Atom(1))));
}

TEST_CASE("unit laws hold only up to the unitor re-grading") {
  Rng rng(99);
  auto sampler = graded_sampler(Bounds{});
  auto B = graded_bicat();
  for (int i = 0; i < 50; ++i) {
    OneCell f = sampler->chain(rng, 1)[0];
    OneCell idf = B->compose1(B->id1(f.dst), f);
    // weak law: the composite differs whenever the grade is inhabited
    if (!graded_of(f).grade.empty()) CHECK(idf != f);
    TwoCell ru = B->lunitor(f);
    CHECK(B->validate2(ru) == std::nullopt);
    CHECK(B->invert(ru).has_value());
  }
}

TEST_CASE("re-grading condition is validated on construction") {
  FiniteSet two = FiniteSet::range(2);
  FiniteSet e = FiniteSet::range(2);
  FiniteFun fmap = FiniteFun::from_fn(
      two, FiniteSet::product(two, e),
      [](const Atom& x) { return Atom::pair(x, Atom(0)); });
  OneCell f = mk_graded(two, two, GradedData{e, fmap});
  // pushforward along swap gives a legal 2-cell
  FiniteFun swap = FiniteFun::from_fn(
      e, e, [](const Atom& x) { return Atom(1 - x.num()); });
  FiniteFun push = FiniteFun::product(FiniteFun::identity(two), swap);
  OneCell f2 = mk_graded(two, two, GradedData{e, push.after(fmap)});
  CHECK_NOTHROW(mk_regrade(f, f2, swap));
  // the identity re-grading against f2 violates the condition
  CHECK_THROWS_AS(mk_regrade(f, f2, FiniteFun::identity(e)), InvalidValue);
}

TEST_CASE("pure cells compose up to the unitor re-grading") {
  auto B = graded_bicat();
  FiniteSet two = FiniteSet::range(2);
  FiniteFun f = FiniteFun::from_fn(
      two, two, [](const Atom& x) { return Atom(1 - x.num()); });
  FiniteFun g = FiniteFun::from_fn(two, two, [](const Atom&) {
    return Atom(0);
  });
  OneCell pf = graded_pure_cell(f);
  OneCell pg = graded_pure_cell(g);
  OneCell comp = B->compose1(pg, pf);
  OneCell pure_comp = graded_pure_cell(g.after(f));
  CHECK(comp != pure_comp);
  // the comparison re-grading I x I -> I is the unitor
  FiniteFun gamma = lunit_fun(unit_grade(), unit_grade());
  CHECK_NOTHROW(mk_regrade(comp, pure_comp, gamma));
}
