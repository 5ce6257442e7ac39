#include <doctest.h>

#include "bicheck/instances/builders.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/graded.hpp"

using namespace bicheck;

namespace {

void expect_all_pass(const std::vector<LawRun>& laws) {
  for (const auto& r : execute_laws(laws, ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}

FiniteFun random_fun(Rng& rng, const FiniteSet& dom, const FiniteSet& cod) {
  return FiniteFun::from_fn(dom, cod, [&](const Atom&) {
    return cod.at(rng.below(cod.size()));
  });
}

CentralGen copara_gen(const Bounds& b) {
  CentralGen gen;
  int max_size = b.max_size;
  gen.free = [max_size](Rng& rng) {
    FiniteSet a = FiniteSet::range(1 + rng.below(max_size));
    FiniteSet b2 = FiniteSet::range(1 + rng.below(max_size));
    return copara_pure_central(random_fun(rng, a, b2));
  };
  gen.at = [](Rng& rng, const Obj& a, const Obj& b2) {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b2.v.as<FiniteSet>();
    if (sb.empty() && !sa.empty())
      throw InvalidValue("no pure cell into the empty set");
    return copara_pure_central(random_fun(rng, sa, sb));
  };
  return gen;
}

CentralGen state_gen(const FiniteSet& s, const Bounds& b) {
  CentralGen gen;
  int max_size = b.max_size;
  FiniteSet sv = s;
  gen.free = [max_size, sv](Rng& rng) {
    FiniteSet a = FiniteSet::range(1 + rng.below(max_size));
    FiniteSet b2 = FiniteSet::range(1 + rng.below(max_size));
    return state_value_central(sv, random_fun(rng, a, b2));
  };
  gen.at = [sv](Rng& rng, const Obj& a, const Obj& b2) {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b2.v.as<FiniteSet>();
    if (sb.empty() && !sa.empty())
      throw InvalidValue("no function into the empty set");
    return state_value_central(sv, random_fun(rng, sa, sb));
  };
  return gen;
}

}  // namespace

TEST_CASE("copara whiskering is strict and matches pure products") {
  PremonoidalStructure p = copara_premonoidal();
  Bicategory::Ptr B = p.bin.B;
  Rng rng(31);
  Bounds bounds;
  auto sampler = graded_sampler(bounds);
  for (int i = 0; i < 40; ++i) {
    auto cells = sampler->chain(rng, 2);
    Obj a = sampler->obj(rng);
    Pseudofunctor actl = p.bin.act_l(a);
    // strictness checked inside the strict pseudofunctor wrapper
    CHECK(actl.compositor(cells[1], cells[0]).v ==
          B->id2(actl.on_1(B->compose1(cells[1], cells[0]))).v);
    CHECK(actl.unit(cells[0].src).v == B->id2(actl.on_1(B->id1(cells[0].src))).v);
  }
  // whiskering a pure cell is the pure cell of the product map
  FiniteSet two = FiniteSet::range(2);
  FiniteFun f = FiniteFun::from_fn(two, two, [](const Atom& x) {
    return Atom(1 - x.num());
  });
  OneCell pf = graded_pure_cell(f);
  OneCell whiskered = p.bin.wl(graded_obj(two), pf);
  OneCell expected = graded_pure_cell(
      FiniteFun::product(FiniteFun::identity(two), f));
  CHECK(whiskered == expected);
}

TEST_CASE("copara premonoidal core suite passes") {
  PremonoidalStructure p = copara_premonoidal();
  Bounds bounds;
  bounds.max_size = 2;
  bounds.max_grade = 2;
  CheckCtx ctx;
  ctx.sampler = graded_sampler(bounds);
  ctx.seed = 4242;
  ctx.samples = 8;
  ctx.threshold = 500;
  expect_all_pass(premonoidal_laws(ctx, p, copara_gen(bounds)));
}

TEST_CASE("state premonoidal core suite passes") {
  FiniteSet s = FiniteSet::range(2);
  PremonoidalStructure p = state_premonoidal(s);
  Bounds bounds;
  bounds.max_size = 2;
  CheckCtx ctx;
  ctx.sampler = state_sampler(s, bounds);
  ctx.seed = 77;
  ctx.samples = 8;
  ctx.threshold = 500;
  expect_all_pass(premonoidal_laws(ctx, p, state_gen(s, bounds)));
}

TEST_CASE("interchange fails for effectful cells in both instances") {
  SUBCASE("copara") {
    PremonoidalStructure p = copara_premonoidal();
    Bounds b;
    b.max_size = 2;
    b.max_grade = 2;
    auto w = find_interchange_failure(p.bin, *graded_sampler(b));
    REQUIRE(w.has_value());
    CHECK(w->left_then_right != w->right_then_left);
  }
  SUBCASE("state with two states") {
    FiniteSet s = FiniteSet::range(2);
    PremonoidalStructure p = state_premonoidal(s);
    Bounds b;
    b.max_size = 2;
    auto w = find_interchange_failure(p.bin, *state_sampler(s, b));
    REQUIRE(w.has_value());
  }
  SUBCASE("state over a singleton is degenerate-commutative") {
    FiniteSet s = FiniteSet::range(1);
    PremonoidalStructure p = state_premonoidal(s);
    Bounds b;
    b.max_size = 2;
    auto w = find_interchange_failure(p.bin, *state_sampler(s, b));
    CHECK_FALSE(w.has_value());
  }
}
