#include <doctest.h>

#include "bicheck/actions/correspondence.hpp"
#include "bicheck/instances/builders.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/graded.hpp"

using namespace bicheck;

namespace {

struct Ctxs {
  CheckCtx vctx, bctx;
};

Ctxs copara_ctxs(std::uint64_t seed, std::size_t samples) {
  Bounds b;
  b.max_size = 2;
  b.max_grade = 2;
  CheckCtx vctx;
  vctx.sampler = finfun_sampler(b);
  vctx.seed = seed;
  vctx.samples = samples;
  vctx.threshold = 200;
  CheckCtx bctx = vctx;
  bctx.sampler = graded_sampler(b);
  return {vctx, bctx};
}

Ctxs state_ctxs(const FiniteSet& s, std::uint64_t seed,
                std::size_t samples) {
  Bounds b;
  b.max_size = 2;
  CheckCtx vctx;
  vctx.sampler = finfun_sampler(b);
  vctx.seed = seed;
  vctx.samples = samples;
  vctx.threshold = 200;
  CheckCtx bctx = vctx;
  bctx.sampler = state_sampler(s, b);
  return {vctx, bctx};
}

void expect_all_pass(const std::vector<LawRun>& laws) {
  for (const auto& r : execute_laws(laws, ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump().substr(0, 600));
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("the actions derived from the copara Freyd structure are actions") {
  auto [vctx, bctx] = copara_ctxs(21, 6);
  FreydStructure fr = copara_freyd();
  LeftAction l = freyd_to_left_action(fr);
  expect_all_pass(left_action_laws(vctx, bctx, l));
  RightAction r = freyd_to_right_action(fr);
  expect_all_pass(right_action_laws(vctx, bctx, r));
}

TEST_CASE("freyd_to_action(copara) is a Freyd action") {
  auto [vctx, bctx] = copara_ctxs(22, 6);
  FreydAction fa = freyd_to_action(copara_freyd());
  expect_all_pass(freyd_action_laws(vctx, bctx, fa));
}

TEST_CASE("action_to_freyd(freyd_to_action(copara)) passes the Freyd suite") {
  auto [vctx, bctx] = copara_ctxs(23, 5);
  FreydStructure fr = action_to_freyd(freyd_to_action(copara_freyd()));
  expect_all_pass(freyd_laws(vctx, bctx, fr));
}

TEST_CASE("round trips on the copara instance") {
  auto [vctx, bctx] = copara_ctxs(24, 8);
  SUBCASE("FG on the Freyd structure") {
    expect_all_pass(roundtrip_freyd_laws(vctx, bctx, copara_freyd()));
  }
  SUBCASE("GF on the derived action") {
    expect_all_pass(
        roundtrip_action_laws(vctx, bctx, freyd_to_action(copara_freyd())));
  }
  SUBCASE("functors preserve identities and validity") {
    expect_all_pass(functor_laws(vctx, bctx, copara_freyd()));
  }
}

TEST_CASE("round trips on the state instance") {
  FiniteSet s = FiniteSet::range(2);
  auto [vctx, bctx] = state_ctxs(s, 31, 6);
  FreydStructure fr = state_freyd(s);
  expect_all_pass(freyd_action_laws(vctx, bctx, freyd_to_action(fr)));
  expect_all_pass(roundtrip_freyd_laws(vctx, bctx, fr));
  expect_all_pass(
      roundtrip_action_laws(vctx, bctx, freyd_to_action(fr)));
}

TEST_CASE("strict cartesian self-action round trip is strict") {
  // canonical self-action data of the locally-discrete cartesian values:
  // building the Freyd action over J = identity via the state instance with
  // a singleton state set, where everything collapses strictly
  FiniteSet s = FiniteSet::range(1);
  auto [vctx, bctx] = state_ctxs(s, 41, 6);
  FreydStructure fr = state_freyd(s);
  FreydAction fa = freyd_to_action(fr);
  // kappa components are literally J(alpha)
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    Obj a = vctx.sampler->obj(rng);
    Obj b = vctx.sampler->obj(rng);
    Obj c = vctx.sampler->obj(rng);
    CHECK(fa.kappa(a, b, c).fwd ==
          fr.jp.J.on_1(fr.jp.V.assoc(a, b, c).fwd));
  }
  expect_all_pass(freyd_action_laws(vctx, bctx, fa));
}

TEST_CASE("a transposed kappa component breaks the Def. 22 equation") {
  auto [vctx, bctx] = copara_ctxs(25, 10);
  FreydAction fa = freyd_to_action(copara_freyd());
  FreydAction broken = fa;
  broken.kappa_nat = [fa](const OneCell& f, const OneCell& b,
                          const OneCell& h) {
    return fa.kappa_nat(h, b, f);  // roles of the outer values swapped
  };
  bool failed = false;
  for (const auto& r :
       execute_laws(freyd_action_laws(vctx, bctx, broken),
                    ExecPolicy::Parallel)) {
    if (!r.passed && (r.id == "freyd-action.kappa-compat" ||
                      r.id == "freyd-action.kappa-pseudonatural"))
      failed = true;
  }
  CHECK(failed);
}
