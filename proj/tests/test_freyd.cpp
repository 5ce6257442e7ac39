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

}  // namespace

TEST_CASE("copara Freyd structure satisfies all the axioms") {
  FreydStructure fr = copara_freyd();
  Bounds b;
  b.max_size = 2;
  b.max_grade = 2;
  CheckCtx vctx;
  vctx.sampler = finfun_sampler(b);
  vctx.seed = 99;
  vctx.samples = 10;
  vctx.threshold = 300;
  CheckCtx bctx = vctx;
  bctx.sampler = graded_sampler(b);
  expect_all_pass(freyd_laws(vctx, bctx, fr));
}

TEST_CASE("state Freyd structure satisfies all the axioms") {
  FiniteSet s = FiniteSet::range(2);
  FreydStructure fr = state_freyd(s);
  Bounds b;
  b.max_size = 2;
  CheckCtx vctx;
  vctx.sampler = finfun_sampler(b);
  vctx.seed = 11;
  vctx.samples = 10;
  vctx.threshold = 300;
  CheckCtx bctx = vctx;
  bctx.sampler = state_sampler(s, b);
  expect_all_pass(freyd_laws(vctx, bctx, fr));
}

TEST_CASE("a swapped axiom-3 witness is rejected with a typing failure") {
  FreydStructure fr = copara_freyd();
  FreydStructure broken = fr;
  broken.central = [fr](const OneCell& v) {
    CentralOneCell c = fr.central(v);
    CentralOneCell swapped = c;
    // lc^{Jx}_{g} answered by the lc of the *other* cell: wrong boundaries
    swapped.lc = [fr, v](const OneCell& g) {
      // interpret g as a value when possible; otherwise fall back
      CentralOneCell cg = copara_pure_central(
          FiniteFun::identity(g.src.v.as<FiniteSet>()));
      (void)cg;
      CentralOneCell mine = fr.central(v);
      return mine.rc(g);  // rc instead of (rc)^{-1}-matched lc
    };
    return swapped;
  };
  Bounds b;
  b.max_size = 2;
  b.max_grade = 2;
  CheckCtx vctx;
  vctx.sampler = finfun_sampler(b);
  vctx.seed = 5;
  vctx.samples = 12;
  vctx.threshold = 300;
  CheckCtx bctx = vctx;
  bctx.sampler = graded_sampler(b);
  bool axiom3_failed = false;
  for (const auto& r : execute_laws(freyd_laws(vctx, bctx, broken),
                                    ExecPolicy::Parallel)) {
    if (r.id.rfind("freyd.axiom3", 0) == 0 && !r.passed) axiom3_failed = true;
  }
  CHECK(axiom3_failed);
}
