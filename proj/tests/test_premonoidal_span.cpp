#include <doctest.h>

#include "bicheck/instances/span.hpp"
#include "bicheck/structures/centre.hpp"
#include "bicheck/structures/premonoidal.hpp"

using namespace bicheck;

namespace {

CheckCtx span_ctx(std::size_t samples, int max_size = 2, int max_apex = 2) {
  Bounds b;
  b.max_size = max_size;
  b.max_apex = max_apex;
  CheckCtx ctx;
  ctx.sampler = span_sampler(b);
  ctx.seed = 7351;
  ctx.samples = samples;
  ctx.threshold = 2000;
  return ctx;
}

CentralGen span_central_gen(const MonoidalStructure& m,
                            std::shared_ptr<const InstanceSampler> sampler) {
  CentralGen gen;
  gen.free = [m, sampler](Rng& rng) {
    return canonical_central(m, sampler->chain(rng, 1)[0]);
  };
  gen.at = [m, sampler](Rng& rng, const Obj& a, const Obj& b) {
    auto f = sampler->one(rng, a, b);
    if (!f) throw InvalidValue("no span with the requested endpoints");
    return canonical_central(m, *f);
  };
  return gen;
}

}  // namespace

TEST_CASE("monoidal laws hold for the cartesian structure on spans") {
  MonoidalStructure m = span_monoidal();
  auto laws = monoidal_laws(span_ctx(18), m);
  for (const auto& r : execute_laws(laws, ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}

TEST_CASE("canonical centrality witnesses pass the pseudonaturality laws") {
  MonoidalStructure m = span_monoidal();
  BinoidalStructure bin = canonical_binoidal(m);
  CheckCtx ctx = span_ctx(15);
  auto gen = span_central_gen(m, ctx.sampler);
  auto laws = central_1cell_laws(ctx, bin, gen.free, "span-random",
                                 "components of pseudonatural transformations");
  for (const auto& r : execute_laws(laws, ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}

TEST_CASE("promote_to_adjoint") {
  MonoidalStructure m = span_monoidal();
  Bicategory::Ptr B = m.B;
  Rng rng(5);
  auto sampler = span_ctx(1).sampler;

  SUBCASE("idempotent on adjoint data: the counit is returned unchanged") {
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
      Obj a = sampler->obj(rng);
      Obj b = sampler->obj(rng);
      Obj c = sampler->obj(rng);
      for (AdjointEquivalence e :
           {m.lunit(a), m.runit(a), m.assoc(a, b, c)}) {
        AdjointEquivalence again =
            promote_to_adjoint(B, e.fwd, e.bwd, e.unit, e.counit);
        CHECK(again.counit == e.counit);
        CHECK_FALSE(adjoint_equivalence_failure(again).has_value());
        ++checked;
      }
    }
    CHECK(checked >= 30);
  }

  SUBCASE("output of the identity equivalence is the identity data") {
    Obj a = span_obj(FiniteSet::range(2));
    AdjointEquivalence e = identity_adjoint(B, a);
    AdjointEquivalence again =
        promote_to_adjoint(B, e.fwd, e.bwd, e.unit, e.counit);
    CHECK(again.fwd == e.fwd);
    CHECK(again.bwd == e.bwd);
    CHECK(again.unit == e.unit);
    CHECK(again.counit == e.counit);
  }

  SUBCASE("an ill-formed counit is rejected, not silently promoted") {
    // In this instance every invertible 2-cell out of f o f* is forced, so
    // a triangle-breaking perturbation cannot commute with the legs; the
    // machinery refuses it instead of producing an unsound equivalence.
    Obj a = span_obj(FiniteSet::range(2));
    AdjointEquivalence e = m.lunit(a);
    const SpanData& sd = span_of(e.counit.src);
    REQUIRE(sd.apex.size() >= 2);
    FiniteFun rot = FiniteFun::from_fn(sd.apex, sd.apex, [&](const Atom& x) {
      auto idx = *sd.apex.index_of(x);
      return sd.apex.at((idx + 1) % sd.apex.size());
    });
    TwoCell bad = mk_span_mor(e.counit.src, e.counit.src, rot, /*raw=*/true);
    TwoCell perturbed = B->vcomp(e.counit, bad);
    CHECK(B->validate2(perturbed).has_value());
    AdjointEquivalence broken{B, e.fwd, e.bwd, e.unit, perturbed};
    CHECK(adjoint_equivalence_failure(broken).has_value());
    CHECK_THROWS_AS(
        promote_to_adjoint(B, e.fwd, e.bwd, e.unit, perturbed), Error);
  }
}

TEST_CASE("span premonoidal core suite passes") {
  MonoidalStructure m = span_monoidal();
  PremonoidalStructure p = premonoidal_from_monoidal(m);
  CheckCtx ctx = span_ctx(8);
  auto gen = span_central_gen(m, ctx.sampler);
  auto laws = premonoidal_laws(ctx, p, gen);
  for (const auto& r : execute_laws(laws, ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}

TEST_CASE("centre of the span premonoidal structure is a bicategory") {
  MonoidalStructure m = span_monoidal();
  PremonoidalStructure p = premonoidal_from_monoidal(m);
  CheckCtx ctx = span_ctx(10);
  auto inner = ctx.sampler;

  class CentreSampler final : public InstanceSampler {
   public:
    CentreSampler(PremonoidalStructure p, MonoidalStructure m,
                  std::shared_ptr<const InstanceSampler> inner)
        : p_(std::move(p)), m_(std::move(m)), inner_(std::move(inner)) {
      b_ = centre_bicat(p_);
    }
    Bicategory::Ptr bicat() const override { return b_; }
    Obj obj(Rng& rng) const override { return inner_->obj(rng); }
    std::optional<OneCell> one(Rng& rng, const Obj& a,
                               const Obj& b) const override {
      auto f = inner_->one(rng, a, b);
      if (!f) return std::nullopt;
      return centre_cell(canonical_central(m_, *f));
    }
    TwoCell two_from(Rng& rng, const OneCell& f) const override {
      TwoCell t = inner_->two_from(rng, central_of(f).cell);
      return TwoCell{f, centre_cell(canonical_central(m_, t.dst)), t.v};
    }
    std::vector<Obj> universe() const override { return inner_->universe(); }

   private:
    PremonoidalStructure p_;
    MonoidalStructure m_;
    std::shared_ptr<const InstanceSampler> inner_;
    Bicategory::Ptr b_;
  };

  CheckCtx cctx = ctx;
  cctx.samples = 8;
  cctx.sampler = std::make_shared<CentreSampler>(p, m, inner);
  for (const auto& r :
       execute_laws(bicategory_laws(cctx), ExecPolicy::Parallel)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}
