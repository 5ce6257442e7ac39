#include <doctest.h>

#include "bicheck/core/checkers.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/graded.hpp"
#include "bicheck/instances/product.hpp"

using namespace bicheck;

namespace {

CheckCtx ctx_for(std::shared_ptr<const InstanceSampler> s,
                 std::size_t samples = 40) {
  CheckCtx ctx;
  ctx.sampler = std::move(s);
  ctx.seed = 424242;
  ctx.samples = samples;
  ctx.threshold = 4000;
  return ctx;
}

void expect_all_pass(const std::vector<LawRun>& laws, ExecPolicy pol) {
  for (const auto& r : execute_laws(laws, pol)) {
    INFO(r.id, " ", r.counterexample.dump());
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("span bicategory satisfies the axioms on samples") {
  expect_all_pass(bicategory_laws(ctx_for(span_sampler(Bounds{}))),
                  ExecPolicy::Serial);
}

TEST_CASE("graded bicategory satisfies the axioms on samples") {
  expect_all_pass(bicategory_laws(ctx_for(graded_sampler(Bounds{}))),
                  ExecPolicy::Parallel);
}

TEST_CASE("state instance is a strict bicategory") {
  Bounds b;
  b.max_size = 2;
  expect_all_pass(
      bicategory_laws(ctx_for(state_sampler(FiniteSet::range(2), b))),
      ExecPolicy::Serial);
}

TEST_CASE("one-object identity-only instance passes trivially") {
  Bounds b;
  b.max_size = 1;
  auto laws = bicategory_laws(ctx_for(finfun_sampler(b), 10));
  expect_all_pass(laws, ExecPolicy::Serial);
}

TEST_CASE("parallel and serial execution produce identical reports") {
  auto laws = bicategory_laws(ctx_for(graded_sampler(Bounds{}), 30));
  auto serial = execute_laws(laws, ExecPolicy::Serial);
  auto parallel = execute_laws(laws, ExecPolicy::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].to_json(false) == parallel[i].to_json(false));
  }
}

TEST_CASE("a wrong associator breaks the pentagon") {
  // instance wrapper replacing the associator with a corrupted one
  class Broken final : public Bicategory {
   public:
    explicit Broken(Bicategory::Ptr inner) : b_(std::move(inner)) {}
    std::string name() const override { return "broken"; }
    OneCell id1(const Obj& a) const override { return b_->id1(a); }
    OneCell compose1(const OneCell& g, const OneCell& f) const override {
      return b_->compose1(g, f);
    }
    TwoCell id2(const OneCell& f) const override { return b_->id2(f); }
    TwoCell vcomp(const TwoCell& y, const TwoCell& x) const override {
      return b_->vcomp(y, x);
    }
    TwoCell whisker_l(const OneCell& h, const TwoCell& a) const override {
      return b_->whisker_l(h, a);
    }
    TwoCell whisker_r(const TwoCell& a, const OneCell& f) const override {
      return b_->whisker_r(a, f);
    }
    TwoCell associator(const OneCell& h, const OneCell& g,
                       const OneCell& f) const override {
      TwoCell a = b_->associator(h, g, f);
      const FiniteFun& m = regrade_of(a);
      if (m.dom().size() < 2) return a;
      // rotate the target grade
      const FiniteSet& cod = m.cod();
      FiniteFun rot = FiniteFun::from_fn(cod, cod, [&](const Atom& x) {
        auto i = *cod.index_of(x);
        return cod.at((i + 1) % cod.size());
      });
      return mk_regrade(a.src, a.dst, rot.after(m), /*raw=*/true);
    }
    TwoCell lunitor(const OneCell& f) const override { return b_->lunitor(f); }
    TwoCell runitor(const OneCell& f) const override { return b_->runitor(f); }
    std::optional<TwoCell> invert(const TwoCell& a) const override {
      return b_->invert(a);
    }
    std::optional<std::string> validate2(const TwoCell& a) const override {
      return b_->validate2(a);
    }

   private:
    Bicategory::Ptr b_;
  };

  class BrokenSampler final : public InstanceSampler {
   public:
    BrokenSampler(std::shared_ptr<const InstanceSampler> inner,
                  Bicategory::Ptr b)
        : inner_(std::move(inner)), b_(std::move(b)) {}
    Bicategory::Ptr bicat() const override { return b_; }
    Obj obj(Rng& rng) const override { return inner_->obj(rng); }
    std::optional<OneCell> one(Rng& rng, const Obj& a,
                               const Obj& b) const override {
      return inner_->one(rng, a, b);
    }
    TwoCell two_from(Rng& rng, const OneCell& f) const override {
      return inner_->two_from(rng, f);
    }
    std::vector<Obj> universe() const override { return inner_->universe(); }

   private:
    std::shared_ptr<const InstanceSampler> inner_;
    Bicategory::Ptr b_;
  };

  auto broken = std::make_shared<Broken>(graded_bicat());
  auto sampler =
      std::make_shared<BrokenSampler>(graded_sampler(Bounds{}), broken);
  auto laws = bicategory_laws(ctx_for(sampler, 60));
  bool pentagon_failed = false;
  for (const auto& r : execute_laws(laws, ExecPolicy::Serial)) {
    if (r.id == "bicat.pentagon") pentagon_failed = !r.passed;
  }
  CHECK(pentagon_failed);
}

TEST_CASE("product bicategory passes the axioms") {
  Bounds b;
  b.max_size = 2;
  b.max_grade = 2;
  b.max_apex = 2;
  auto l = graded_sampler(b);
  auto r = finfun_sampler(b);

  class ProductSampler final : public InstanceSampler {
   public:
    ProductSampler(std::shared_ptr<const InstanceSampler> l,
                   std::shared_ptr<const InstanceSampler> r)
        : l_(std::move(l)), r_(std::move(r)) {
      b_ = product_bicat(l_->bicat(), r_->bicat());
    }
    Bicategory::Ptr bicat() const override { return b_; }
    Obj obj(Rng& rng) const override {
      return pair_obj(l_->obj(rng), r_->obj(rng));
    }
    std::optional<OneCell> one(Rng& rng, const Obj& a,
                               const Obj& b) const override {
      auto f = l_->one(rng, obj_fst(a), obj_fst(b));
      auto g = r_->one(rng, obj_snd(a), obj_snd(b));
      if (!f || !g) return std::nullopt;
      return pair_cell(*f, *g);
    }
    TwoCell two_from(Rng& rng, const OneCell& f) const override {
      return pair_cell2(l_->two_from(rng, cell_fst(f)),
                        r_->two_from(rng, cell_snd(f)));
    }
    std::vector<Obj> universe() const override {
      std::vector<Obj> out;
      for (const auto& a : l_->universe())
        for (const auto& b : r_->universe()) out.push_back(pair_obj(a, b));
      return out;
    }

   private:
    std::shared_ptr<const InstanceSampler> l_, r_;
    Bicategory::Ptr b_;
  };

  auto sampler = std::make_shared<ProductSampler>(l, r);
  expect_all_pass(bicategory_laws(ctx_for(sampler, 25)), ExecPolicy::Serial);
}
