#include "bicheck/core/sampler.hpp"

#include "bicheck/core/errors.hpp"
#include "bicheck/instances/discrete.hpp"
#include "bicheck/instances/graded.hpp"
#include "bicheck/instances/product.hpp"
#include "bicheck/instances/span.hpp"

namespace bicheck {

std::vector<OneCell> InstanceSampler::chain(Rng& rng, int k) const {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Obj> objs;
    objs.push_back(obj(rng));
    std::vector<OneCell> cells;
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      Obj next = obj(rng);
      auto c = one(rng, objs.back(), next);
      if (!c) {
        ok = false;
        break;
      }
      objs.push_back(next);
      cells.push_back(*c);
    }
    if (ok) return cells;
  }
  throw InvalidValue("could not sample a composable chain");
}

TwoCell InstanceSampler::two(Rng& rng) const {
  return two_from(rng, chain(rng, 1)[0]);
}

namespace {

FiniteFun random_fun(Rng& rng, const FiniteSet& dom, const FiniteSet& cod) {
  return FiniteFun::from_fn(dom, cod, [&](const Atom&) {
    return cod.at(rng.below(cod.size()));
  });
}

std::vector<Obj> range_universe(int max_size) {
  std::vector<Obj> out;
  for (int n = 0; n <= max_size; ++n)
    out.push_back(Obj{Value::of(FiniteSet::range(n))});
  return out;
}

class SpanSampler final : public InstanceSampler {
 public:
  explicit SpanSampler(Bounds b) : b_(b) {}
  Bicategory::Ptr bicat() const override { return span_bicat(); }
  Obj obj(Rng& rng) const override {
    return span_obj(FiniteSet::range(
        static_cast<std::int64_t>(rng.below(b_.max_size + 1))));
  }
  std::optional<OneCell> one(Rng& rng, const Obj& a,
                             const Obj& b) const override {
    const FiniteSet& sa = set_of(a);
    const FiniteSet& sb = set_of(b);
    std::size_t apex_max = static_cast<std::size_t>(b_.max_apex);
    if (sa.empty() || sb.empty()) {
      // only the empty apex gives legs into an empty endpoint
      FiniteSet apex = FiniteSet::range(0);
      return mk_span(sa, sb,
                     SpanData{apex, FiniteFun(apex, sa, {}),
                              FiniteFun(apex, sb, {})});
    }
    FiniteSet apex =
        FiniteSet::range(static_cast<std::int64_t>(rng.below(apex_max + 1)));
    return mk_span(sa, sb, SpanData{apex, random_fun(rng, apex, sa),
                                    random_fun(rng, apex, sb)});
  }
  TwoCell two_from(Rng& rng, const OneCell& f) const override {
    // Map each apex element within its (left, right)-fiber class, possibly
    // into a freshly added element of the target span.
    const SpanData& s = span_of(f);
    std::size_t extra = rng.below(2);
    std::vector<Atom> tgt_atoms = s.apex.atoms();
    std::int64_t next_label = 1000;
    for (const Atom& a : s.apex.atoms())
      if (!a.is_pair() && a.num() >= next_label) next_label = a.num() + 1;
    for (std::size_t i = 0; i < extra && !set_of(f.src).empty() &&
                            !set_of(f.dst).empty();
         ++i) {
      tgt_atoms.push_back(Atom(next_label + static_cast<std::int64_t>(i)));
    }
    FiniteSet tgt_apex(tgt_atoms);
    const FiniteSet& src_o = set_of(f.src);
    const FiniteSet& dst_o = set_of(f.dst);
    FiniteFun left = FiniteFun::from_fn(tgt_apex, src_o, [&](const Atom& x) {
      if (s.apex.contains(x)) return s.left(x);
      return src_o.at(rng.below(src_o.size()));
    });
    FiniteFun right = FiniteFun::from_fn(tgt_apex, dst_o, [&](const Atom& x) {
      if (s.apex.contains(x)) return s.right(x);
      return dst_o.at(rng.below(dst_o.size()));
    });
    OneCell g = mk_span(src_o, dst_o, SpanData{tgt_apex, left, right});
    // class-preserving map: same leg values
    FiniteFun m = FiniteFun::from_fn(s.apex, tgt_apex, [&](const Atom& x) {
      std::vector<Atom> cls;
      for (const Atom& y : s.apex.atoms())
        if (s.left(y) == s.left(x) && s.right(y) == s.right(x))
          cls.push_back(y);
      return cls[rng.below(cls.size())];
    });
    return mk_span_mor(f, g, std::move(m));
  }
  std::vector<Obj> universe() const override {
    return range_universe(b_.max_size);
  }

 private:
  Bounds b_;
};

class GradedSampler final : public InstanceSampler {
 public:
  explicit GradedSampler(Bounds b) : b_(b) {}
  Bicategory::Ptr bicat() const override { return graded_bicat(); }
  Obj obj(Rng& rng) const override {
    return graded_obj(FiniteSet::range(
        static_cast<std::int64_t>(rng.below(b_.max_size + 1))));
  }
  std::optional<OneCell> one(Rng& rng, const Obj& a,
                             const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    for (int attempt = 0; attempt < 8; ++attempt) {
      FiniteSet grade = FiniteSet::range(
          static_cast<std::int64_t>(rng.below(b_.max_grade + 1)));
      FiniteSet cod = FiniteSet::product(sb, grade);
      if (cod.empty() && !sa.empty()) continue;
      return mk_graded(sa, sb, GradedData{grade, random_fun(rng, sa, cod)});
    }
    return std::nullopt;
  }
  TwoCell two_from(Rng& rng, const OneCell& f) const override {
    const GradedData& d = graded_of(f);
    FiniteSet grade2 = FiniteSet::range(
        static_cast<std::int64_t>(1 + rng.below(b_.max_grade)));
    FiniteFun g = random_fun(rng, d.grade, grade2);
    const FiniteSet& dst = f.dst.v.as<FiniteSet>();
    FiniteFun push = FiniteFun::product(FiniteFun::identity(dst), g);
    OneCell f2 = mk_graded(f.src.v.as<FiniteSet>(), dst,
                           GradedData{grade2, push.after(d.map)});
    return mk_regrade(f, f2, std::move(g));
  }
  std::vector<Obj> universe() const override {
    return range_universe(b_.max_size);
  }
  std::optional<std::vector<OneCell>> all_ones(const Obj& a,
                                               const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    std::vector<OneCell> out;
    for (int gs = 0; gs <= b_.max_grade; ++gs) {
      FiniteSet grade = FiniteSet::range(gs);
      FiniteSet cod = FiniteSet::product(sb, grade);
      std::int64_t n = count_functions(sa, cod);
      for (std::int64_t k = 0; k < n; ++k)
        out.push_back(
            mk_graded(sa, sb, GradedData{grade, nth_function(sa, cod, k)}));
    }
    return out;
  }

 private:
  Bounds b_;
};

class StateSampler final : public InstanceSampler {
 public:
  StateSampler(FiniteSet s, Bounds b) : s_(std::move(s)), b_(b) {
    bicat_ = state_bicat(s_);
  }
  Bicategory::Ptr bicat() const override { return bicat_; }
  Obj obj(Rng& rng) const override {
    return Obj{Value::of(FiniteSet::range(
        static_cast<std::int64_t>(rng.below(b_.max_size + 1))))};
  }
  std::optional<OneCell> one(Rng& rng, const Obj& a,
                             const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    FiniteSet dom = FiniteSet::product(s_, sa);
    FiniteSet cod = FiniteSet::product(s_, sb);
    if (cod.empty() && !dom.empty()) return std::nullopt;
    return mk_state_cell(sa, sb, random_fun(rng, dom, cod), s_);
  }
  TwoCell two_from(Rng&, const OneCell& f) const override {
    return bicat_->id2(f);
  }
  std::vector<Obj> universe() const override {
    return range_universe(b_.max_size);
  }
  std::optional<std::vector<OneCell>> all_ones(const Obj& a,
                                               const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    FiniteSet dom = FiniteSet::product(s_, sa);
    FiniteSet cod = FiniteSet::product(s_, sb);
    std::vector<OneCell> out;
    std::int64_t n = count_functions(dom, cod);
    for (std::int64_t k = 0; k < n; ++k)
      out.push_back(mk_state_cell(sa, sb, nth_function(dom, cod, k), s_));
    return out;
  }

 private:
  FiniteSet s_;
  Bounds b_;
  Bicategory::Ptr bicat_;
};

class FinFunSampler final : public InstanceSampler {
 public:
  explicit FinFunSampler(Bounds b) : b_(b) {}
  Bicategory::Ptr bicat() const override { return finfun_bicat(); }
  Obj obj(Rng& rng) const override {
    return Obj{Value::of(FiniteSet::range(
        static_cast<std::int64_t>(rng.below(b_.max_size + 1))))};
  }
  std::optional<OneCell> one(Rng& rng, const Obj& a,
                             const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    if (sb.empty() && !sa.empty()) return std::nullopt;
    return mk_fun_cell(random_fun(rng, sa, sb));
  }
  TwoCell two_from(Rng&, const OneCell& f) const override {
    return finfun_bicat()->id2(f);
  }
  std::vector<Obj> universe() const override {
    return range_universe(b_.max_size);
  }
  std::optional<std::vector<OneCell>> all_ones(const Obj& a,
                                               const Obj& b) const override {
    const FiniteSet& sa = a.v.as<FiniteSet>();
    const FiniteSet& sb = b.v.as<FiniteSet>();
    std::vector<OneCell> out;
    std::int64_t n = count_functions(sa, sb);
    for (std::int64_t k = 0; k < n; ++k)
      out.push_back(mk_fun_cell(nth_function(sa, sb, k)));
    return out;
  }

 private:
  Bounds b_;
};

}  // namespace

std::shared_ptr<const InstanceSampler> span_sampler(Bounds b) {
  return std::make_shared<SpanSampler>(b);
}
std::shared_ptr<const InstanceSampler> graded_sampler(Bounds b) {
  return std::make_shared<GradedSampler>(b);
}
std::shared_ptr<const InstanceSampler> state_sampler(const FiniteSet& s,
                                                     Bounds b) {
  return std::make_shared<StateSampler>(s, b);
}
std::shared_ptr<const InstanceSampler> finfun_sampler(Bounds b) {
  return std::make_shared<FinFunSampler>(b);
}

namespace {

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
  std::optional<std::vector<OneCell>> all_ones(const Obj& a,
                                               const Obj& b) const override {
    auto fs = l_->all_ones(obj_fst(a), obj_fst(b));
    auto gs = r_->all_ones(obj_snd(a), obj_snd(b));
    if (!fs || !gs) return std::nullopt;
    std::vector<OneCell> out;
    for (const auto& f : *fs)
      for (const auto& g : *gs) out.push_back(pair_cell(f, g));
    return out;
  }

 private:
  std::shared_ptr<const InstanceSampler> l_, r_;
  Bicategory::Ptr b_;
};

}  // namespace

std::shared_ptr<const InstanceSampler> product_sampler(
    std::shared_ptr<const InstanceSampler> l,
    std::shared_ptr<const InstanceSampler> r) {
  return std::make_shared<ProductSampler>(std::move(l), std::move(r));
}

ChainSpace::ChainSpace(const InstanceSampler& s, int k) {
  std::vector<Obj> objs = s.universe();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1, 0);
  while (true) {
    // hom pools along the chain objs[idx[0]] -> ... -> objs[idx[k]]
    Block blk;
    blk.count = 1;
    bool any = true;
    for (int i = 0; i < k; ++i) {
      auto pool = s.all_ones(objs[idx[i]], objs[idx[i + 1]]);
      if (!pool) return;  // instance does not enumerate
      blk.homs.push_back(std::move(*pool));
      blk.count *= static_cast<std::int64_t>(blk.homs.back().size());
      if (blk.count == 0) {
        any = false;
        break;
      }
    }
    if (any && blk.count > 0) {
      prefix_.push_back(total_);
      total_ += blk.count;
      blocks_.push_back(std::move(blk));
    }
    // advance the object tuple
    int p = 0;
    while (p <= k) {
      if (++idx[p] < objs.size()) break;
      idx[p] = 0;
      ++p;
    }
    if (p > k) break;
  }
  available_ = true;
}

std::vector<OneCell> ChainSpace::decode(std::int64_t index) const {
  std::size_t lo = 0, hi = blocks_.size();
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (prefix_[mid] <= index)
      lo = mid;
    else
      hi = mid;
  }
  std::int64_t rem = index - prefix_[lo];
  const Block& blk = blocks_[lo];
  std::vector<OneCell> out;
  out.reserve(blk.homs.size());
  for (const auto& pool : blk.homs) {
    std::int64_t m = static_cast<std::int64_t>(pool.size());
    out.push_back(pool[static_cast<std::size_t>(rem % m)]);
    rem /= m;
  }
  return out;
}

}  // namespace bicheck
