#include "bicheck/instances/discrete.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

TwoCell LocallyDiscreteBicat::vcomp(const TwoCell& b, const TwoCell& a) const {
  if (a.dst != b.src)
    throw BoundaryMismatch("vertical composition in a discrete hom-category");
  return TwoCell{a.src, b.dst, Value::of(UnitV{})};
}

TwoCell LocallyDiscreteBicat::whisker_l(const OneCell& h,
                                        const TwoCell& a) const {
  OneCell src = compose1(h, a.src);
  OneCell dst = compose1(h, a.dst);
  if (src != dst)
    throw BoundaryMismatch("whiskering a non-identity in a discrete instance");
  return TwoCell{src, dst, Value::of(UnitV{})};
}

TwoCell LocallyDiscreteBicat::whisker_r(const TwoCell& a,
                                        const OneCell& f) const {
  OneCell src = compose1(a.src, f);
  OneCell dst = compose1(a.dst, f);
  if (src != dst)
    throw BoundaryMismatch("whiskering a non-identity in a discrete instance");
  return TwoCell{src, dst, Value::of(UnitV{})};
}

TwoCell LocallyDiscreteBicat::associator(const OneCell& h, const OneCell& g,
                                         const OneCell& f) const {
  OneCell l = compose1(compose1(h, g), f);
  OneCell r = compose1(h, compose1(g, f));
  if (l != r) throw BoundaryMismatch("strict associativity violated");
  return TwoCell{l, r, Value::of(UnitV{})};
}

std::optional<TwoCell> LocallyDiscreteBicat::invert(const TwoCell& a) const {
  return TwoCell{a.dst, a.src, Value::of(UnitV{})};
}

std::optional<std::string> LocallyDiscreteBicat::validate2(
    const TwoCell& a) const {
  if (a.src != a.dst)
    return "discrete hom-category has a 2-cell between distinct 1-cells";
  return std::nullopt;
}

OneCell mk_fun_cell(const FiniteFun& f) {
  return OneCell{Obj{Value::of(f.dom())}, Obj{Value::of(f.cod())},
                 Value::of(FunData{f})};
}

const FiniteFun& fun_of(const OneCell& f) { return f.v.as<FunData>().fun; }

OneCell FinFunBicat::id1(const Obj& a) const {
  return mk_fun_cell(FiniteFun::identity(a.v.as<FiniteSet>()));
}

OneCell FinFunBicat::compose1(const OneCell& g, const OneCell& f) const {
  if (f.dst != g.src) throw BoundaryMismatch("function composition endpoints");
  return mk_fun_cell(fun_of(g).after(fun_of(f)));
}

Bicategory::Ptr finfun_bicat() {
  static Bicategory::Ptr b = std::make_shared<FinFunBicat>();
  return b;
}

OneCell mk_state_cell(const FiniteSet& src, const FiniteSet& dst,
                      const FiniteFun& fun, const FiniteSet& state) {
  if (fun.dom() != FiniteSet::product(state, src) ||
      fun.cod() != FiniteSet::product(state, dst))
    throw BoundaryMismatch("state cell must be S x A -> S x B");
  return OneCell{Obj{Value::of(src)}, Obj{Value::of(dst)},
                 Value::of(StateData{fun})};
}

const FiniteFun& state_fun_of(const OneCell& f) {
  return f.v.as<StateData>().fun;
}

OneCell StateBicat::id1(const Obj& a) const {
  const FiniteSet& s = a.v.as<FiniteSet>();
  return mk_state_cell(
      s, s, FiniteFun::identity(FiniteSet::product(state_, s)), state_);
}

OneCell StateBicat::compose1(const OneCell& g, const OneCell& f) const {
  if (f.dst != g.src) throw BoundaryMismatch("state composition endpoints");
  return mk_state_cell(f.src.v.as<FiniteSet>(), g.dst.v.as<FiniteSet>(),
                       state_fun_of(g).after(state_fun_of(f)), state_);
}

std::shared_ptr<const StateBicat> state_bicat(const FiniteSet& s) {
  return std::make_shared<StateBicat>(s);
}

}  // namespace bicheck
