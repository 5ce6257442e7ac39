#include "bicheck/instances/graded.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

Obj graded_obj(const FiniteSet& a) { return Obj{Value::of(a)}; }

const FiniteSet& unit_grade() {
  static FiniteSet i = FiniteSet::range(1);
  return i;
}

OneCell mk_graded(const FiniteSet& src, const FiniteSet& dst, GradedData d) {
  FiniteSet expect = FiniteSet::product(dst, d.grade);
  if (d.map.dom() != src || d.map.cod() != expect)
    throw BoundaryMismatch("graded cell map must be src -> dst x grade");
  return OneCell{graded_obj(src), graded_obj(dst), Value::of(std::move(d))};
}

const GradedData& graded_of(const OneCell& f) { return f.v.as<GradedData>(); }
const FiniteFun& regrade_of(const TwoCell& a) {
  return a.v.as<RegradeData>().regrade;
}

TwoCell mk_regrade(const OneCell& src, const OneCell& dst, FiniteFun regrade,
                   bool raw) {
  const GradedData& s = graded_of(src);
  const GradedData& d = graded_of(dst);
  if (regrade.dom() != s.grade || regrade.cod() != d.grade)
    throw BoundaryMismatch("re-grading boundaries");
  if (!raw) {
    if (src.src != dst.src || src.dst != dst.dst)
      throw BoundaryMismatch("re-grading endpoints are not parallel");
    FiniteFun push = FiniteFun::product(
        FiniteFun::identity(src.dst.v.as<FiniteSet>()), regrade);
    if (push.after(s.map) != d.map)
      throw InvalidValue("re-grading condition (dst x g) o f = f' fails");
  }
  return TwoCell{src, dst, Value::of(RegradeData{std::move(regrade)})};
}

OneCell graded_pure_cell(const FiniteFun& f) {
  const FiniteSet& i = unit_grade();
  FiniteFun map = FiniteFun::from_fn(
      f.dom(), FiniteSet::product(f.cod(), i),
      [&](const Atom& a) { return Atom::pair(f(a), i.at(0)); });
  return mk_graded(f.dom(), f.cod(), GradedData{i, std::move(map)});
}

OneCell GradedBicat::id1(const Obj& a) const {
  return graded_pure_cell(FiniteFun::identity(a.v.as<FiniteSet>()));
}

OneCell GradedBicat::compose1(const OneCell& g, const OneCell& f) const {
  if (f.dst != g.src) throw BoundaryMismatch("graded composition endpoints");
  const GradedData& df = graded_of(f);
  const GradedData& dg = graded_of(g);
  const FiniteSet& b2 = g.dst.v.as<FiniteSet>();
  FiniteFun step = FiniteFun::product(dg.map, FiniteFun::identity(df.grade));
  FiniteFun rb = rebracket_fun(b2, dg.grade, df.grade);
  return mk_graded(f.src.v.as<FiniteSet>(), b2,
                   GradedData{FiniteSet::product(dg.grade, df.grade),
                              rb.after(step.after(df.map))});
}

TwoCell GradedBicat::id2(const OneCell& f) const {
  return mk_regrade(f, f, FiniteFun::identity(graded_of(f).grade));
}

TwoCell GradedBicat::vcomp(const TwoCell& b, const TwoCell& a) const {
  if (a.dst != b.src) throw BoundaryMismatch("vertical composition");
  return TwoCell{a.src, b.dst,
                 Value::of(RegradeData{regrade_of(b).after(regrade_of(a))})};
}

TwoCell GradedBicat::whisker_l(const OneCell& h, const TwoCell& a) const {
  OneCell src = compose1(h, a.src);
  OneCell dst = compose1(h, a.dst);
  FiniteFun g = FiniteFun::product(FiniteFun::identity(graded_of(h).grade),
                                   regrade_of(a));
  return mk_regrade(src, dst, std::move(g));
}

TwoCell GradedBicat::whisker_r(const TwoCell& a, const OneCell& f) const {
  OneCell src = compose1(a.src, f);
  OneCell dst = compose1(a.dst, f);
  FiniteFun g = FiniteFun::product(regrade_of(a),
                                   FiniteFun::identity(graded_of(f).grade));
  return mk_regrade(src, dst, std::move(g));
}

TwoCell GradedBicat::associator(const OneCell& h, const OneCell& g,
                                const OneCell& f) const {
  OneCell src = compose1(compose1(h, g), f);
  OneCell dst = compose1(h, compose1(g, f));
  return mk_regrade(src, dst,
                    rebracket_fun(graded_of(h).grade, graded_of(g).grade,
                                  graded_of(f).grade));
}

TwoCell GradedBicat::lunitor(const OneCell& f) const {
  OneCell src = compose1(id1(f.dst), f);
  return mk_regrade(src, f, lunit_fun(unit_grade(), graded_of(f).grade));
}

TwoCell GradedBicat::runitor(const OneCell& f) const {
  OneCell src = compose1(f, id1(f.src));
  return mk_regrade(src, f, runit_fun(graded_of(f).grade, unit_grade()));
}

std::optional<TwoCell> GradedBicat::invert(const TwoCell& a) const {
  auto inv = regrade_of(a).inverse();
  if (!inv) return std::nullopt;
  return TwoCell{a.dst, a.src, Value::of(RegradeData{*inv})};
}

std::optional<std::string> GradedBicat::validate2(const TwoCell& a) const {
  const GradedData& s = graded_of(a.src);
  const GradedData& d = graded_of(a.dst);
  const FiniteFun& g = regrade_of(a);
  if (a.src.src != a.dst.src || a.src.dst != a.dst.dst)
    return "2-cell endpoints are not parallel";
  if (g.dom() != s.grade || g.cod() != d.grade)
    return "re-grading boundaries do not match";
  FiniteFun push = FiniteFun::product(
      FiniteFun::identity(a.src.dst.v.as<FiniteSet>()), g);
  if (push.after(s.map) != d.map)
    return "re-grading condition (dst x g) o f = f' fails";
  return std::nullopt;
}

Bicategory::Ptr graded_bicat() {
  static Bicategory::Ptr b = std::make_shared<GradedBicat>();
  return b;
}

}  // namespace bicheck
