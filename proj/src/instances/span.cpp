#include "bicheck/instances/span.hpp"

#include "bicheck/core/errors.hpp"

namespace bicheck {

Pullback pullback(const FiniteFun& f, const FiniteFun& g) {
  if (f.cod() != g.cod())
    throw CodomainMismatch("pullback legs must share a codomain");
  std::vector<Atom> atoms;
  for (const Atom& s : f.dom().atoms())
    for (const Atom& r : g.dom().atoms())
      if (f(s) == g(r)) atoms.push_back(Atom::pair(s, r));
  FiniteSet apex(std::move(atoms));
  FiniteFun p1 = FiniteFun::from_fn(apex, f.dom(),
                                    [](const Atom& x) { return x.first(); });
  FiniteFun p2 = FiniteFun::from_fn(apex, g.dom(),
                                    [](const Atom& x) { return x.second(); });
  return Pullback{std::move(apex), std::move(p1), std::move(p2)};
}

FiniteFun pullback_mediate(const Pullback& pb, const FiniteFun& q1,
                           const FiniteFun& q2) {
  if (q1.dom() != q2.dom()) throw InvalidValue("cone legs domain mismatch");
  return FiniteFun::from_fn(q1.dom(), pb.apex, [&](const Atom& q) {
    Atom candidate = Atom::pair(q1(q), q2(q));
    if (!pb.apex.contains(candidate))
      throw InvalidValue("cone does not commute at " + q.str());
    return candidate;
  });
}

Obj span_obj(const FiniteSet& a) { return Obj{Value::of(a)}; }

const FiniteSet& set_of(const Obj& a) { return a.v.as<FiniteSet>(); }

OneCell mk_span(const FiniteSet& src, const FiniteSet& dst, SpanData data) {
  if (data.left.dom() != data.apex || data.right.dom() != data.apex)
    throw InvalidValue("span legs must share the apex");
  if (data.left.cod() != src || data.right.cod() != dst)
    throw BoundaryMismatch("span legs vs endpoints");
  return OneCell{span_obj(src), span_obj(dst), Value::of(std::move(data))};
}

OneCell span_of_fun(const FiniteFun& f) {
  return mk_span(f.dom(), f.cod(),
                 SpanData{f.dom(), FiniteFun::identity(f.dom()), f});
}

const SpanData& span_of(const OneCell& f) { return f.v.as<SpanData>(); }
const FiniteFun& span_map_of(const TwoCell& a) {
  return a.v.as<SpanMorData>().map;
}

TwoCell mk_span_mor(const OneCell& src, const OneCell& dst, FiniteFun map,
                    bool raw) {
  const SpanData& s = span_of(src);
  const SpanData& d = span_of(dst);
  if (map.dom() != s.apex || map.cod() != d.apex)
    throw BoundaryMismatch("span 2-cell apex map boundaries");
  if (!raw) {
    for (const Atom& x : s.apex.atoms()) {
      if (d.left(map(x)) != s.left(x) || d.right(map(x)) != s.right(x))
        throw InvalidValue("span 2-cell does not commute with legs at " +
                           x.str());
    }
  }
  return TwoCell{src, dst, Value::of(SpanMorData{std::move(map)})};
}

TwoCell mk_span_mor_fn(const OneCell& src, const OneCell& dst,
                       const std::function<Atom(const Atom&)>& fn, bool raw) {
  return mk_span_mor(
      src, dst, FiniteFun::from_fn(span_of(src).apex, span_of(dst).apex, fn),
      raw);
}

OneCell SpanBicat::id1(const Obj& a) const {
  const FiniteSet& s = set_of(a);
  return mk_span(s, s,
                 SpanData{s, FiniteFun::identity(s), FiniteFun::identity(s)});
}

OneCell SpanBicat::compose1(const OneCell& g, const OneCell& f) const {
  if (f.dst != g.src) throw BoundaryMismatch("span composition endpoints");
  const SpanData& sf = span_of(f);
  const SpanData& sg = span_of(g);
  Pullback pb = pullback(sf.right, sg.left);
  return mk_span(set_of(f.src), set_of(g.dst),
                 SpanData{pb.apex, sf.left.after(pb.p1),
                          sg.right.after(pb.p2)});
}

TwoCell SpanBicat::id2(const OneCell& f) const {
  return mk_span_mor(f, f, FiniteFun::identity(span_of(f).apex));
}

TwoCell SpanBicat::vcomp(const TwoCell& b, const TwoCell& a) const {
  if (a.dst != b.src) throw BoundaryMismatch("vertical composition");
  return TwoCell{a.src, b.dst,
                 Value::of(SpanMorData{span_map_of(b).after(span_map_of(a))})};
}

TwoCell SpanBicat::whisker_l(const OneCell& h, const TwoCell& a) const {
  OneCell src = compose1(h, a.src);
  OneCell dst = compose1(h, a.dst);
  const FiniteFun& m = span_map_of(a);
  return mk_span_mor_fn(src, dst, [&](const Atom& x) {
    return Atom::pair(m(x.first()), x.second());
  });
}

TwoCell SpanBicat::whisker_r(const TwoCell& a, const OneCell& f) const {
  OneCell src = compose1(a.src, f);
  OneCell dst = compose1(a.dst, f);
  const FiniteFun& m = span_map_of(a);
  return mk_span_mor_fn(src, dst, [&](const Atom& x) {
    return Atom::pair(x.first(), m(x.second()));
  });
}

TwoCell SpanBicat::associator(const OneCell& h, const OneCell& g,
                              const OneCell& f) const {
  OneCell src = compose1(compose1(h, g), f);  // apex atoms (x, (y, z))
  OneCell dst = compose1(h, compose1(g, f));  // apex atoms ((x, y), z)
  return mk_span_mor_fn(src, dst, [](const Atom& a) {
    return Atom::pair(Atom::pair(a.first(), a.second().first()),
                      a.second().second());
  });
}

TwoCell SpanBicat::lunitor(const OneCell& f) const {
  OneCell src = compose1(id1(f.dst), f);  // apex atoms (x, b)
  return mk_span_mor_fn(src, f, [](const Atom& a) { return a.first(); });
}

TwoCell SpanBicat::runitor(const OneCell& f) const {
  OneCell src = compose1(f, id1(f.src));  // apex atoms (a, x)
  return mk_span_mor_fn(src, f, [](const Atom& a) { return a.second(); });
}

std::optional<TwoCell> SpanBicat::invert(const TwoCell& a) const {
  auto inv = span_map_of(a).inverse();
  if (!inv) return std::nullopt;
  return TwoCell{a.dst, a.src, Value::of(SpanMorData{*inv})};
}

std::optional<std::string> SpanBicat::validate2(const TwoCell& a) const {
  const SpanData& s = span_of(a.src);
  const SpanData& d = span_of(a.dst);
  const FiniteFun& m = span_map_of(a);
  if (a.src.src != a.dst.src || a.src.dst != a.dst.dst)
    return "2-cell endpoints are not parallel";
  if (m.dom() != s.apex || m.cod() != d.apex)
    return "apex map boundaries do not match";
  for (const Atom& x : s.apex.atoms()) {
    if (d.left(m(x)) != s.left(x))
      return "left leg does not commute at " + x.str();
    if (d.right(m(x)) != s.right(x))
      return "right leg does not commute at " + x.str();
  }
  return std::nullopt;
}

TwoCell span_mor_by_left_leg(const OneCell& src, const OneCell& dst) {
  const SpanData& s = span_of(src);
  const SpanData& d = span_of(dst);
  auto dinv = d.left.inverse();
  if (!s.left.is_bijective() || !dinv)
    throw NotInvertible("left legs must be bijections onto the source");
  return mk_span_mor(src, dst, dinv->after(s.left));
}

Bicategory::Ptr span_bicat() {
  static Bicategory::Ptr b = std::make_shared<SpanBicat>();
  return b;
}

}  // namespace bicheck
