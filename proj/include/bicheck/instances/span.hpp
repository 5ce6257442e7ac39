#pragma once

#include <functional>

#include "bicheck/core/bicategory.hpp"
#include "bicheck/core/fin.hpp"

namespace bicheck {

// 1-cell payload: a span  src <- apex -> dst  of finite sets. Equality is
// extensional on all three fields, not up to isomorphism; composites are
// strictly determined values so 2-cell equality is meaningful.
struct SpanData {
  FiniteSet apex;
  FiniteFun left;   // apex -> src
  FiniteFun right;  // apex -> dst
  bool operator==(const SpanData& o) const {
    return apex == o.apex && left == o.left && right == o.right;
  }
  json to_json() const {
    return json{{"apex", apex.to_json()},
                {"left", left.to_json()},
                {"right", right.to_json()}};
  }
};

// 2-cell payload: a map of apexes commuting with both legs. All commuting
// apex maps are 2-cells, not only isomorphisms; checkers test invertibility
// where a law requires it.
struct SpanMorData {
  FiniteFun map;
  bool operator==(const SpanMorData& o) const { return map == o.map; }
  json to_json() const { return map.to_json(); }
};

struct Pullback {
  FiniteSet apex;  // pairs (s, r) with f(s) = g(r), lexicographic order
  FiniteFun p1, p2;
};

// Canonical pullback of a cospan f : S -> B <- R : g.
Pullback pullback(const FiniteFun& f, const FiniteFun& g);
// Mediating map into pullback(f, g) from a cone (q1, q2); throws
// InvalidValue when the cone does not commute.
FiniteFun pullback_mediate(const Pullback& pb, const FiniteFun& q1,
                           const FiniteFun& q2);

Obj span_obj(const FiniteSet& a);
OneCell mk_span(const FiniteSet& src, const FiniteSet& dst, SpanData data);
// Graph span of a function: dom <- dom -> cod with identity left leg.
OneCell span_of_fun(const FiniteFun& f);
// 2-cell from a pointwise apex map; validates leg commutation unless raw.
TwoCell mk_span_mor(const OneCell& src, const OneCell& dst, FiniteFun map,
                    bool raw = false);
TwoCell mk_span_mor_fn(const OneCell& src, const OneCell& dst,
                       const std::function<Atom(const Atom&)>& fn,
                       bool raw = false);

// Canonical comparison between two composite spans whose left legs are
// bijective onto the common source object.
TwoCell span_mor_by_left_leg(const OneCell& src, const OneCell& dst);

const SpanData& span_of(const OneCell& f);
const FiniteFun& span_map_of(const TwoCell& a);
const FiniteSet& set_of(const Obj& a);

class SpanBicat final : public Bicategory {
 public:
  std::string name() const override { return "span"; }
  OneCell id1(const Obj& a) const override;
  OneCell compose1(const OneCell& g, const OneCell& f) const override;
  TwoCell id2(const OneCell& f) const override;
  TwoCell vcomp(const TwoCell& b, const TwoCell& a) const override;
  TwoCell whisker_l(const OneCell& h, const TwoCell& a) const override;
  TwoCell whisker_r(const TwoCell& a, const OneCell& f) const override;
  TwoCell associator(const OneCell& h, const OneCell& g,
                     const OneCell& f) const override;
  TwoCell lunitor(const OneCell& f) const override;
  TwoCell runitor(const OneCell& f) const override;
  std::optional<TwoCell> invert(const TwoCell& a) const override;
  std::optional<std::string> validate2(const TwoCell& a) const override;
};

Bicategory::Ptr span_bicat();

}  // namespace bicheck
