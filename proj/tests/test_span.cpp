#include <doctest.h>

#include "bicheck/core/sampler.hpp"
#include "bicheck/instances/span.hpp"

using namespace bicheck;

namespace {

// Independent counting oracle: |P| = sum_b |f^-1(b)| * |g^-1(b)|.
std::size_t pullback_size_oracle(const FiniteFun& f, const FiniteFun& g) {
  std::size_t n = 0;
  for (const Atom& b : f.cod().atoms()) {
    std::size_t nf = 0, ng = 0;
    for (const Atom& s : f.dom().atoms())
      if (f(s) == b) ++nf;
    for (const Atom& r : g.dom().atoms())
      if (g(r) == b) ++ng;
    n += nf * ng;
  }
  return n;
}

}  // namespace

TEST_CASE("pullback of identities is the diagonal") {
  FiniteSet b = FiniteSet::range(3);
  FiniteFun id = FiniteFun::identity(b);
  Pullback pb = pullback(id, id);
  REQUIRE(pb.apex.size() == 3);
  for (const Atom& x : pb.apex.atoms()) CHECK(x.first() == x.second());
}

TEST_CASE("pullback over a terminal object is the product") {
  FiniteSet two = FiniteSet::range(2), one = FiniteSet::range(1),
            pt = FiniteSet::range(1);
  FiniteFun f = FiniteFun::constant(two, pt, Atom(0));
  FiniteFun g = FiniteFun::constant(one, pt, Atom(0));
  Pullback pb = pullback(f, g);
  REQUIRE(pb.apex.size() == 2);
  CHECK(pb.apex.at(0) == Atom::pair(Atom(0), Atom(0)));
  CHECK(pb.apex.at(1) == Atom::pair(Atom(1), Atom(0)));
}

TEST_CASE("pullback of id against swap pairs mirrored points") {
  FiniteSet two = FiniteSet::range(2);
  FiniteFun id = FiniteFun::identity(two);
  FiniteFun swap = FiniteFun::from_fn(
      two, two, [](const Atom& x) { return Atom(1 - x.num()); });
  Pullback pb = pullback(id, swap);
  REQUIRE(pb.apex.size() == 2);
  CHECK(pb.apex.contains(Atom::pair(Atom(0), Atom(1))));
  CHECK(pb.apex.contains(Atom::pair(Atom(1), Atom(0))));
}

TEST_CASE("pullback size matches the fiber-count oracle on random cospans") {
  Rng rng(20240507);
  Bounds bounds;
  auto sampler = span_sampler(bounds);
  for (int i = 0; i < 200; ++i) {
    auto cells = sampler->chain(rng, 2);
    const SpanData& s = span_of(cells[0]);
    const SpanData& t = span_of(cells[1]);
    Pullback pb = pullback(s.right, t.left);
    CHECK(pb.apex.size() == pullback_size_oracle(s.right, t.left));
  }
}

TEST_CASE("universal property: mediating maps exist, commute, are unique") {
  Rng rng(7);
  Bounds bounds;
  auto sampler = span_sampler(bounds);
  int nontrivial = 0;
  for (int i = 0; i < 60; ++i) {
    auto cells = sampler->chain(rng, 2);
    const SpanData& s = span_of(cells[0]);
    const SpanData& t = span_of(cells[1]);
    Pullback pb = pullback(s.right, t.left);
    // cone = the pullback itself
    FiniteFun u = pullback_mediate(pb, pb.p1, pb.p2);
    CHECK(u == FiniteFun::identity(pb.apex));
    // uniqueness: enumerate all maps apex -> apex commuting with both legs
    if (pb.apex.size() > 0 && pb.apex.size() <= 3) {
      ++nontrivial;
      std::int64_t n = count_functions(pb.apex, pb.apex);
      for (std::int64_t k = 0; k < n; ++k) {
        FiniteFun cand = nth_function(pb.apex, pb.apex, k);
        if (pb.p1.after(cand) == pb.p1 && pb.p2.after(cand) == pb.p2)
          CHECK(cand == u);
      }
    }
  }
  CHECK(nontrivial > 5);
}

TEST_CASE("identity composition differs from the cell but unitor compares") {
  auto B = span_bicat();
  FiniteSet a = FiniteSet::range(2), b = FiniteSet::range(2);
  FiniteSet apex = FiniteSet::range(2);
  OneCell s = mk_span(a, b,
                      SpanData{apex, FiniteFun::identity(a),
                               FiniteFun::from_fn(apex, b, [](const Atom& x) {
                                 return Atom(1 - x.num());
                               })});
  OneCell ids = B->compose1(B->id1(s.dst), s);
  CHECK(ids != s);  // weak unit law: composite is only isomorphic
  TwoCell lu = B->lunitor(s);
  CHECK(lu.src == ids);
  CHECK(lu.dst == s);
  CHECK(B->invert(lu).has_value());
}

TEST_CASE("2-cell validation catches leg violations") {
  FiniteSet a = FiniteSet::range(1), b = FiniteSet::range(2);
  FiniteSet apex = FiniteSet::range(2);
  FiniteFun left = FiniteFun::constant(apex, a, Atom(0));
  FiniteFun right = FiniteFun::identity(b);
  OneCell f = mk_span(a, b, SpanData{apex, left, right});
  // swapping the apex elements breaks the right leg
  CHECK_THROWS_AS(mk_span_mor_fn(
                      f, f, [](const Atom& x) { return Atom(1 - x.num()); }),
                  InvalidValue);
  TwoCell raw = mk_span_mor_fn(
      f, f, [](const Atom& x) { return Atom(1 - x.num()); }, /*raw=*/true);
  CHECK(span_bicat()->validate2(raw).has_value());
}
