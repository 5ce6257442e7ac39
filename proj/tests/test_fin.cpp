#include <doctest.h>

#include "bicheck/core/errors.hpp"
#include "bicheck/core/fin.hpp"

using namespace bicheck;

TEST_CASE("atoms order integers before pairs, pairs lexicographically") {
  Atom a(0), b(1);
  Atom p = Atom::pair(a, b), q = Atom::pair(b, a);
  CHECK(a < b);
  CHECK(b < p);
  CHECK(p < q);
  CHECK(p == Atom::pair(Atom(0), Atom(1)));
}

TEST_CASE("finite sets reject duplicates and keep canonical order") {
  CHECK_THROWS_AS(FiniteSet({Atom(1), Atom(1)}), InvalidValue);
  FiniteSet s({Atom(2), Atom(0)});
  CHECK(s.at(0) == Atom(0));
  CHECK(s.at(1) == Atom(2));
  CHECK(s.index_of(Atom(2)) == 1);
  CHECK_FALSE(s.index_of(Atom(1)).has_value());
}

TEST_CASE("product sets are pair atoms in lexicographic order") {
  FiniteSet a = FiniteSet::range(2), b = FiniteSet::range(2);
  FiniteSet p = FiniteSet::product(a, b);
  REQUIRE(p.size() == 4);
  CHECK(p.at(0) == Atom::pair(Atom(0), Atom(0)));
  CHECK(p.at(3) == Atom::pair(Atom(1), Atom(1)));
}

TEST_CASE("function composition, inverse and products") {
  FiniteSet two = FiniteSet::range(2);
  FiniteFun swap = FiniteFun::from_fn(two, two, [](const Atom& x) {
    return Atom(1 - x.num());
  });
  CHECK(swap.after(swap) == FiniteFun::identity(two));
  CHECK(swap.is_bijective());
  CHECK(*swap.inverse() == swap);
  FiniteFun c = FiniteFun::constant(two, two, Atom(0));
  CHECK_FALSE(c.is_bijective());
  CHECK_FALSE(c.inverse().has_value());
  FiniteFun sxc = FiniteFun::product(swap, c);
  CHECK(sxc(Atom::pair(Atom(0), Atom(1))) == Atom::pair(Atom(1), Atom(0)));
}

TEST_CASE("rebracketing and unit bijections") {
  FiniteSet a = FiniteSet::range(2), b = FiniteSet::range(1),
            c = FiniteSet::range(3);
  FiniteFun rb = rebracket_fun(a, b, c);
  CHECK(rb.is_bijective());
  CHECK(rb(Atom::pair(Atom::pair(Atom(1), Atom(0)), Atom(2))) ==
        Atom::pair(Atom(1), Atom::pair(Atom(0), Atom(2))));
  FiniteFun lu = lunit_fun(b, a);
  CHECK(lu(Atom::pair(Atom(0), Atom(1))) == Atom(1));
  FiniteFun ru = runit_fun(a, b);
  CHECK(ru(Atom::pair(Atom(1), Atom(0))) == Atom(1));
}

TEST_CASE("function enumeration covers the whole space") {
  FiniteSet a = FiniteSet::range(2), b = FiniteSet::range(3);
  CHECK(count_functions(a, b) == 9);
  std::vector<FiniteFun> all;
  for (std::int64_t k = 0; k < 9; ++k) all.push_back(nth_function(a, b, k));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE(all[i] == all[j]);
  CHECK(count_functions(FiniteSet::range(0), b) == 1);
  CHECK(count_functions(a, FiniteSet::range(0)) == 0);
}

TEST_CASE("serialization shapes") {
  FiniteSet a = FiniteSet::range(2);
  CHECK(a.to_json().dump() == R"({"atoms":[0,1]})");
  FiniteFun f = FiniteFun::from_fn(a, a, [](const Atom& x) { return x; });
  CHECK(f.to_json().dump() == R"({"map":[[0,0],[1,1]]})");
}
