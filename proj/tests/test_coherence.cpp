#include <doctest.h>

#include "bicheck/core/coherence.hpp"
#include "bicheck/core/pasting.hpp"
#include "bicheck/core/sampler.hpp"
#include "bicheck/instances/graded.hpp"
#include "bicheck/instances/span.hpp"

using namespace bicheck;

namespace {

std::vector<OneCell> sample_chain(std::uint64_t seed, int k,
                                  const InstanceSampler& s) {
  Rng rng(seed);
  return s.chain(rng, k);
}

}  // namespace

TEST_CASE("coherence cell on equal bracketings is the identity") {
  auto sampler = span_sampler(Bounds{});
  auto cells = sample_chain(3, 2, *sampler);
  auto B = span_bicat();
  Word w = Word::comp(Word::gen(cells[1]), Word::gen(cells[0]));
  TwoCell c = coherence_cell(*B, w, w);
  CHECK(c == B->id2(w.eval(*B)));
}

TEST_CASE("coherence cell for a single re-association is the associator") {
  auto sampler = span_sampler(Bounds{});
  auto B = span_bicat();
  auto cells = sample_chain(11, 3, *sampler);
  Word f = Word::gen(cells[0]), g = Word::gen(cells[1]),
       h = Word::gen(cells[2]);
  Word left = Word::comp(Word::comp(h, g), f);
  Word right = Word::comp(h, Word::comp(g, f));
  TwoCell c = coherence_cell(*B, left, right);
  CHECK(c == B->associator(cells[2], cells[1], cells[0]));
}

TEST_CASE("coherence cells compose and invert consistently") {
  auto B = span_bicat();
  auto sampler = span_sampler(Bounds{});
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto cells = sample_chain(100 + seed, 3, *sampler);
    Word f = Word::gen(cells[0]), g = Word::gen(cells[1]),
         h = Word::gen(cells[2]);
    Word w1 = Word::comp(Word::comp(h, g), f);
    Word w2 = Word::comp(h, Word::comp(g, f));
    Word w3 = Word::comp(h, Word::comp(Word::comp(Word::unit(cells[1].dst), g), f));
    TwoCell c12 = coherence_cell(*B, w1, w2);
    TwoCell c23 = coherence_cell(*B, w2, w3);
    TwoCell c13 = coherence_cell(*B, w1, w3);
    CHECK(c13 == B->vcomp(c23, c12));
    CHECK(B->vcomp(B->inv(c12), c12) == B->id2(w1.eval(*B)));
    CHECK(B->vcomp(c12, B->inv(c12)) == B->id2(w2.eval(*B)));
  }
}

TEST_CASE("mismatched words are rejected") {
  auto B = span_bicat();
  auto sampler = span_sampler(Bounds{});
  auto cells = sample_chain(5, 2, *sampler);
  Word w1 = Word::comp(Word::gen(cells[1]), Word::gen(cells[0]));
  Word w2 = Word::gen(B->compose1(cells[1], cells[0]));
  CHECK_THROWS_AS(coherence_cell(*B, w1, w2), WordMismatch);
}

TEST_CASE("every enumerated structural path agrees with the coherence cell") {
  auto B = span_bicat();
  Bounds tight;
  tight.max_size = 2;
  tight.max_apex = 2;
  auto sampler = span_sampler(tight);
  int paths_seen = 0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto cells = sample_chain(33 + seed, 4, *sampler);
    Word f = Word::gen(cells[0]), g = Word::gen(cells[1]),
         h = Word::gen(cells[2]), k = Word::gen(cells[3]);
    // left comb vs right comb
    Word w1 = Word::comp(Word::comp(Word::comp(k, h), g), f);
    Word w2 = Word::comp(k, Word::comp(h, Word::comp(g, f)));
    TwoCell canon = coherence_cell(*B, w1, w2);
    auto paths = enumerate_structural_paths(*B, w1, w2, 4);
    CHECK(paths.size() >= 2);  // at least the two pentagon sides
    for (const auto& p : paths) {
      CHECK(p.cell == canon);
      ++paths_seen;
    }
  }
  CHECK(paths_seen > 8);
}

TEST_CASE("pasting expressions evaluate with boundary checking") {
  auto B = graded_bicat();
  auto sampler = graded_sampler(Bounds{});
  auto cells = sample_chain(1234, 3, *sampler);
  Env env;
  env.one("f", cells[0]).one("g", cells[1]).one("h", cells[2]);

  SUBCASE("identity leaf") {
    PastingExpr e = PastingExpr::parse("(id2 f)");
    CHECK(e.eval(*B, env) == B->id2(cells[0]));
  }
  SUBCASE("inverse law for the associator") {
    PastingExpr e = PastingExpr::parse("(vcomp (assoc h g f) (assoc- h g f))");
    TwoCell r = e.eval(*B, env);
    CHECK(r == B->id2(B->compose1(B->compose1(cells[2], cells[1]), cells[0])));
  }
  SUBCASE("coherence leaf matches the associator") {
    PastingExpr e = PastingExpr::parse("(coh (comp (comp h g) f) (comp h (comp g f)))");
    CHECK(e.eval(*B, env) == B->associator(cells[2], cells[1], cells[0]));
  }
  SUBCASE("expect catches boundary lies") {
    PastingExpr e =
        PastingExpr::parse("(expect (assoc h g f) (comp h (comp g f)) (comp h (comp g f)))");
    CHECK_THROWS_AS(e.eval(*B, env), BoundaryMismatch);
  }
  SUBCASE("unknown generators are reported") {
    PastingExpr e = PastingExpr::parse("(id2 zz)");
    CHECK_THROWS_AS(e.eval(*B, env), UnknownGenerator);
  }
  SUBCASE("vcomp flags broken chains") {
    PastingExpr e = PastingExpr::parse("(vcomp (assoc h g f) (assoc h g f))");
    CHECK_THROWS_AS(e.eval(*B, env), BoundaryMismatch);
  }
}
