#include "doctest.h"
#include "fixtures.hpp"
#include "rankc/ranking.hpp"
#include "rankc/trub.hpp"

using namespace rankc;
using namespace fixtures;

namespace {

Ranking mk(std::initializer_list<uint8_t> vals) {
  Ranking f(static_cast<uint32_t>(vals.size()));
  uint32_t i = 0;
  for (uint8_t v : vals) f[i++] = v;
  return f;
}

}  // namespace

TEST_CASE("evenceil and monus") {
  CHECK(evenceil(42) == 42);
  CHECK(evenceil(43) == 42);
  CHECK(evenceil(0) == 0);
  CHECK(evenceil(1) == 0);
  CHECK(monus(3, 1) == 2);
  CHECK(monus(0, 1) == 0);
  CHECK(monus(2, 5) == 0);
}

TEST_CASE("is_s_tight clauses") {
  CHECK(is_s_tight(mk({1, 0}), set_of(2, {0})));
  CHECK_FALSE(is_s_tight(mk({2, 0}), set_of(2, {0})));  // even rank
  CHECK_FALSE(is_s_tight(mk({3, 0}), set_of(2, {0})));  // 1 not covered
  CHECK_FALSE(is_s_tight(mk({1, 1}), set_of(2, {0})));  // nonzero outside S
}

TEST_CASE("transition_consistent on ab_loop") {
  Ba ba = ab_loop();
  StateSet s = set_of(2, {0});
  CHECK(transition_consistent(mk({1, 0}), mk({1, 0}), s, 0, ba));
  CHECK_FALSE(transition_consistent(mk({1, 0}), mk({2, 0}), s, 0, ba));
}

TEST_CASE("transition_consistent caps accepting edges at the even ceiling") {
  Ba ba(2, {"a"});
  ba.add_edge(0, 0, 1, /*accepting=*/true);
  ba.add_edge(1, 0, 1);
  ba.initial.set(0);
  StateSet s = set_of(2, {0});
  CHECK_FALSE(transition_consistent(mk({3, 0}), mk({0, 3}), s, 0, ba));
  CHECK(transition_consistent(mk({3, 0}), mk({0, 2}), s, 0, ba));
}

TEST_CASE("max_successor_ranking") {
  Ba ba = ab_loop();
  // q accepting: forced to the even ceiling of p's rank
  Ranking m = max_successor_ranking(set_of(2, {0}), 0, mk({1, 0}), ba);
  CHECK(m[0] == 1);
  CHECK(m[1] == 0);

  // no constraints from the empty set: top value 2n, evenceil on accepting
  Ranking top = max_successor_ranking(StateSet(2), 0, mk({0, 0}), ba);
  CHECK(top[0] == 4);
  CHECK(top[1] == 4);

  Ranking zero = max_successor_ranking(set_of(2, {0}), 0, mk({0, 0}), ba);
  CHECK(zero[0] == 0);
  CHECK(zero[1] == 0);
}

TEST_CASE("max_successor_ranking matches brute-force maximization") {
  Ba ba = ab_loop();
  StateSet s = set_of(2, {0, 1});
  for (uint8_t fp = 0; fp <= 4; ++fp)
    for (uint8_t fq = 0; fq <= 4; fq += 2) {
      Ranking f = mk({fp, fq});
      for (uint32_t a = 0; a < 2; ++a) {
        Ranking m = max_successor_ranking(s, a, f, ba);
        CHECK(transition_consistent(f, m, s, a, ba));
        // every consistent ranking is pointwise below m
        for (uint8_t gp = 0; gp <= 4; ++gp)
          for (uint8_t gq = 0; gq <= 4; gq += 2) {
            Ranking g = mk({gp, gq});
            if (transition_consistent(f, g, s, a, ba)) CHECK(g.leq(m));
          }
      }
    }
}

TEST_CASE("join and meet are pointwise") {
  CHECK(ranking_join(mk({1, 0}), mk({0, 2})) == mk({1, 2}));
  CHECK(ranking_meet(mk({1, 0}), mk({1, 0})) == mk({1, 0}));
  CHECK(ranking_meet(ranking_join(mk({1}), mk({3})), mk({1})) == mk({1}));
}

TEST_CASE("dec lowers rank-attaining entries") {
  Ba ba = ab_loop();
  CHECK(dec(mk({3, 2}), ba) == mk({2, 2}));
  CHECK(dec(mk({2, 2}), ba) == mk({1, 0}));  // q accepting: evenceil(1)=0
  CHECK(dec(mk({0, 0}), ba) == mk({0, 0}));
}

TEST_CASE("trivial TRUB on ab_loop") {
  Ba ba = ab_loop();
  CHECK(trivial_scalar(set_of(2, {0, 1}), ba) == 1);
  CHECK(trivial_scalar(StateSet(2), ba) == 0);
  CHECK(trivial_scalar(set_of(2, {1}), ba) == 0);  // subset of Q_F

  Trub t = trivial_trub(ba);
  CHECK(t.cap(set_of(2, {0, 1})) == mk({1, 0}));
  CHECK(t.cap(StateSet(2)) == mk({0, 0}));
}

TEST_CASE("tight enumeration lists exactly the S-tight rankings below cap") {
  Ba ba = ab_loop();
  StateSet s = set_of(2, {0, 1});
  Ranking cap = mk({3, 2});
  std::vector<Ranking> got;
  enumerate_tight_rankings(ba, s, cap, -1,
                           [&](const Ranking& f) { got.push_back(f); });
  std::vector<Ranking> expect;
  for (uint8_t fp = 0; fp <= 3; ++fp)
    for (uint8_t fq = 0; fq <= 2; fq += 2) {
      Ranking f = mk({fp, fq});
      if (is_s_tight(f, s)) expect.push_back(f);
    }
  CHECK(got.size() == expect.size());
  for (const Ranking& f : expect)
    CHECK(std::count(got.begin(), got.end(), f) == 1);

  std::vector<Ranking> rank3;
  enumerate_tight_rankings(ba, s, cap, 3,
                           [&](const Ranking& f) { rank3.push_back(f); });
  for (const Ranking& f : rank3) CHECK(f.rank() == 3);
}
