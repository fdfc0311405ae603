#include "doctest.h"
#include "fixtures.hpp"
#include "rankc/oracle.hpp"
#include "rankc/pipeline.hpp"
#include "rankc/propagation.hpp"

using namespace rankc;
using namespace fixtures;

namespace {

std::vector<uint32_t> trivial_mu0(const Skeleton& skel, const Ba& ba) {
  std::vector<uint32_t> mu0(skel.nodes.size());
  for (uint32_t i = 0; i < skel.nodes.size(); ++i)
    mu0[i] = trivial_scalar(skel.nodes[i], ba);
  return mu0;
}

// Independent check of the outer fixpoint: the final value of S is the
// smallest initial value seen along some backward path from S to a
// predecessor-less node or around all of S's ancestry -- equivalently, v is
// a fixpoint iff v <= mu0 and every node with predecessors has a
// predecessor of equal-or-larger value, and it is the largest such v.
bool is_outer_fixpoint(const Skeleton& skel, const std::vector<uint32_t>& mu0,
                       const std::vector<uint32_t>& v) {
  for (uint32_t s = 0; s < skel.nodes.size(); ++s) {
    if (v[s] > mu0[s]) return false;
    if (v[s] != outer_update(v, s, skel)) return false;
  }
  return true;
}

bool outer_is_greatest(const Skeleton& skel, const std::vector<uint32_t>& mu0,
                       const std::vector<uint32_t>& v) {
  // greatest fixpoint below mu0: lowering any single node must break the
  // fixpoint property or be recoverable; brute-force over small value grids
  std::vector<uint32_t> w = mu0;
  // Kleene iteration from mu0 is the greatest fixpoint of a monotone
  // decreasing update; recompute it naively (round-robin) and compare.
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t s = 0; s < skel.nodes.size(); ++s) {
      uint32_t nv = outer_update(w, s, skel);
      if (nv != w[s]) {
        w[s] = nv;
        changed = true;
      }
    }
  }
  return w == v;
}

}  // namespace

TEST_CASE("skeleton of ab_loop") {
  Ba ba = ab_loop();
  Skeleton skel = build_skeleton(ba);
  CHECK(skel.nodes.size() == 4);
  REQUIRE(skel.index.count(set_of(2, {0})));
  REQUIRE(skel.index.count(set_of(2, {0, 1})));
  REQUIRE(skel.index.count(set_of(2, {1})));
  REQUIRE(skel.index.count(StateSet(2)));
  uint32_t np = skel.index.at(set_of(2, {0}));
  uint32_t npq = skel.index.at(set_of(2, {0, 1}));
  uint32_t nq = skel.index.at(set_of(2, {1}));
  uint32_t ne = skel.index.at(StateSet(2));
  CHECK(skel.successor(np, 0) == npq);
  CHECK(skel.successor(np, 1) == ne);
  CHECK(skel.successor(npq, 0) == npq);
  CHECK(skel.successor(npq, 1) == nq);
  CHECK(skel.successor(nq, 1) == nq);
  CHECK(skel.successor(nq, 0) == ne);
  CHECK(skel.successor(ne, 0) == ne);
  CHECK(skel.successor(ne, 1) == ne);
}

TEST_CASE("skeleton of a deterministic Ba mirrors its reachable part") {
  Ba det(2, {"a"});
  det.add_edge(0, 0, 1);
  det.add_edge(1, 0, 0);
  det.initial.set(0);
  Skeleton skel = build_skeleton(det);
  CHECK(skel.nodes.size() == 2);  // {0} and {1}, no empty node
}

TEST_CASE("skeleton of the empty Ba is the single empty node") {
  Skeleton skel = build_skeleton(empty_ba());
  CHECK(skel.nodes.size() == 1);
  CHECK(skel.nodes[0].empty());
}

TEST_CASE("outer updates on the diamond fixture") {
  Ba ba = preprocess(diamond(), false);
  Skeleton skel = build_skeleton(ba);
  REQUIRE(skel.nodes.size() == 3);
  uint32_t np = skel.index.at(set_of(4, {0}));
  uint32_t npq = skel.index.at(set_of(4, {0, 1}));
  uint32_t nall = skel.index.at(set_of(4, {0, 1, 2, 3}));

  std::vector<uint32_t> mu = trivial_mu0(skel, ba);
  CHECK(mu[np] == 1);
  CHECK(mu[npq] == 3);
  CHECK(mu[nall] == 7);
  CHECK(outer_update(mu, npq, skel) == 1);   // min{3, 1}
  CHECK(outer_update(mu, nall, skel) == 7);  // min{7, max{3,7}}
  CHECK(outer_update(mu, np, skel) == 1);    // no predecessors

  mu[npq] = 0;
  CHECK(outer_update(mu, npq, skel) == 0);
}

TEST_CASE("outer fixpoint on diamond is {1, 1, 7}") {
  Ba ba = preprocess(diamond(), false);
  Skeleton skel = build_skeleton(ba);
  OuterResult res = outer_analysis(skel, trivial_mu0(skel, ba));
  CHECK(res.value[skel.index.at(set_of(4, {0}))] == 1);
  CHECK(res.value[skel.index.at(set_of(4, {0, 1}))] == 1);
  CHECK(res.value[skel.index.at(set_of(4, {0, 1, 2, 3}))] == 7);
  // idempotence at the fixpoint
  OuterResult again = outer_analysis(skel, res.value);
  CHECK(again.value == res.value);
}

TEST_CASE("outer analysis agrees with naive round-robin iteration") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Ba ba = preprocess(tabakov_vardi(3 + seed % 4, 2, 1.5, 0.4, seed), false);
    Skeleton skel = build_skeleton(ba);
    std::vector<uint32_t> mu0 = trivial_mu0(skel, ba);
    OuterResult res = outer_analysis(skel, mu0);
    CHECK(is_outer_fixpoint(skel, mu0, res.value));
    CHECK(outer_is_greatest(skel, mu0, res.value));
  }
}

TEST_CASE("inner updates on the diamond fixture") {
  Ba ba = preprocess(diamond(), false);
  Skeleton skel = build_skeleton(ba);
  uint32_t np = skel.index.at(set_of(4, {0}));
  uint32_t npq = skel.index.at(set_of(4, {0, 1}));
  uint32_t nall = skel.index.at(set_of(4, {0, 1, 2, 3}));

  // i(mu*_out): {p}->{p:1}, {p,q}->{p:1,q:1}, S->{7,7,7,7}
  std::vector<Ranking> mu(3);
  mu[np] = lift_scalar(1, skel.nodes[np], ba);
  mu[npq] = lift_scalar(1, skel.nodes[npq], ba);
  mu[nall] = lift_scalar(7, skel.nodes[nall], ba);

  // three updates at S reach {6,6,6,6}, parity-adjusted to {5,5,5,5}
  mu[nall] = inner_update(mu, nall, skel, ba);
  Ranking expect1(4);
  expect1[0] = 6; expect1[1] = 7; expect1[2] = 7; expect1[3] = 7;
  CHECK(mu[nall] == expect1);
  mu[nall] = inner_update(mu, nall, skel, ba);
  mu[nall] = inner_update(mu, nall, skel, ba);
  Ranking expect3(4);
  expect3[0] = 5; expect3[1] = 5; expect3[2] = 5; expect3[3] = 5;
  CHECK(mu[nall] == expect3);
}

TEST_CASE("inner fixpoint on diamond is {p:1,q:1,r:1,s:1} at the full node") {
  Ba ba = preprocess(diamond(), false);
  Skeleton skel = build_skeleton(ba);
  uint32_t np = skel.index.at(set_of(4, {0}));
  uint32_t npq = skel.index.at(set_of(4, {0, 1}));
  uint32_t nall = skel.index.at(set_of(4, {0, 1, 2, 3}));
  std::vector<Ranking> mu0(3);
  mu0[np] = lift_scalar(1, skel.nodes[np], ba);
  mu0[npq] = lift_scalar(1, skel.nodes[npq], ba);
  mu0[nall] = lift_scalar(7, skel.nodes[nall], ba);
  InnerResult res = inner_analysis(skel, mu0, ba);
  Ranking expect(4);
  expect[0] = 1; expect[1] = 1; expect[2] = 1; expect[3] = 1;
  CHECK(res.value[nall] == expect);
  // fixpoint stability
  InnerResult again = inner_analysis(skel, res.value, ba);
  CHECK(again.value == res.value);
}

TEST_CASE("analyses are monotone, bounded, and order-independent") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Ba ba = preprocess(tabakov_vardi(3 + seed % 4, 2, 1.5, 0.4, seed), false);
    Skeleton skel = build_skeleton(ba);
    uint32_t n = ba.num_states;
    std::vector<uint32_t> mu0 = trivial_mu0(skel, ba);

    OuterResult fifo = outer_analysis(skel, mu0, WorklistOrder::Fifo);
    OuterResult lifo = outer_analysis(skel, mu0, WorklistOrder::Lifo);
    CHECK(fifo.value == lifo.value);
    for (uint32_t i = 0; i < skel.nodes.size(); ++i)
      CHECK(fifo.value[i] <= mu0[i]);
    uint64_t outer_bound =
        static_cast<uint64_t>(skel.nodes.size()) * (2 * n + 1);
    CHECK(fifo.pops <= outer_bound);
    CHECK(lifo.pops <= outer_bound);

    std::vector<Ranking> rmu0(skel.nodes.size());
    for (uint32_t i = 0; i < skel.nodes.size(); ++i)
      rmu0[i] = lift_scalar(fifo.value[i], skel.nodes[i], ba);
    InnerResult ifi = inner_analysis(skel, rmu0, ba, WorklistOrder::Fifo);
    InnerResult ili = inner_analysis(skel, rmu0, ba, WorklistOrder::Lifo);
    CHECK(ifi.value == ili.value);
    for (uint32_t i = 0; i < skel.nodes.size(); ++i) {
      CHECK(ifi.value[i].leq(rmu0[i]));
      // odd-or-zero rank at the fixpoint
      CHECK((ifi.value[i].is_zero() || ifi.value[i].rank() % 2 == 1));
    }
    uint64_t inner_bound =
        static_cast<uint64_t>(skel.nodes.size()) * (2 * n + 1) * (n ? n : 1);
    CHECK(ifi.pops <= inner_bound);
  }
}

TEST_CASE("propagated TRUBs keep the complement language intact") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Ba ba = tabakov_vardi(4, 2, 1.5, 0.5, seed);
    Ba base = run_pipeline(ba, {}).comp.automaton;
    for (PipelineConfig cfg : standard_pipelines(ba)) {
      Ba pruned = run_pipeline(ba, cfg).comp.automaton;
      CHECK_FALSE(lasso_equiv(base, pruned, 3, 4).has_value());
    }
  }
}
