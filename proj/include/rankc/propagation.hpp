#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rankc/ranking.hpp"
#include "rankc/trub.hpp"

namespace rankc {

// Deterministic subset graph: every reachable subset of Q (starting from the
// initial set) with its full subset-successor per symbol.
struct Skeleton {
  std::vector<StateSet> nodes;
  std::vector<uint32_t> succ;  // node * num_symbols + a -> node
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> preds;  // (node, a)
  std::unordered_map<StateSet, uint32_t, StateSetHash> index;
  uint32_t initial = 0;
  uint32_t num_symbols = 0;

  uint32_t successor(uint32_t node, uint32_t a) const {
    return succ[node * num_symbols + a];
  }
};

Skeleton build_skeleton(const Ba& ba);

enum class WorklistOrder { Fifo, Lifo };

struct OuterResult {
  std::vector<uint32_t> value;  // per skeleton node
  uint64_t pops = 0;
};

struct InnerResult {
  std::vector<Ranking> value;  // per skeleton node
  uint64_t pops = 0;
};

// min{mu(S), max over predecessor values}; no predecessors keep mu(S).
uint32_t outer_update(const std::vector<uint32_t>& mu, uint32_t s,
                      const Skeleton& skel);

// theta = mu(S) meet (join of max_successor_ranking(R, a, mu(R)) over every
// skeleton edge R -a-> S), then dec'd until its rank is odd or it is zero.
Ranking inner_update(const std::vector<Ranking>& mu, uint32_t s,
                     const Skeleton& skel, const Ba& ba);

OuterResult outer_analysis(const Skeleton& skel, std::vector<uint32_t> mu0,
                           WorklistOrder order = WorklistOrder::Fifo);

InnerResult inner_analysis(const Skeleton& skel, std::vector<Ranking> mu0,
                           const Ba& ba,
                           WorklistOrder order = WorklistOrder::Fifo);

// TRUB views of analysis results; subsets missing from the skeleton fall
// back to the trivial bound.
Trub outer_to_trub(const Skeleton& skel, std::vector<uint32_t> value,
                   const Ba& ba);
Trub inner_to_trub(const Skeleton& skel, std::vector<Ranking> value,
                   const Ba& ba);

}  // namespace rankc
