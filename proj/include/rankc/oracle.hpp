#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankc/ba.hpp"

namespace rankc {

// Ultimately periodic word u . v^omega.
struct LassoWord {
  std::vector<uint32_t> stem;
  std::vector<uint32_t> loop;  // non-empty

  bool operator==(const LassoWord&) const = default;
};

// Finite quotient of the run DAG over a lasso word: vertices are pairs
// (state, position) with positions past the stem wrapping modulo the loop.
struct FoldedDag {
  uint32_t num_states = 0;
  uint32_t length = 0;  // |stem| + |loop|
  uint32_t stem_len = 0;
  std::vector<bool> reachable;    // q * length + pos
  std::vector<uint32_t> ranks;    // q * length + pos; UINT32_MAX = never cut
  uint32_t max_rank = 0;

  uint32_t idx(uint32_t q, uint32_t pos) const { return q * length + pos; }
  uint32_t next_pos(uint32_t pos) const {
    return pos + 1 == length ? stem_len : pos + 1;
  }
  // Upper bound for state q over all loop positions; 0 if q never appears.
  uint32_t level_rank(uint32_t q) const;
};

bool member(const Ba& ba, const LassoWord& w);

// Rank elimination on the folded DAG; only defined for rejected words.
// Throws std::invalid_argument when member(ba, w) holds.
FoldedDag fold_and_rank(const Ba& ba, const LassoWord& w);
uint32_t lasso_rank(const Ba& ba, const LassoWord& w);

// Bounded language comparison: first lasso word (ordered by |u|+|v|, then
// stem length, then lexicographically) on which membership differs.
std::optional<LassoWord> lasso_equiv(const Ba& ba1, const Ba& ba2,
                                     uint32_t max_stem, uint32_t max_loop);

// First bounded lasso word on which membership does not differ (a correct
// complement makes membership an exclusive or).
std::optional<LassoWord> complement_check(const Ba& ba, const Ba& comp,
                                          uint32_t max_stem,
                                          uint32_t max_loop);

// Random automaton: n states, state 0 initial, ceil(td*n) distinct
// transitions per symbol, ceil(ad*n) accepting states.
Ba tabakov_vardi(uint32_t n, uint32_t symbols, double trans_density,
                 double acc_density, uint64_t seed);

}  // namespace rankc
