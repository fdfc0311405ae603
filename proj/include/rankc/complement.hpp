#pragma once

#include <unordered_map>

#include "rankc/trub.hpp"

namespace rankc {

// One state of the rank-based complement: either a waiting-part subset S or
// a tight-part quadruple (S, O, f, i).
struct Macrostate {
  bool tight = false;
  StateSet s;
  StateSet o;      // tight only
  Ranking f;       // tight only
  uint16_t phase = 0;  // tight only; the even index i

  bool operator==(const Macrostate&) const = default;

  size_t hash() const {
    size_t h = s.hash();
    if (tight) {
      h = h * 31 + o.hash();
      h = h * 31 + f.hash();
      h = h * 31 + phase + 1;
    }
    return h;
  }

  std::string display(const Ba& source) const;
};

struct ComplementStats {
  uint64_t waiting = 0;
  uint64_t tight = 0;
  uint64_t total = 0;
  uint64_t transitions = 0;
  uint32_t max_rank = 0;  // largest rank(f) over materialized tight states
};

struct ComplementResult {
  Ba automaton;  // state-based output
  ComplementStats stats;
  std::vector<Macrostate> macrostates;  // indexed like automaton states
};

// Rank-based complementation pruned by the given TRUB.  The TRUB must be
// sound for ba (trivial_trub always is).  When post_trim is set, the result
// is additionally trimmed (stats still describe the untrimmed construction).
ComplementResult complement(const Ba& ba, const Trub& trub,
                            bool post_trim = false);

ComplementStats complement_stats(const Ba& ba, const Trub& trub);

}  // namespace rankc
