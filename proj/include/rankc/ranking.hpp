#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rankc/ba.hpp"

namespace rankc {

inline uint32_t evenceil(uint32_t i) { return i & ~1u; }

// Monus: subtraction saturated at zero.
inline uint32_t monus(uint32_t a, uint32_t b) { return a > b ? a - b : 0; }

// Total mapping from states to ranks.  Valid rankings keep accepting states
// at even values; this is enforced at the construction sites, not here.
struct Ranking {
  std::vector<uint8_t> v;

  Ranking() = default;
  explicit Ranking(uint32_t n, uint8_t init = 0) : v(n, init) {}

  uint32_t size() const { return static_cast<uint32_t>(v.size()); }
  uint8_t operator[](uint32_t q) const { return v[q]; }
  uint8_t& operator[](uint32_t q) { return v[q]; }

  uint32_t rank() const {
    uint8_t m = 0;
    for (uint8_t x : v) m = x > m ? x : m;
    return m;
  }

  bool is_zero() const {
    for (uint8_t x : v)
      if (x) return false;
    return true;
  }

  bool leq(const Ranking& o) const {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] > o.v[i]) return false;
    return true;
  }

  bool operator==(const Ranking&) const = default;

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint8_t x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

bool is_s_tight(const Ranking& f, const StateSet& s);

// f' is reachable from f over a with macrostate s: every successor stays at
// or below its predecessor's rank, accepting transitions additionally cap at
// the even ceiling.
bool transition_consistent(const Ranking& f, const Ranking& f2,
                           const StateSet& s, uint32_t a, const Ba& ba);

// Pointwise-maximal f' with transition_consistent(f, f', s, a); states
// without any constraint get the top value 2|Q| (even-ceiled on accepting
// states).
Ranking max_successor_ranking(const StateSet& s, uint32_t a, const Ranking& f,
                              const Ba& ba);

Ranking ranking_join(const Ranking& f, const Ranking& g);  // pointwise max
Ranking ranking_meet(const Ranking& f, const Ranking& g);  // pointwise min

// Lowers the rank-attaining entries by one (accepting states land on the
// even ceiling of the decremented value).
Ranking dec(const Ranking& theta, const Ba& ba);

// Enumerates the s-tight rankings f <= cap; if required_rank >= 0, only
// rankings with rank(f) == required_rank are produced.  Accepting states are
// restricted to even values.
void enumerate_tight_rankings(const Ba& ba, const StateSet& s,
                              const Ranking& cap, int required_rank,
                              const std::function<void(const Ranking&)>& emit);

}  // namespace rankc
