#include "rankc/ranking.hpp"

#include <algorithm>

namespace rankc {

bool is_s_tight(const Ranking& f, const StateSet& s) {
  uint32_t r = f.rank();
  if (r % 2 == 0) return false;  // (i) odd rank
  // (iii) states outside s all have rank 0
  for (uint32_t q = 0; q < f.size(); ++q)
    if (!s.test(q) && f[q] != 0) return false;
  // (ii) every odd value 1, 3, ..., r is taken inside s
  std::vector<bool> seen((r + 1) / 2, false);
  s.for_each([&](uint32_t q) {
    if (f[q] % 2 == 1) seen[(f[q] - 1) / 2] = true;
  });
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool transition_consistent(const Ranking& f, const Ranking& f2,
                           const StateSet& s, uint32_t a, const Ba& ba) {
  bool ok = true;
  s.for_each([&](uint32_t q) {
    for (uint32_t r : ba.succ(q, a))
      if (f2[r] > f[q]) ok = false;
    for (uint32_t r : ba.acc_succ(q, a))
      if (f2[r] > evenceil(f[q])) ok = false;
  });
  return ok;
}

Ranking max_successor_ranking(const StateSet& s, uint32_t a, const Ranking& f,
                              const Ba& ba) {
  uint32_t n = ba.num_states;
  uint32_t top = 2 * n;
  Ranking out(n, static_cast<uint8_t>(std::min<uint32_t>(top, 255)));
  s.for_each([&](uint32_t q) {
    for (uint32_t r : ba.succ(q, a)) out[r] = std::min<uint8_t>(out[r], f[q]);
    for (uint32_t r : ba.acc_succ(q, a))
      out[r] = std::min<uint8_t>(out[r], static_cast<uint8_t>(evenceil(f[q])));
  });
  for (uint32_t q = 0; q < n; ++q)
    if (ba.acc_states.test(q)) out[q] = static_cast<uint8_t>(evenceil(out[q]));
  return out;
}

Ranking ranking_join(const Ranking& f, const Ranking& g) {
  Ranking out(f.size());
  for (uint32_t q = 0; q < f.size(); ++q) out[q] = std::max(f[q], g[q]);
  return out;
}

Ranking ranking_meet(const Ranking& f, const Ranking& g) {
  Ranking out(f.size());
  for (uint32_t q = 0; q < f.size(); ++q) out[q] = std::min(f[q], g[q]);
  return out;
}

Ranking dec(const Ranking& theta, const Ba& ba) {
  uint32_t r = theta.rank();
  Ranking out = theta;
  for (uint32_t q = 0; q < theta.size(); ++q) {
    if (theta[q] != r) continue;
    uint32_t lowered = monus(theta[q], 1);
    out[q] = static_cast<uint8_t>(ba.acc_states.test(q) ? evenceil(lowered)
                                                        : lowered);
  }
  return out;
}

namespace {

struct TightEnum {
  const Ba& ba;
  const std::vector<uint32_t>& states;  // elements of s
  std::vector<uint8_t> caps;            // per position, already rank-capped
  uint32_t rank;                        // target (odd) rank
  uint32_t num_odds;                    // odd values to cover: (rank+1)/2
  const std::function<void(const Ranking&)>& emit;
  Ranking current;
  uint64_t covered = 0;  // bitmask over odd values (bit i = value 2i+1)

  void run(size_t pos) {
    uint32_t missing =
        num_odds - static_cast<uint32_t>(__builtin_popcountll(covered));
    uint32_t remaining = static_cast<uint32_t>(states.size() - pos);
    if (missing > remaining) return;  // cannot cover all odd values any more
    if (pos == states.size()) {
      if (missing == 0) emit(current);
      return;
    }
    uint32_t q = states[pos];
    bool acc = ba.acc_states.test(q);
    for (uint32_t val = 0; val <= caps[pos]; ++val) {
      if (acc && val % 2 == 1) continue;
      uint64_t bit = (val % 2 == 1) ? (uint64_t{1} << (val / 2)) : 0;
      bool newly = bit && !(covered & bit);
      covered |= bit;
      current[q] = static_cast<uint8_t>(val);
      run(pos + 1);
      if (newly) covered &= ~bit;
    }
    current[q] = 0;
  }
};

}  // namespace

void enumerate_tight_rankings(const Ba& ba, const StateSet& s,
                              const Ranking& cap, int required_rank,
                              const std::function<void(const Ranking&)>& emit) {
  std::vector<uint32_t> states = s.elements();
  if (states.empty()) return;  // no S-tight ranking over the empty set

  uint32_t max_cap = 0;
  for (uint32_t q : states) max_cap = std::max<uint32_t>(max_cap, cap[q]);

  auto run_rank = [&](uint32_t r) {
    if (r % 2 == 0 || r > max_cap) return;
    if ((r + 1) / 2 > states.size()) return;  // not enough states for the odds
    TightEnum te{ba,
                 states,
                 {},
                 r,
                 (r + 1) / 2,
                 emit,
                 Ranking(ba.num_states),
                 0};
    te.caps.reserve(states.size());
    for (uint32_t q : states)
      te.caps.push_back(static_cast<uint8_t>(std::min<uint32_t>(cap[q], r)));
    te.run(0);
  };

  if (required_rank >= 0) {
    run_rank(static_cast<uint32_t>(required_rank));
  } else {
    for (uint32_t r = 1; r <= max_cap; r += 2) run_rank(r);
  }
}

}  // namespace rankc
