#pragma once

#include <functional>

#include "rankc/ranking.hpp"

namespace rankc {

// Tight-rank upper bound: per macrostate S, a ranking that every super-tight
// run's level ranking must stay below.  Values outside S are 0.
struct Trub {
  std::function<Ranking(const StateSet&)> cap;
};

// 2|S \ Q_F| monus 1.
uint32_t trivial_scalar(const StateSet& s, const Ba& ba);

// Lifts a scalar bound m to a ranking on S: accepting states get m monus 1,
// other states of S get m, everything else 0.
Ranking lift_scalar(uint32_t m, const StateSet& s, const Ba& ba);

// The returned closure refers to ba; ba must outlive the Trub.
Trub trivial_trub(const Ba& ba);

// Pointwise meet of two TRUBs (still a TRUB).
Trub trub_meet(Trub a, Trub b);

}  // namespace rankc
