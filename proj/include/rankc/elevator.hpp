#pragma once

#include "rankc/trub.hpp"

namespace rankc {

enum class SccKind { T, IWA, D, N, G };

const char* scc_kind_name(SccKind k);

struct SccLabel {
  SccKind kind;
  uint32_t bound;
};

struct RankAssignment {
  Condensation cond;
  std::vector<SccLabel> labels;  // per component index
  std::vector<uint32_t> chi;     // per state: its component's bound
  uint32_t chi_max = 0;
};

// Assigns a type and rank bound to every MSCC, terminal components first.
// Expects ba trimmed and acceptance-normalized.  With general=false the
// input must be an elevator automaton (std::invalid_argument otherwise);
// with general=true arbitrary BAs are handled via G-typed components.
RankAssignment assign_ranks(const Ba& ba, bool general);

// Lifts chi to a TRUB: states of S get their chi bound (even-ceiled on
// accepting states), states outside S get 0.  chi is copied; ba must
// outlive the Trub.
Trub chi_to_trub(const std::vector<uint32_t>& chi, const Ba& ba);

// Copies every non-trivial accepting MSCC into an accepting duplicate that
// is entered nondeterministically; all acceptance moves to the copies.
// Language-preserving; at most doubles the state count.
Ba deelevate(const Ba& ba);

// Deelevates and powerset-determinizes the terminal nondeterministic IWA
// components.  Input must be an elevator automaton; the output is
// semi-deterministic with at most 2|Q| + 2^|Q| states.
Ba semi_determinize_elevator(const Ba& ba);

}  // namespace rankc
