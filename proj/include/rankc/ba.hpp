#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankc/bitset.hpp"

namespace rankc {

// Nondeterministic Buchi automaton with acceptance on states and on
// transitions.  States and symbols are dense integer indices.
struct Ba {
  uint32_t num_states = 0;
  std::vector<std::string> symbols;      // display names, index = symbol id
  std::vector<std::string> state_names;  // optional; empty or one per state

  // delta[q * num_symbols() + a] = sorted successor list.
  std::vector<std::vector<uint32_t>> delta;
  // acc_delta[idx] is a sorted subset of delta[idx].
  std::vector<std::vector<uint32_t>> acc_delta;

  StateSet initial;
  StateSet acc_states;

  Ba() = default;
  Ba(uint32_t n, std::vector<std::string> syms);

  uint32_t num_symbols() const { return static_cast<uint32_t>(symbols.size()); }

  const std::vector<uint32_t>& succ(uint32_t q, uint32_t a) const {
    return delta[q * num_symbols() + a];
  }
  const std::vector<uint32_t>& acc_succ(uint32_t q, uint32_t a) const {
    return acc_delta[q * num_symbols() + a];
  }

  StateSet succ_set(const StateSet& s, uint32_t a) const;

  void add_edge(uint32_t q, uint32_t a, uint32_t r, bool accepting = false);
  bool has_edge(uint32_t q, uint32_t a, uint32_t r) const;
  bool has_acc_edge(uint32_t q, uint32_t a, uint32_t r) const;

  std::string state_name(uint32_t q) const;

  // Checks the structural invariants (endpoints in range, acc_delta subset
  // of delta, sorted lists).  Throws std::logic_error on violation.
  void validate() const;
};

struct SccClass {
  bool trivial = false;
  bool iwa = false;
  bool deterministic = false;
  bool nonaccepting = false;
};

struct Condensation {
  std::vector<StateSet> components;           // MSCCs
  std::vector<std::vector<uint32_t>> edges;   // adjacency, component indices
  std::vector<uint32_t> topo_order;           // sources first
  std::vector<uint32_t> comp_of;              // state -> component index
  uint32_t depth = 0;                         // longest component path

  bool is_terminal(uint32_t c) const { return edges[c].empty(); }
};

// Removes states that are unreachable from the initial states or from which
// no accepting cycle is reachable.  Language-preserving.
Ba trim(const Ba& ba);

// Clears accepting marks (on states and transitions) that do not lie inside
// a non-trivial MSCC.  Language-preserving.
Ba normalize_acceptance(const Ba& ba);

// MSCC decomposition with component DAG and depth.  Expects a trimmed input.
Condensation condense(const Ba& ba);

// Structural flags of one MSCC.  Throws std::invalid_argument if the given
// set is not an MSCC of ba.
SccClass classify(const Ba& ba, const StateSet& component);

// True iff every MSCC is deterministic, inherently weak accepting, or
// non-accepting.
bool is_elevator(const Ba& ba);

// True iff the automaton continues deterministically after every visit to an
// accepting state or accepting transition.
bool is_semi_deterministic(const Ba& ba);

// Fig-3-style determinism test for the transitions from c1 towards c2:
// the BA (C, delta|C, {}, {}) with C = delta(c1, Sigma) n (c1 u c2) must be
// deterministic.
bool inter_component_deterministic(const Ba& ba, const StateSet& c1,
                                   const StateSet& c2);

// MSCCs of the subgraph induced by `domain`; accepting transitions are
// skipped when drop_acc_edges is set (used for the IWA test).  Components
// are emitted in reverse topological order.
std::vector<StateSet> strongly_connected_components(const Ba& ba,
                                                    const StateSet& domain,
                                                    bool drop_acc_edges = false);

}  // namespace rankc
