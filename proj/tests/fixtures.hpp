#pragma once

#include "rankc/ba.hpp"

namespace fixtures {

using rankc::Ba;
using rankc::StateSet;

// Q={p,q}, delta(p,a)={p,q}, delta(q,b)={q}, I={p}, F={q}.
// Language: a^n b^omega for n >= 1.
inline Ba ab_loop() {
  Ba ba(2, {"a", "b"});
  ba.add_edge(0, 0, 0);
  ba.add_edge(0, 0, 1);
  ba.add_edge(1, 1, 1);
  ba.initial.set(0);
  ba.acc_states.set(1);
  ba.state_names = {"p", "q"};
  return ba;
}

// Transition-based acceptance: q feeds an accepting two-cycle s <-> t.
// Components: {q}: N 1, {s,t}: IWA 0.
inline Ba weak_pair() {
  Ba ba(3, {"a", "b"});
  ba.add_edge(0, 0, 0);
  ba.add_edge(0, 0, 1);
  ba.add_edge(0, 0, 2);
  ba.add_edge(1, 1, 2);
  ba.add_edge(2, 1, 1, /*accepting=*/true);
  ba.initial.set(0);
  ba.state_names = {"q", "s", "t"};
  return ba;
}

// Three chained deterministic components over an 8-letter alphabet (letters
// are bitsets of {a,b,c}); each u_i loops on every letter, accepting when
// the letter contains its proposition.  chi = {u1:6, u2:4, u3:2}.
inline Ba det_chain() {
  std::vector<std::string> letters;
  for (uint32_t v = 0; v < 8; ++v) {
    std::string s;
    s += (v & 1) ? 'a' : '-';
    s += (v & 2) ? 'b' : '-';
    s += (v & 4) ? 'c' : '-';
    letters.push_back(s);
  }
  Ba ba(3, letters);
  for (uint32_t v = 0; v < 8; ++v) {
    ba.add_edge(0, v, 0, (v & 1) != 0);
    ba.add_edge(0, v, 1);
    ba.add_edge(1, v, 1, (v & 2) != 0);
    ba.add_edge(1, v, 2);
    ba.add_edge(2, v, 2, (v & 4) != 0);
  }
  ba.initial.set(0);
  ba.state_names = {"u1", "u2", "u3"};
  return ba;
}

// Worklist-analysis example: skeleton nodes {p}, {p,q}, {p,q,r,s}; accepting
// transitions from r and s back to p.
inline Ba diamond() {
  Ba ba(4, {"a", "b"});
  for (uint32_t a = 0; a < 2; ++a) {
    ba.add_edge(0, a, 0);
    ba.add_edge(0, a, 1);
    ba.add_edge(1, a, 2);
    ba.add_edge(1, a, 3);
    ba.add_edge(2, a, 0, /*accepting=*/true);
    ba.add_edge(3, a, 0, /*accepting=*/true);
  }
  ba.initial.set(0);
  ba.state_names = {"p", "q", "r", "s"};
  return ba;
}

inline Ba empty_ba() {
  Ba ba(0, {"a", "b"});
  return ba;
}

inline Ba universal_ba() {
  Ba ba(1, {"a", "b"});
  ba.add_edge(0, 0, 0);
  ba.add_edge(0, 1, 0);
  ba.initial.set(0);
  ba.acc_states.set(0);
  return ba;
}

inline StateSet set_of(uint32_t universe, std::initializer_list<uint32_t> qs) {
  StateSet s(universe);
  for (uint32_t q : qs) s.set(q);
  return s;
}

}  // namespace fixtures
