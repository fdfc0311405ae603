#include "rankc/elevator.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace rankc {

const char* scc_kind_name(SccKind k) {
  switch (k) {
    case SccKind::T: return "T";
    case SccKind::IWA: return "IWA";
    case SccKind::D: return "D";
    case SccKind::N: return "N";
    case SccKind::G: return "G";
  }
  return "?";
}

namespace {

constexpr uint32_t kAbsent = UINT32_MAX;

// Aggregated child bounds per kind; kAbsent when no child of that kind.
struct ChildAgg {
  uint32_t d = kAbsent, n = kAbsent, w = kAbsent, g = kAbsent;
};

uint32_t add_term(uint32_t slot, uint32_t delta) {
  return slot == kAbsent ? kAbsent : slot + delta;
}

uint32_t max_terms(std::initializer_list<uint32_t> terms) {
  uint32_t m = 0;
  bool any = false;
  for (uint32_t t : terms)
    if (t != kAbsent) {
      m = std::max(m, t);
      any = true;
    }
  return any ? m : 0;
}

// Determinism penalty: 0 when all edges to the children of the given kind that
// attain the aggregate maximum are inter-component deterministic, else 2.
uint32_t det_penalty(const Ba& ba, const Condensation& cond, uint32_t c,
                     const std::vector<SccLabel>& labels, SccKind kind,
                     uint32_t agg) {
  for (uint32_t child : cond.edges[c]) {
    if (labels[child].kind != kind || labels[child].bound != agg) continue;
    if (!inter_component_deterministic(ba, cond.components[c],
                                       cond.components[child]))
      return 2;
  }
  return 0;
}

uint32_t d_rule(const Ba& ba, const Condensation& cond, uint32_t c,
                const std::vector<SccLabel>& labels, const ChildAgg& agg) {
  uint32_t circ_d = agg.d == kAbsent
                        ? 0
                        : det_penalty(ba, cond, c, labels, SccKind::D, agg.d);
  uint32_t circ_w = agg.w == kAbsent
                        ? 0
                        : det_penalty(ba, cond, c, labels, SccKind::IWA, agg.w);
  return max_terms({add_term(agg.d, circ_d), add_term(agg.n, 1),
                    add_term(agg.w, circ_w), add_term(agg.g, 2), 2});
}

uint32_t n_rule(const ChildAgg& agg) {
  return max_terms({add_term(agg.d, 1), agg.n, add_term(agg.w, 1),
                    add_term(agg.g, 1)});
}

uint32_t iwa_rule(const ChildAgg& agg) {
  return max_terms({agg.d, add_term(agg.n, 1), agg.w, agg.g});
}

}  // namespace

RankAssignment assign_ranks(const Ba& ba, bool general) {
  RankAssignment out;
  out.cond = condense(ba);
  const Condensation& cond = out.cond;
  uint32_t m = static_cast<uint32_t>(cond.components.size());
  out.labels.assign(m, SccLabel{SccKind::N, 0});

  auto fail_elevator = [&] {
    throw std::invalid_argument(
        "assign_ranks: input is not an elevator automaton");
  };

  // reverse topological order: terminal components first
  for (auto it = cond.topo_order.rbegin(); it != cond.topo_order.rend(); ++it) {
    uint32_t c = *it;
    const StateSet& comp = cond.components[c];
    SccClass cls = classify(ba, comp);

    if (cond.is_terminal(c)) {
      if (cls.trivial) {
        out.labels[c] = {SccKind::IWA, 0};  // no cycle at all
      } else if (cls.iwa && !cls.nonaccepting) {
        out.labels[c] = {SccKind::IWA, 0};  // T1
      } else if (cls.deterministic && !cls.nonaccepting) {
        out.labels[c] = {SccKind::D, 2};  // T2
      } else if (general) {
        // T3
        out.labels[c] = {SccKind::G,
                         2 * (comp - ba.acc_states).count()};
      } else {
        fail_elevator();
      }
      continue;
    }

    ChildAgg agg;
    for (uint32_t child : cond.edges[c]) {
      const SccLabel& l = out.labels[child];
      auto bump = [&](uint32_t& slot) {
        slot = slot == kAbsent ? l.bound : std::max(slot, l.bound);
      };
      switch (l.kind) {
        case SccKind::D: bump(agg.d); break;
        case SccKind::N: bump(agg.n); break;
        case SccKind::IWA: bump(agg.w); break;
        case SccKind::G: bump(agg.g); break;
        case SccKind::T: break;  // not emitted
      }
    }

    if (cls.trivial) {
      // I1: inherit the kind attaining the plain maximum, D > IWA > N > G on
      // ties
      uint32_t best = max_terms({agg.d, agg.w, agg.n, agg.g});
      SccKind kind = SccKind::N;
      if (agg.g != kAbsent && agg.g == best) kind = SccKind::G;
      if (agg.n != kAbsent && agg.n == best) kind = SccKind::N;
      if (agg.w != kAbsent && agg.w == best) kind = SccKind::IWA;
      if (agg.d != kAbsent && agg.d == best) kind = SccKind::D;
      out.labels[c] = {kind, best};
    } else if (cls.iwa && !cls.nonaccepting) {
      out.labels[c] = {SccKind::IWA, iwa_rule(agg)};  // I2
    } else if (cls.deterministic && !cls.nonaccepting) {
      out.labels[c] = {SccKind::D, d_rule(ba, cond, c, out.labels, agg)};  // I3
    } else if (cls.deterministic && cls.nonaccepting) {
      // I4: both readings, keep the smaller bound; ties go to N
      uint32_t as_d = d_rule(ba, cond, c, out.labels, agg);
      uint32_t as_n = n_rule(agg);
      out.labels[c] = as_d < as_n ? SccLabel{SccKind::D, as_d}
                                  : SccLabel{SccKind::N, as_n};
    } else if (cls.nonaccepting) {
      out.labels[c] = {SccKind::N, n_rule(agg)};  // I5
    } else if (general) {
      // I6
      out.labels[c] = {SccKind::G,
                       iwa_rule(agg) + 2 * (comp - ba.acc_states).count()};
    } else {
      fail_elevator();
    }
  }

  out.chi.assign(ba.num_states, 0);
  for (uint32_t c = 0; c < m; ++c)
    cond.components[c].for_each(
        [&](uint32_t q) { out.chi[q] = out.labels[c].bound; });
  for (uint32_t v : out.chi) out.chi_max = std::max(out.chi_max, v);
  return out;
}

Trub chi_to_trub(const std::vector<uint32_t>& chi, const Ba& ba) {
  return Trub{[chi, &ba](const StateSet& s) {
    Ranking out(ba.num_states);
    s.for_each([&](uint32_t q) {
      uint32_t v = ba.acc_states.test(q) ? evenceil(chi[q]) : chi[q];
      out[q] = static_cast<uint8_t>(std::min<uint32_t>(v, 255));
    });
    return out;
  }};
}

Ba deelevate(const Ba& ba) {
  uint32_t n = ba.num_states;
  StateSet all(n);
  for (uint32_t q = 0; q < n; ++q) all.set(q);
  auto comps = strongly_connected_components(ba, all);

  std::vector<uint32_t> comp_of(n, 0);
  for (size_t c = 0; c < comps.size(); ++c)
    comps[c].for_each([&](uint32_t q) { comp_of[q] = static_cast<uint32_t>(c); });

  // copies only for non-trivial accepting components
  std::vector<bool> copied(comps.size(), false);
  std::vector<uint32_t> copy_id(n, UINT32_MAX);
  uint32_t next = n;
  for (size_t c = 0; c < comps.size(); ++c) {
    bool nontrivial = comps[c].count() > 1;
    if (!nontrivial) {
      uint32_t q = comps[c].elements()[0];
      for (uint32_t a = 0; a < ba.num_symbols(); ++a)
        if (ba.has_edge(q, a, q)) nontrivial = true;
    }
    bool accepting = comps[c].intersects(ba.acc_states);
    if (!accepting)
      comps[c].for_each([&](uint32_t q) {
        for (uint32_t a = 0; a < ba.num_symbols() && !accepting; ++a)
          for (uint32_t r : ba.acc_succ(q, a))
            if (comps[c].test(r)) {
              accepting = true;
              break;
            }
      });
    if (nontrivial && accepting) {
      copied[c] = true;
      comps[c].for_each([&](uint32_t q) { copy_id[q] = next++; });
    }
  }

  Ba out(next, ba.symbols);
  if (!ba.state_names.empty()) {
    out.state_names.resize(next);
    for (uint32_t q = 0; q < n; ++q) {
      out.state_names[q] = ba.state_name(q);
      if (copy_id[q] != UINT32_MAX)
        out.state_names[copy_id[q]] = ba.state_name(q) + "'";
    }
  }
  out.initial = StateSet(next);
  ba.initial.for_each([&](uint32_t q) { out.initial.set(q); });

  for (uint32_t q = 0; q < n; ++q) {
    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      for (uint32_t r : ba.succ(q, a)) {
        out.add_edge(q, a, r);  // original copy loses all acceptance
        if (copy_id[r] != UINT32_MAX) out.add_edge(q, a, copy_id[r]);
      }
      if (copy_id[q] != UINT32_MAX) {
        for (uint32_t r : ba.succ(q, a))
          if (comp_of[r] == comp_of[q] && copy_id[r] != UINT32_MAX)
            out.add_edge(copy_id[q], a, copy_id[r], ba.has_acc_edge(q, a, r));
      }
    }
    if (copy_id[q] != UINT32_MAX && ba.acc_states.test(q))
      out.acc_states.set(copy_id[q]);
  }
  return out;
}

Ba semi_determinize_elevator(const Ba& ba) {
  if (!is_elevator(ba))
    throw std::invalid_argument("semi_determinize_elevator: not an elevator");

  Ba de = deelevate(ba);
  uint32_t n = de.num_states;
  StateSet all(n);
  for (uint32_t q = 0; q < n; ++q) all.set(q);
  auto comps = strongly_connected_components(de, all);

  // pick the terminal nondeterministic IWA components
  std::vector<uint32_t> comp_of(n, UINT32_MAX);
  for (size_t c = 0; c < comps.size(); ++c)
    comps[c].for_each([&](uint32_t q) { comp_of[q] = static_cast<uint32_t>(c); });
  std::vector<bool> terminal(comps.size(), true);
  for (uint32_t q = 0; q < n; ++q)
    for (uint32_t a = 0; a < de.num_symbols(); ++a)
      for (uint32_t r : de.succ(q, a))
        if (comp_of[r] != comp_of[q]) terminal[comp_of[q]] = false;

  std::vector<bool> replace(comps.size(), false);
  for (size_t c = 0; c < comps.size(); ++c) {
    if (!terminal[c]) continue;
    SccClass cls = classify(de, comps[c]);
    if (cls.iwa && !cls.nonaccepting && !cls.deterministic) replace[c] = true;
  }

  if (std::none_of(replace.begin(), replace.end(), [](bool b) { return b; }))
    return de;

  // plain states keep their role; each entered subset of a replaced
  // component becomes one fresh state
  std::vector<uint32_t> plain_id(n, UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t q = 0; q < n; ++q)
    if (!replace[comp_of[q]]) plain_id[q] = next++;

  struct Edge { uint32_t src, sym, dst; bool acc; };
  std::vector<Edge> edges;
  std::unordered_map<StateSet, uint32_t, StateSetHash> subset_id;
  std::deque<std::pair<uint32_t, StateSet>> subset_work;  // (component, set)

  auto intern_subset = [&](uint32_t c, const StateSet& set) {
    auto it = subset_id.find(set);
    if (it != subset_id.end()) return it->second;
    uint32_t id = next++;
    subset_id.emplace(set, id);
    subset_work.emplace_back(c, set);
    return id;
  };

  // initial states inside a replaced component become an initial subset
  std::unordered_map<uint32_t, StateSet> init_entry;
  de.initial.for_each([&](uint32_t q) {
    if (replace[comp_of[q]]) {
      auto [it, fresh] = init_entry.try_emplace(comp_of[q], StateSet(n));
      it->second.set(q);
    }
  });
  std::vector<uint32_t> init_subsets;
  for (auto& [c, set] : init_entry)
    init_subsets.push_back(intern_subset(c, set));

  // edges of the untouched part, plus entry edges into powerset components
  for (uint32_t q = 0; q < n; ++q) {
    if (replace[comp_of[q]]) continue;
    for (uint32_t a = 0; a < de.num_symbols(); ++a) {
      std::unordered_map<uint32_t, StateSet> entry;  // component -> targets
      for (uint32_t r : de.succ(q, a)) {
        if (!replace[comp_of[r]]) {
          edges.push_back({plain_id[q], a, plain_id[r], de.has_acc_edge(q, a, r)});
        } else {
          auto [it, fresh] = entry.try_emplace(comp_of[r], StateSet(n));
          it->second.set(r);
        }
      }
      for (auto& [c, set] : entry)
        edges.push_back({plain_id[q], a, intern_subset(c, set), false});
    }
  }

  while (!subset_work.empty()) {
    auto [c, set] = subset_work.front();
    subset_work.pop_front();
    uint32_t id = subset_id.at(set);
    for (uint32_t a = 0; a < de.num_symbols(); ++a) {
      StateSet succ = de.succ_set(set, a);
      succ &= comps[c];  // copies never leave their component anyway
      if (succ.empty()) continue;
      edges.push_back({id, a, intern_subset(c, succ), false});
    }
  }

  Ba out(next, de.symbols);
  for (auto& e : edges) out.add_edge(e.src, e.sym, e.dst, e.acc);
  out.initial = StateSet(next);
  de.initial.for_each([&](uint32_t q) {
    if (plain_id[q] != UINT32_MAX) out.initial.set(plain_id[q]);
  });
  for (uint32_t id : init_subsets) out.initial.set(id);
  for (uint32_t q = 0; q < n; ++q)
    if (plain_id[q] != UINT32_MAX && de.acc_states.test(q))
      out.acc_states.set(plain_id[q]);
  // every powerset state sits inside an IWA component: accepting
  for (auto& [set, id] : subset_id) out.acc_states.set(id);
  return out;
}

}  // namespace rankc
