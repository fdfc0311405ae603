#include "rankc/ba.hpp"

#include <algorithm>
#include <deque>

namespace rankc {

Ba::Ba(uint32_t n, std::vector<std::string> syms)
    : num_states(n),
      symbols(std::move(syms)),
      delta(static_cast<size_t>(n) * symbols.size()),
      acc_delta(static_cast<size_t>(n) * symbols.size()),
      initial(n),
      acc_states(n) {}

StateSet Ba::succ_set(const StateSet& s, uint32_t a) const {
  StateSet out(num_states);
  s.for_each([&](uint32_t q) {
    for (uint32_t r : succ(q, a)) out.set(r);
  });
  return out;
}

static void insert_sorted(std::vector<uint32_t>& v, uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

static bool contains_sorted(const std::vector<uint32_t>& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void Ba::add_edge(uint32_t q, uint32_t a, uint32_t r, bool accepting) {
  size_t idx = static_cast<size_t>(q) * num_symbols() + a;
  insert_sorted(delta[idx], r);
  if (accepting) insert_sorted(acc_delta[idx], r);
}

bool Ba::has_edge(uint32_t q, uint32_t a, uint32_t r) const {
  return contains_sorted(succ(q, a), r);
}

bool Ba::has_acc_edge(uint32_t q, uint32_t a, uint32_t r) const {
  return contains_sorted(acc_succ(q, a), r);
}

std::string Ba::state_name(uint32_t q) const {
  if (q < state_names.size() && !state_names[q].empty()) return state_names[q];
  return std::to_string(q);
}

void Ba::validate() const {
  if (delta.size() != static_cast<size_t>(num_states) * num_symbols() ||
      acc_delta.size() != delta.size())
    throw std::logic_error("Ba: transition table has wrong shape");
  if (initial.universe() != num_states || acc_states.universe() != num_states)
    throw std::logic_error("Ba: state-set universe mismatch");
  for (size_t i = 0; i < delta.size(); ++i) {
    if (!std::is_sorted(delta[i].begin(), delta[i].end()) ||
        !std::is_sorted(acc_delta[i].begin(), acc_delta[i].end()))
      throw std::logic_error("Ba: successor lists must be sorted");
    for (uint32_t r : delta[i])
      if (r >= num_states) throw std::logic_error("Ba: successor out of range");
    for (uint32_t r : acc_delta[i])
      if (!contains_sorted(delta[i], r))
        throw std::logic_error("Ba: accepting transition not in delta");
  }
}

// ---------------------------------------------------------------------------
// SCC machinery (iterative Tarjan)
// ---------------------------------------------------------------------------

std::vector<StateSet> strongly_connected_components(const Ba& ba,
                                                    const StateSet& domain,
                                                    bool drop_acc_edges) {
  uint32_t n = ba.num_states;
  uint32_t k = ba.num_symbols();
  std::vector<uint32_t> index(n, 0), low(n, 0);
  std::vector<bool> on_stack(n, false), visited(n, false);
  std::vector<uint32_t> stack;
  std::vector<StateSet> out;
  uint32_t next_index = 1;

  struct Frame {
    uint32_t q;
    uint32_t sym;
    size_t pos;
  };
  std::vector<Frame> dfs;

  auto edge_ok = [&](uint32_t q, uint32_t a, uint32_t r) {
    if (!domain.test(r)) return false;
    return !drop_acc_edges || !ba.has_acc_edge(q, a, r);
  };

  domain.for_each([&](uint32_t root) {
    if (visited[root]) return;
    dfs.push_back({root, 0, 0});
    visited[root] = true;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!dfs.empty()) {
      Frame& f = dfs.back();
      bool descended = false;
      while (f.sym < k) {
        const auto& succs = ba.succ(f.q, f.sym);
        if (f.pos >= succs.size()) {
          ++f.sym;
          f.pos = 0;
          continue;
        }
        uint32_t r = succs[f.pos++];
        if (!edge_ok(f.q, f.sym, r)) continue;
        if (!visited[r]) {
          visited[r] = true;
          index[r] = low[r] = next_index++;
          stack.push_back(r);
          on_stack[r] = true;
          dfs.push_back({r, 0, 0});
          descended = true;
          break;
        } else if (on_stack[r]) {
          low[f.q] = std::min(low[f.q], index[r]);
        }
      }
      if (descended) continue;
      // f.q fully expanded
      uint32_t q = f.q;
      dfs.pop_back();
      if (low[q] == index[q]) {
        StateSet comp(n);
        uint32_t r;
        do {
          r = stack.back();
          stack.pop_back();
          on_stack[r] = false;
          comp.set(r);
        } while (r != q);
        out.push_back(std::move(comp));
      }
      if (!dfs.empty()) low[dfs.back().q] = std::min(low[dfs.back().q], low[q]);
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// trim / normalize
// ---------------------------------------------------------------------------

static StateSet reachable_from(const Ba& ba, const StateSet& from) {
  StateSet seen = from;
  std::vector<uint32_t> init = from.elements();
  std::deque<uint32_t> work(init.begin(), init.end());
  while (!work.empty()) {
    uint32_t q = work.front();
    work.pop_front();
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      for (uint32_t r : ba.succ(q, a))
        if (!seen.test(r)) {
          seen.set(r);
          work.push_back(r);
        }
  }
  return seen;
}

static bool component_accepting(const Ba& ba, const StateSet& comp) {
  if (comp.intersects(ba.acc_states)) return true;
  bool found = false;
  comp.for_each([&](uint32_t q) {
    if (found) return;
    for (uint32_t a = 0; a < ba.num_symbols() && !found; ++a)
      for (uint32_t r : ba.acc_succ(q, a))
        if (comp.test(r)) {
          found = true;
          break;
        }
  });
  return found;
}

static bool component_nontrivial(const Ba& ba, const StateSet& comp) {
  if (comp.count() > 1) return true;
  uint32_t q = comp.elements()[0];
  for (uint32_t a = 0; a < ba.num_symbols(); ++a)
    if (ba.has_edge(q, a, q)) return true;
  return false;
}

static Ba restrict_to(const Ba& ba, const StateSet& keep) {
  uint32_t n = ba.num_states;
  std::vector<uint32_t> remap(n, UINT32_MAX);
  uint32_t m = 0;
  for (uint32_t q = 0; q < n; ++q)
    if (keep.test(q)) remap[q] = m++;

  Ba out(m, ba.symbols);
  if (!ba.state_names.empty()) {
    out.state_names.resize(m);
    for (uint32_t q = 0; q < n; ++q)
      if (keep.test(q) && q < ba.state_names.size())
        out.state_names[remap[q]] = ba.state_names[q];
  }
  for (uint32_t q = 0; q < n; ++q) {
    if (!keep.test(q)) continue;
    if (ba.initial.test(q)) out.initial.set(remap[q]);
    if (ba.acc_states.test(q)) out.acc_states.set(remap[q]);
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      for (uint32_t r : ba.succ(q, a))
        if (keep.test(r)) out.add_edge(remap[q], a, remap[r], ba.has_acc_edge(q, a, r));
  }
  return out;
}

Ba trim(const Ba& ba) {
  StateSet reach = reachable_from(ba, ba.initial);

  // states lying in an accepting (non-trivial) MSCC
  StateSet all(ba.num_states);
  for (uint32_t q = 0; q < ba.num_states; ++q) all.set(q);
  StateSet seed(ba.num_states);
  for (const StateSet& comp : strongly_connected_components(ba, all))
    if (component_nontrivial(ba, comp) && component_accepting(ba, comp))
      seed |= comp;

  // backward closure of the seed
  StateSet productive = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t q = 0; q < ba.num_states; ++q) {
      if (productive.test(q)) continue;
      for (uint32_t a = 0; a < ba.num_symbols() && !productive.test(q); ++a)
        for (uint32_t r : ba.succ(q, a))
          if (productive.test(r)) {
            productive.set(q);
            changed = true;
            break;
          }
    }
  }

  return restrict_to(ba, reach & productive);
}

Ba normalize_acceptance(const Ba& ba) {
  StateSet all(ba.num_states);
  for (uint32_t q = 0; q < ba.num_states; ++q) all.set(q);
  auto comps = strongly_connected_components(ba, all);

  std::vector<uint32_t> comp_of(ba.num_states, 0);
  std::vector<bool> nontrivial(comps.size(), false);
  for (size_t c = 0; c < comps.size(); ++c) {
    comps[c].for_each([&](uint32_t q) { comp_of[q] = static_cast<uint32_t>(c); });
    nontrivial[c] = component_nontrivial(ba, comps[c]);
  }

  Ba out = ba;
  for (uint32_t q = 0; q < ba.num_states; ++q) {
    if (out.acc_states.test(q) && !nontrivial[comp_of[q]]) out.acc_states.reset(q);
    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      auto& acc = out.acc_delta[static_cast<size_t>(q) * ba.num_symbols() + a];
      std::erase_if(acc, [&](uint32_t r) {
        return comp_of[r] != comp_of[q] || !nontrivial[comp_of[q]];
      });
    }
  }
  return out;
}

Condensation condense(const Ba& ba) {
  Condensation c;
  StateSet all(ba.num_states);
  for (uint32_t q = 0; q < ba.num_states; ++q) all.set(q);
  c.components = strongly_connected_components(ba, all);  // reverse topo
  uint32_t m = static_cast<uint32_t>(c.components.size());
  c.comp_of.assign(ba.num_states, 0);
  for (uint32_t i = 0; i < m; ++i)
    c.components[i].for_each([&](uint32_t q) { c.comp_of[q] = i; });

  c.edges.assign(m, {});
  for (uint32_t q = 0; q < ba.num_states; ++q)
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      for (uint32_t r : ba.succ(q, a)) {
        uint32_t cq = c.comp_of[q], cr = c.comp_of[r];
        if (cq != cr) insert_sorted(c.edges[cq], cr);
      }

  // Tarjan emits components children-first; reversing gives a topological
  // order (sources first).
  c.topo_order.resize(m);
  for (uint32_t i = 0; i < m; ++i) c.topo_order[i] = m - 1 - i;

  // longest path, counted in components
  std::vector<uint32_t> len(m, 0);
  c.depth = 0;
  for (auto it = c.topo_order.rbegin(); it != c.topo_order.rend(); ++it) {
    uint32_t v = *it;
    len[v] = 1;
    for (uint32_t w : c.edges[v]) len[v] = std::max(len[v], len[w] + 1);
    c.depth = std::max(c.depth, len[v]);
  }
  return c;
}

SccClass classify(const Ba& ba, const StateSet& component) {
  auto inner = strongly_connected_components(ba, component);
  if (inner.size() != 1 || !(inner[0] == component))
    throw std::invalid_argument("classify: set is not an MSCC");

  SccClass cls;
  cls.trivial = !component_nontrivial(ba, component);
  cls.nonaccepting = !component_accepting(ba, component);

  // deterministic: (C, delta|C, {}, {}) deterministic
  cls.deterministic = true;
  component.for_each([&](uint32_t q) {
    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      uint32_t cnt = 0;
      for (uint32_t r : ba.succ(q, a))
        if (component.test(r)) ++cnt;
      if (cnt > 1) cls.deterministic = false;
    }
  });

  // IWA: no cycle survives after removing accepting states and accepting
  // transitions
  StateSet nonacc = component - ba.acc_states;
  bool has_cycle = false;
  for (const StateSet& comp : strongly_connected_components(ba, nonacc, true)) {
    if (comp.count() > 1) {
      has_cycle = true;
      break;
    }
    uint32_t q = comp.elements()[0];
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      if (ba.has_edge(q, a, q) && !ba.has_acc_edge(q, a, q)) has_cycle = true;
  }
  cls.iwa = !has_cycle;
  return cls;
}

bool is_elevator(const Ba& ba) {
  StateSet all(ba.num_states);
  for (uint32_t q = 0; q < ba.num_states; ++q) all.set(q);
  for (const StateSet& comp : strongly_connected_components(ba, all)) {
    SccClass cls = classify(ba, comp);
    if (!cls.deterministic && !cls.iwa && !cls.nonaccepting) return false;
  }
  return true;
}

bool is_semi_deterministic(const Ba& ba) {
  StateSet roots(ba.num_states);
  roots |= ba.acc_states;
  for (uint32_t q = 0; q < ba.num_states; ++q)
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      for (uint32_t r : ba.acc_succ(q, a)) roots.set(r);

  if (roots.empty()) return true;
  StateSet closure = reachable_from(ba, roots);
  bool det = true;
  closure.for_each([&](uint32_t q) {
    for (uint32_t a = 0; a < ba.num_symbols(); ++a)
      if (ba.succ(q, a).size() > 1) det = false;
  });
  return det;
}

bool inter_component_deterministic(const Ba& ba, const StateSet& c1,
                                   const StateSet& c2) {
  StateSet c(ba.num_states);
  for (uint32_t a = 0; a < ba.num_symbols(); ++a) c |= ba.succ_set(c1, a);
  c &= (c1 | c2);
  bool det = true;
  c.for_each([&](uint32_t q) {
    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      uint32_t cnt = 0;
      for (uint32_t r : ba.succ(q, a))
        if (c.test(r)) ++cnt;
      if (cnt > 1) det = false;
    }
  });
  return det;
}

}  // namespace rankc
