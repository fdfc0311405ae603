#include "rankc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace rankc {

uint32_t FoldedDag::level_rank(uint32_t q) const {
  uint32_t m = 0;
  for (uint32_t pos = stem_len; pos < length; ++pos) {
    uint32_t r = ranks[idx(q, pos)];
    if (reachable[idx(q, pos)] && r != UINT32_MAX) m = std::max(m, r);
  }
  return m;
}

namespace {

struct Folded {
  const Ba* ba;
  uint32_t length, stem_len;
  std::vector<uint32_t> letters;  // per position
  std::vector<bool> reachable;

  uint32_t idx(uint32_t q, uint32_t pos) const { return q * length + pos; }
  uint32_t next_pos(uint32_t pos) const {
    return pos + 1 == length ? stem_len : pos + 1;
  }
};

Folded build_folded(const Ba& ba, const LassoWord& w) {
  if (w.loop.empty())
    throw std::invalid_argument("lasso word needs a non-empty loop");
  Folded f;
  f.ba = &ba;
  f.stem_len = static_cast<uint32_t>(w.stem.size());
  f.length = f.stem_len + static_cast<uint32_t>(w.loop.size());
  f.letters.reserve(f.length);
  for (uint32_t a : w.stem) f.letters.push_back(a);
  for (uint32_t a : w.loop) f.letters.push_back(a);
  for (uint32_t a : f.letters)
    if (a >= ba.num_symbols())
      throw std::out_of_range("lasso word symbol out of range");

  f.reachable.assign(static_cast<size_t>(ba.num_states) * f.length, false);
  std::deque<uint32_t> work;
  ba.initial.for_each([&](uint32_t q) {
    f.reachable[f.idx(q, 0)] = true;
    work.push_back(f.idx(q, 0));
  });
  while (!work.empty()) {
    uint32_t v = work.front();
    work.pop_front();
    uint32_t q = v / f.length, pos = v % f.length;
    uint32_t np = f.next_pos(pos);
    for (uint32_t r : ba.succ(q, f.letters[pos])) {
      uint32_t u = f.idx(r, np);
      if (!f.reachable[u]) {
        f.reachable[u] = true;
        work.push_back(u);
      }
    }
  }
  return f;
}

// Iterative Tarjan over the alive part of the folded graph; emits components
// via the callback (reverse topological order).
template <typename Emit>
void folded_sccs(const Folded& f, const std::vector<bool>& alive, Emit emit) {
  uint32_t nv = static_cast<uint32_t>(alive.size());
  std::vector<uint32_t> index(nv, UINT32_MAX), low(nv, 0);
  std::vector<bool> on_stack(nv, false);
  std::vector<uint32_t> stack;
  uint32_t counter = 0;

  struct Frame {
    uint32_t v;
    uint32_t succ_i;
  };
  std::vector<Frame> dfs;
  std::vector<std::vector<uint32_t>> succ_buf;

  auto successors = [&](uint32_t v) {
    std::vector<uint32_t> out;
    uint32_t q = v / f.length, pos = v % f.length;
    uint32_t np = f.next_pos(pos);
    for (uint32_t r : f.ba->succ(q, f.letters[pos])) {
      uint32_t u = f.idx(r, np);
      if (alive[u]) out.push_back(u);
    }
    return out;
  };

  for (uint32_t root = 0; root < nv; ++root) {
    if (!alive[root] || index[root] != UINT32_MAX) continue;
    dfs.push_back({root, 0});
    succ_buf.push_back(successors(root));
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!dfs.empty()) {
      Frame& fr = dfs.back();
      if (fr.succ_i < succ_buf.back().size()) {
        uint32_t u = succ_buf.back()[fr.succ_i++];
        if (index[u] == UINT32_MAX) {
          dfs.push_back({u, 0});
          succ_buf.push_back(successors(u));
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
        } else if (on_stack[u]) {
          low[fr.v] = std::min(low[fr.v], index[u]);
        }
      } else {
        uint32_t v = fr.v;
        if (low[v] == index[v]) {
          std::vector<uint32_t> comp;
          uint32_t u;
          do {
            u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp.push_back(u);
          } while (u != v);
          emit(comp);
        }
        dfs.pop_back();
        succ_buf.pop_back();
        if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
      }
    }
  }
}

bool scc_has_accepting_cycle(const Folded& f, const std::vector<bool>& alive,
                             const std::vector<uint32_t>& comp) {
  bool cyclic = comp.size() > 1;
  std::vector<bool> in_comp;
  auto member_of = [&](uint32_t v) {
    if (comp.size() == 1) return v == comp[0];
    if (in_comp.empty()) {
      in_comp.assign(alive.size(), false);
      for (uint32_t u : comp) in_comp[u] = true;
    }
    return bool(in_comp[v]);
  };
  bool has_acc = false;
  for (uint32_t v : comp) {
    uint32_t q = v / f.length, pos = v % f.length;
    uint32_t np = f.next_pos(pos);
    for (uint32_t r : f.ba->succ(q, f.letters[pos])) {
      uint32_t u = f.idx(r, np);
      if (!alive[u] || !member_of(u)) continue;
      if (comp.size() == 1) cyclic = true;  // self-loop
      if (f.ba->acc_states.test(q) || f.ba->acc_states.test(r) ||
          f.ba->has_acc_edge(q, f.letters[pos], r))
        has_acc = true;
    }
  }
  return cyclic && has_acc;
}

// Vertices that can reach any of the given targets inside the alive part.
std::vector<bool> backward_closure(const Folded& f,
                                   const std::vector<bool>& alive,
                                   std::vector<bool> seed) {
  // reverse adjacency rebuilt per call; folded graphs are small
  std::vector<std::vector<uint32_t>> preds(alive.size());
  for (uint32_t v = 0; v < alive.size(); ++v) {
    if (!alive[v]) continue;
    uint32_t q = v / f.length, pos = v % f.length;
    uint32_t np = f.next_pos(pos);
    for (uint32_t r : f.ba->succ(q, f.letters[pos])) {
      uint32_t u = f.idx(r, np);
      if (alive[u]) preds[u].push_back(v);
    }
  }
  std::deque<uint32_t> work;
  for (uint32_t v = 0; v < seed.size(); ++v)
    if (seed[v]) work.push_back(v);
  while (!work.empty()) {
    uint32_t v = work.front();
    work.pop_front();
    for (uint32_t u : preds[v])
      if (!seed[u]) {
        seed[u] = true;
        work.push_back(u);
      }
  }
  return seed;
}

}  // namespace

bool member(const Ba& ba, const LassoWord& w) {
  Folded f = build_folded(ba, w);
  bool found = false;
  folded_sccs(f, f.reachable, [&](const std::vector<uint32_t>& comp) {
    if (!found && scc_has_accepting_cycle(f, f.reachable, comp)) found = true;
  });
  return found;
}

FoldedDag fold_and_rank(const Ba& ba, const LassoWord& w) {
  Folded f = build_folded(ba, w);

  FoldedDag out;
  out.num_states = ba.num_states;
  out.length = f.length;
  out.stem_len = f.stem_len;
  out.reachable = f.reachable;
  out.ranks.assign(f.reachable.size(), UINT32_MAX);

  std::vector<bool> alive = f.reachable;
  auto alive_count = [&] {
    return std::count(alive.begin(), alive.end(), true);
  };

  uint32_t j = 0;
  while (alive_count() > 0) {
    // finite: cannot reach a cycle among surviving vertices
    std::vector<bool> on_cycle(alive.size(), false);
    folded_sccs(f, alive, [&](const std::vector<uint32_t>& comp) {
      bool cyclic = comp.size() > 1;
      if (!cyclic) {
        uint32_t v = comp[0];
        uint32_t q = v / f.length, pos = v % f.length;
        for (uint32_t r : f.ba->succ(q, f.letters[pos]))
          if (f.idx(r, f.next_pos(pos)) == v) cyclic = true;
      }
      if (cyclic)
        for (uint32_t v : comp) on_cycle[v] = true;
    });
    std::vector<bool> infinite = backward_closure(f, alive, on_cycle);
    for (uint32_t v = 0; v < alive.size(); ++v)
      if (alive[v] && !infinite[v]) {
        out.ranks[v] = j;
        alive[v] = false;
      }
    if (alive_count() == 0) break;

    // endangered: cannot reach a surviving accepting vertex or edge
    std::vector<bool> acc_seed(alive.size(), false);
    for (uint32_t v = 0; v < alive.size(); ++v) {
      if (!alive[v]) continue;
      uint32_t q = v / f.length, pos = v % f.length;
      if (ba.acc_states.test(q)) acc_seed[v] = true;
      uint32_t np = f.next_pos(pos);
      for (uint32_t r : f.ba->acc_succ(q, f.letters[pos]))
        if (alive[f.idx(r, np)]) acc_seed[v] = true;
    }
    std::vector<bool> safe = backward_closure(f, alive, std::move(acc_seed));
    bool removed = false;
    for (uint32_t v = 0; v < alive.size(); ++v)
      if (alive[v] && !safe[v]) {
        out.ranks[v] = j + 1;
        alive[v] = false;
        removed = true;
      }
    if (!removed)
      throw std::invalid_argument("lasso_rank: word is in the language");
    j += 2;
  }

  for (uint32_t r : out.ranks)
    if (r != UINT32_MAX) out.max_rank = std::max(out.max_rank, r);
  return out;
}

uint32_t lasso_rank(const Ba& ba, const LassoWord& w) {
  return fold_and_rank(ba, w).max_rank;
}

namespace {

bool next_word(std::vector<uint32_t>& word, uint32_t base) {
  for (size_t i = word.size(); i-- > 0;) {
    if (++word[i] < base) return true;
    word[i] = 0;
  }
  return false;
}

// Enumerates lasso words by |u|+|v|, then stem length, then lexicographically
// (stem first), stopping when pred returns true.
template <typename Pred>
std::optional<LassoWord> first_lasso(uint32_t symbols, uint32_t max_stem,
                                     uint32_t max_loop, Pred pred) {
  for (uint32_t total = 1; total <= max_stem + max_loop; ++total) {
    for (uint32_t su = 0; su <= std::min(max_stem, total - 1); ++su) {
      uint32_t lv = total - su;
      if (lv > max_loop) continue;
      LassoWord w;
      w.stem.assign(su, 0);
      w.loop.assign(lv, 0);
      do {
        w.loop.assign(lv, 0);
        do {
          if (pred(w)) return w;
        } while (next_word(w.loop, symbols));
      } while (next_word(w.stem, symbols));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LassoWord> lasso_equiv(const Ba& ba1, const Ba& ba2,
                                     uint32_t max_stem, uint32_t max_loop) {
  uint32_t symbols = ba1.num_symbols();
  if (symbols != ba2.num_symbols())
    throw std::invalid_argument("lasso_equiv: alphabets differ");
  return first_lasso(symbols, max_stem, max_loop, [&](const LassoWord& w) {
    return member(ba1, w) != member(ba2, w);
  });
}

std::optional<LassoWord> complement_check(const Ba& ba, const Ba& comp,
                                          uint32_t max_stem,
                                          uint32_t max_loop) {
  uint32_t symbols = ba.num_symbols();
  if (symbols != comp.num_symbols())
    throw std::invalid_argument("complement_check: alphabets differ");
  return first_lasso(symbols, max_stem, max_loop, [&](const LassoWord& w) {
    return member(ba, w) == member(comp, w);
  });
}

Ba tabakov_vardi(uint32_t n, uint32_t symbols, double trans_density,
                 double acc_density, uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tabakov_vardi: n must be positive");
  if (trans_density < 0 || acc_density < 0)
    throw std::invalid_argument("tabakov_vardi: negative density");
  uint64_t pairs = static_cast<uint64_t>(n) * n;
  uint64_t per_symbol =
      static_cast<uint64_t>(std::ceil(trans_density * n));
  if (per_symbol > pairs)
    throw std::invalid_argument(
        "tabakov_vardi: transition density exceeds n^2 pairs");
  uint32_t num_acc =
      static_cast<uint32_t>(std::min<uint64_t>(
          n, static_cast<uint64_t>(std::ceil(acc_density * n))));

  std::vector<std::string> names;
  for (uint32_t a = 0; a < symbols; ++a) names.push_back("s" + std::to_string(a));
  Ba ba(n, std::move(names));
  ba.initial.set(0);

  std::mt19937_64 rng(seed);
  // partial Fisher-Yates over all ordered state pairs, per symbol
  std::vector<uint32_t> pool(pairs);
  for (uint32_t a = 0; a < symbols; ++a) {
    for (uint32_t i = 0; i < pairs; ++i) pool[i] = i;
    for (uint64_t i = 0; i < per_symbol; ++i) {
      std::uniform_int_distribution<uint64_t> pick(i, pairs - 1);
      std::swap(pool[i], pool[pick(rng)]);
      uint32_t p = pool[i];
      ba.add_edge(p / n, a, p % n);
    }
  }

  std::vector<uint32_t> states(n);
  for (uint32_t q = 0; q < n; ++q) states[q] = q;
  for (uint32_t i = 0; i < num_acc; ++i) {
    std::uniform_int_distribution<uint32_t> pick(i, n - 1);
    std::swap(states[i], states[pick(rng)]);
    ba.acc_states.set(states[i]);
  }
  return ba;
}

}  // namespace rankc
