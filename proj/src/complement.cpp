#include "rankc/complement.hpp"

#include <deque>
#include <sstream>

namespace rankc {

std::string Macrostate::display(const Ba& source) const {
  std::ostringstream os;
  if (!tight) {
    os << "{";
    bool first = true;
    s.for_each([&](uint32_t q) {
      if (!first) os << ",";
      first = false;
      os << source.state_name(q);
    });
    os << "}";
    return os.str();
  }
  os << "({";
  bool first = true;
  s.for_each([&](uint32_t q) {
    if (!first) os << ",";
    first = false;
    os << source.state_name(q) << ":" << static_cast<int>(f[q]);
  });
  os << "},{";
  first = true;
  o.for_each([&](uint32_t q) {
    if (!first) os << ",";
    first = false;
    os << source.state_name(q);
  });
  os << "}," << phase << ")";
  return os.str();
}

namespace {

struct MacroHash {
  size_t operator()(const Macrostate& m) const { return m.hash(); }
};

}  // namespace

ComplementResult complement(const Ba& ba, const Trub& trub, bool post_trim) {
  if (ba.num_states > 120)
    throw std::invalid_argument(
        "complement: inputs with more than 120 states are not supported");

  std::vector<Macrostate> states;
  std::unordered_map<Macrostate, uint32_t, MacroHash> index;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> edges;  // (sym, dst)
  std::deque<uint32_t> work;

  auto intern = [&](Macrostate&& m) {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(states.size());
    index.emplace(m, id);
    states.push_back(std::move(m));
    edges.emplace_back();
    work.push_back(id);
    return id;
  };

  Macrostate init;
  init.s = ba.initial;
  intern(std::move(init));

  ComplementStats stats;

  // Memoized TRUB lookups: the same target subset S' recurs across many
  // source macrostates.
  std::unordered_map<StateSet, Ranking, StateSetHash> cap_cache;
  auto cap_of = [&](const StateSet& s) -> const Ranking& {
    auto it = cap_cache.find(s);
    if (it == cap_cache.end()) it = cap_cache.emplace(s, trub.cap(s)).first;
    return it->second;
  };

  while (!work.empty()) {
    uint32_t id = work.front();
    work.pop_front();
    Macrostate cur = states[id];  // copy: states may reallocate below

    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      StateSet succ = ba.succ_set(cur.s, a);

      if (!cur.tight) {
        // delta_1: subset construction step
        {
          Macrostate next;
          next.s = succ;
          uint32_t dst = intern(std::move(next));
          edges[id].emplace_back(a, dst);
        }
        // delta_2: jump to every S'-tight ranking below the TRUB
        enumerate_tight_rankings(ba, succ, cap_of(succ), -1,
                                 [&](const Ranking& f) {
                                   Macrostate next;
                                   next.tight = true;
                                   next.s = succ;
                                   next.o = StateSet(ba.num_states);
                                   next.f = f;
                                   next.phase = 0;
                                   uint32_t dst = intern(std::move(next));
                                   edges[id].emplace_back(a, dst);
                                 });
      } else {
        // delta_3: rank-consistent successors of equal rank
        Ranking bound =
            ranking_meet(max_successor_ranking(cur.s, a, cur.f, ba), cap_of(succ));
        uint32_t r = cur.f.rank();
        bool o_empty = cur.o.empty();
        StateSet o_succ(ba.num_states);
        if (!o_empty) o_succ = ba.succ_set(cur.o, a);

        enumerate_tight_rankings(
            ba, succ, bound, static_cast<int>(r), [&](const Ranking& f2) {
              Macrostate next;
              next.tight = true;
              next.s = succ;
              next.f = f2;
              uint32_t r2 = f2.rank();
              if (o_empty) {
                next.phase = static_cast<uint16_t>((cur.phase + 2) % (r2 + 1));
                next.o = StateSet(ba.num_states);
                succ.for_each([&](uint32_t q) {
                  if (f2[q] == next.phase) next.o.set(q);
                });
              } else {
                next.phase = cur.phase;
                next.o = StateSet(ba.num_states);
                o_succ.for_each([&](uint32_t q) {
                  if (f2[q] == cur.phase) next.o.set(q);
                });
              }
              uint32_t dst = intern(std::move(next));
              edges[id].emplace_back(a, dst);
            });
      }
    }
  }

  // Assemble the output automaton.
  uint32_t n_out = static_cast<uint32_t>(states.size());
  Ba out(n_out, ba.symbols);
  out.initial.set(0);
  for (uint32_t i = 0; i < n_out; ++i) {
    const Macrostate& m = states[i];
    if (m.tight) {
      ++stats.tight;
      stats.max_rank = std::max<uint32_t>(stats.max_rank, m.f.rank());
      if (m.o.empty()) out.acc_states.set(i);
    } else {
      ++stats.waiting;
      if (m.s.empty()) out.acc_states.set(i);
    }
    for (auto [a, dst] : edges[i]) out.add_edge(i, a, dst);
    stats.transitions += edges[i].size();
  }
  stats.total = stats.waiting + stats.tight;

  ComplementResult res{std::move(out), stats, std::move(states)};
  if (post_trim) {
    res.automaton = trim(res.automaton);
    res.macrostates.clear();  // indices no longer line up after trimming
  }
  return res;
}

ComplementStats complement_stats(const Ba& ba, const Trub& trub) {
  return complement(ba, trub).stats;
}

}  // namespace rankc
