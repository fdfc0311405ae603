#include "rankc/propagation.hpp"

#include <algorithm>
#include <deque>

namespace rankc {

Skeleton build_skeleton(const Ba& ba) {
  Skeleton skel;
  skel.num_symbols = ba.num_symbols();
  std::deque<uint32_t> work;
  auto intern = [&](const StateSet& s) {
    auto it = skel.index.find(s);
    if (it != skel.index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(skel.nodes.size());
    skel.nodes.push_back(s);
    skel.index.emplace(s, id);
    skel.succ.resize(skel.succ.size() + skel.num_symbols, 0);
    work.push_back(id);
    return id;
  };
  skel.initial = intern(ba.initial);
  while (!work.empty()) {
    uint32_t id = work.front();
    work.pop_front();
    for (uint32_t a = 0; a < skel.num_symbols; ++a) {
      StateSet s = skel.nodes[id];  // copy: intern may grow nodes
      uint32_t t = intern(ba.succ_set(s, a));
      skel.succ[id * skel.num_symbols + a] = t;
    }
  }
  skel.preds.resize(skel.nodes.size());
  for (uint32_t id = 0; id < skel.nodes.size(); ++id)
    for (uint32_t a = 0; a < skel.num_symbols; ++a)
      skel.preds[skel.successor(id, a)].emplace_back(id, a);
  return skel;
}

uint32_t outer_update(const std::vector<uint32_t>& mu, uint32_t s,
                      const Skeleton& skel) {
  if (skel.preds[s].empty()) return mu[s];
  uint32_t m = 0;
  for (auto [r, a] : skel.preds[s]) m = std::max(m, mu[r]);
  return std::min(mu[s], m);
}

Ranking inner_update(const std::vector<Ranking>& mu, uint32_t s,
                     const Skeleton& skel, const Ba& ba) {
  Ranking theta = mu[s];
  if (!skel.preds[s].empty()) {
    Ranking join(ba.num_states, 0);
    for (auto [r, a] : skel.preds[s])
      join = ranking_join(
          join, max_successor_ranking(skel.nodes[r], a, mu[r], ba));
    theta = ranking_meet(theta, join);
  }
  while (theta.rank() % 2 == 0 && !theta.is_zero()) theta = dec(theta, ba);
  return theta;
}

namespace {

template <typename Value, typename Update>
uint64_t run_worklist(const Skeleton& skel, std::vector<Value>& mu,
                      WorklistOrder order, Update update) {
  std::deque<uint32_t> work;
  std::vector<bool> queued(skel.nodes.size(), true);
  for (uint32_t id = 0; id < skel.nodes.size(); ++id) work.push_back(id);
  uint64_t pops = 0;
  while (!work.empty()) {
    uint32_t s;
    if (order == WorklistOrder::Fifo) {
      s = work.front();
      work.pop_front();
    } else {
      s = work.back();
      work.pop_back();
    }
    queued[s] = false;
    ++pops;
    Value next = update(mu, s);
    if (next == mu[s]) continue;
    mu[s] = std::move(next);
    for (uint32_t a = 0; a < skel.num_symbols; ++a) {
      uint32_t t = skel.successor(s, a);
      if (!queued[t]) {
        queued[t] = true;
        work.push_back(t);
      }
    }
  }
  return pops;
}

}  // namespace

OuterResult outer_analysis(const Skeleton& skel, std::vector<uint32_t> mu0,
                           WorklistOrder order) {
  OuterResult out{std::move(mu0), 0};
  out.pops = run_worklist(skel, out.value, order,
                          [&](const std::vector<uint32_t>& mu, uint32_t s) {
                            return outer_update(mu, s, skel);
                          });
  return out;
}

InnerResult inner_analysis(const Skeleton& skel, std::vector<Ranking> mu0,
                           const Ba& ba, WorklistOrder order) {
  InnerResult out{std::move(mu0), 0};
  out.pops = run_worklist(skel, out.value, order,
                          [&](const std::vector<Ranking>& mu, uint32_t s) {
                            return inner_update(mu, s, skel, ba);
                          });
  return out;
}

Trub outer_to_trub(const Skeleton& skel, std::vector<uint32_t> value,
                   const Ba& ba) {
  return Trub{[&skel, value = std::move(value), &ba](const StateSet& s) {
    auto it = skel.index.find(s);
    uint32_t m = it == skel.index.end() ? trivial_scalar(s, ba)
                                        : value[it->second];
    return lift_scalar(m, s, ba);
  }};
}

Trub inner_to_trub(const Skeleton& skel, std::vector<Ranking> value,
                   const Ba& ba) {
  return Trub{[&skel, value = std::move(value), &ba](const StateSet& s) {
    auto it = skel.index.find(s);
    if (it == skel.index.end())
      return lift_scalar(trivial_scalar(s, ba), s, ba);
    return value[it->second];
  }};
}

}  // namespace rankc
