#include "rankc/pipeline.hpp"

#include <algorithm>

namespace rankc {

Ba preprocess(const Ba& ba, bool deelevate_first) {
  Ba pre = normalize_acceptance(trim(ba));
  if (deelevate_first) pre = normalize_acceptance(trim(deelevate(pre)));
  return pre;
}

PipelineResult run_pipeline(const Ba& ba, const PipelineConfig& cfg) {
  PipelineResult res;
  res.preprocessed = preprocess(ba, cfg.deelevate_first);
  const Ba& pre = res.preprocessed;

  Trub trub = trivial_trub(pre);
  std::vector<uint32_t> chi;
  if (cfg.source != TrubSource::Trivial) {
    RankAssignment ra = assign_ranks(pre, cfg.source == TrubSource::General);
    chi = ra.chi;
    res.chi_max = ra.chi_max;
    trub = trub_meet(std::move(trub), chi_to_trub(chi, pre));
  }

  // scalar bound per macrostate for the outer stage (and the inner lift)
  auto scalar_of = [&](const StateSet& s) {
    uint32_t m = trivial_scalar(s, pre);
    if (!chi.empty()) {
      uint32_t cm = 0;
      s.for_each([&](uint32_t q) { cm = std::max(cm, chi[q]); });
      m = std::min(m, cm);
    }
    return m;
  };

  Skeleton skel;
  if (cfg.outer || cfg.inner) skel = build_skeleton(pre);

  std::vector<uint32_t> scalar;
  if (cfg.outer || cfg.inner) {
    scalar.resize(skel.nodes.size());
    for (uint32_t i = 0; i < skel.nodes.size(); ++i)
      scalar[i] = scalar_of(skel.nodes[i]);
  }
  if (cfg.outer) {
    scalar = outer_analysis(skel, std::move(scalar)).value;
    trub = trub_meet(std::move(trub), outer_to_trub(skel, scalar, pre));
  }
  std::vector<Ranking> inner_val;
  if (cfg.inner) {
    std::vector<Ranking> mu0(skel.nodes.size());
    for (uint32_t i = 0; i < skel.nodes.size(); ++i)
      mu0[i] = lift_scalar(scalar[i], skel.nodes[i], pre);
    inner_val = inner_analysis(skel, std::move(mu0), pre).value;
    trub = trub_meet(std::move(trub), inner_to_trub(skel, inner_val, pre));
  }

  res.comp = complement(pre, trub, cfg.post_trim);
  return res;
}

std::vector<PipelineConfig> standard_pipelines(const Ba& ba) {
  bool elevator = is_elevator(preprocess(ba, false));
  TrubSource chi_source =
      elevator ? TrubSource::Elevator : TrubSource::General;
  std::vector<PipelineConfig> out;
  out.push_back({TrubSource::Trivial, false, false, false, false});
  out.push_back({chi_source, false, false, false, false});
  out.push_back({chi_source, true, false, false, false});
  out.push_back({chi_source, true, true, false, false});
  // Deelevation pays off only when it keeps the rank bound at 3, i.e. on
  // elevator inputs; elsewhere it doubles the state count for nothing.
  if (elevator) {
    TrubSource de_source = is_elevator(preprocess(ba, true))
                               ? TrubSource::Elevator
                               : TrubSource::General;
    out.push_back({de_source, false, false, true, false});
  } else {
    out.push_back({chi_source, false, false, false, false});
  }
  out.push_back({TrubSource::Trivial, true, true, false, false});
  return out;
}

}  // namespace rankc
