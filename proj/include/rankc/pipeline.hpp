#pragma once

#include "rankc/complement.hpp"
#include "rankc/elevator.hpp"
#include "rankc/propagation.hpp"
#include "rankc/trub.hpp"

namespace rankc {

enum class TrubSource { Trivial, Elevator, General };

struct PipelineConfig {
  TrubSource source = TrubSource::Trivial;
  bool outer = false;
  bool inner = false;  // consumes the ranking lift of the preceding stage
  bool deelevate_first = false;
  bool post_trim = false;
};

struct PipelineResult {
  Ba preprocessed;  // trimmed/normalized (and deelevated) input
  ComplementResult comp;
  uint32_t chi_max = 0;  // 0 when no chi stage ran
};

// Trims and normalizes the input (optionally deelevating in between).
Ba preprocess(const Ba& ba, bool deelevate_first);

// Complements preprocess(ba) under the configured TRUB; every TRUB is met
// with the trivial one.  TrubSource::Elevator throws std::invalid_argument
// on non-elevator input.
PipelineResult run_pipeline(const Ba& ba, const PipelineConfig& cfg);

// The six standard configurations exercised by the test suite, in order:
// trivial; chi (elevator when possible, else general); chi+outer;
// chi+outer+inner; deelevate+chi; trivial+outer+inner.
std::vector<PipelineConfig> standard_pipelines(const Ba& ba);

}  // namespace rankc
