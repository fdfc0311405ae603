#pragma once

#include <stdexcept>
#include <string>

#include "rankc/ba.hpp"

namespace rankc {

struct HoaParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an HOA v1 document with Buchi acceptance ("1 Inf(0)").  Label
// formulas are expanded over all 2^|AP| valuations; the resulting alphabet
// has one symbol per valuation, named by its conjunction of literals.
// Throws HoaParseError with line/column on malformed input.
Ba parse_hoa(const std::string& text);

// Emits HOA v1 with ceil(log2 |alphabet|) atomic propositions encoding the
// symbol index in binary.  Round-trips exactly when |alphabet| is a power of
// two (otherwise reparsing pads the alphabet up to one).
std::string serialize_hoa(const Ba& ba);

}  // namespace rankc
