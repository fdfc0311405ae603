#include "rankc/trub.hpp"

namespace rankc {

uint32_t trivial_scalar(const StateSet& s, const Ba& ba) {
  return monus(2 * (s - ba.acc_states).count(), 1);
}

Ranking lift_scalar(uint32_t m, const StateSet& s, const Ba& ba) {
  Ranking out(ba.num_states);
  uint8_t plain = static_cast<uint8_t>(std::min<uint32_t>(m, 255));
  uint8_t acc = static_cast<uint8_t>(std::min<uint32_t>(monus(m, 1), 255));
  s.for_each([&](uint32_t q) {
    out[q] = ba.acc_states.test(q) ? acc : plain;
  });
  return out;
}

Trub trivial_trub(const Ba& ba) {
  return Trub{[&ba](const StateSet& s) {
    return lift_scalar(trivial_scalar(s, ba), s, ba);
  }};
}

Trub trub_meet(Trub a, Trub b) {
  return Trub{[a = std::move(a), b = std::move(b)](const StateSet& s) {
    return ranking_meet(a.cap(s), b.cap(s));
  }};
}

}  // namespace rankc
