#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rankc {

// Dense set of states over a fixed universe [0, n).  All binary operations
// require both operands to share the same universe size.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(uint32_t universe)
      : nbits_(universe), w_((universe + 63) / 64, 0) {}

  static StateSet singleton(uint32_t universe, uint32_t q) {
    StateSet s(universe);
    s.set(q);
    return s;
  }

  uint32_t universe() const { return nbits_; }

  bool test(uint32_t i) const {
    assert(i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(uint32_t i) {
    assert(i < nbits_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(uint32_t i) {
    assert(i < nbits_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += static_cast<uint32_t>(__builtin_popcountll(w));
    return c;
  }

  StateSet& operator|=(const StateSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // set difference
  StateSet& operator-=(const StateSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  bool operator==(const StateSet& o) const = default;

  bool intersects(const StateSet& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const StateSet& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        uint32_t b = static_cast<uint32_t>(__builtin_ctzll(w));
        f(static_cast<uint32_t>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> elements() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](uint32_t q) { out.push_back(q); });
    return out;
  }

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  uint32_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

struct StateSetHash {
  size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace rankc
