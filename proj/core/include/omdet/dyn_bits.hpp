#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omdet {

// Fixed-universe bitset over word storage; used for basis-index sets, whose
// universe (number of bases) exceeds 128 on the larger corpus members.
struct DynBits {
  std::vector<uint64_t> w;

  DynBits() = default;
  explicit DynBits(size_t universe) : w((universe + 63) / 64, 0) {}

  void add(size_t i) { w[i / 64] |= 1ull << (i % 64); }
  bool contains(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void unite(const DynBits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  bool covers(const DynBits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (o.w[i] & ~w[i]) return false;
    return true;
  }
  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  friend bool operator==(const DynBits& a, const DynBits& b) { return a.w == b.w; }
};

}  // namespace omdet
