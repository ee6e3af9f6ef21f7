#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace omdet {

// Subset of a ground set {0,...,n-1}, n <= 128, stored as two machine words.
// The instances this library targets stay well inside that (the largest
// ground set in the test corpus is E(Q5) with 80 edges).
class ElementSet {
 public:
  static constexpr int kMaxElements = 128;

  ElementSet() = default;
  explicit ElementSet(int n) : n_(n) { assert(n >= 0 && n <= kMaxElements); }

  static ElementSet of(int n, std::initializer_list<int> elems) {
    ElementSet s(n);
    for (int e : elems) s.add(e);
    return s;
  }
  static ElementSet of(int n, const std::vector<int>& elems) {
    ElementSet s(n);
    for (int e : elems) s.add(e);
    return s;
  }
  static ElementSet full(int n) {
    ElementSet s(n);
    if (n >= 64) {
      s.lo_ = ~0ull;
      s.hi_ = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
    } else {
      s.lo_ = (n == 0) ? 0 : ((1ull << n) - 1);
    }
    return s;
  }
  static ElementSet single(int n, int e) {
    ElementSet s(n);
    s.add(e);
    return s;
  }

  int ground_size() const { return n_; }

  bool contains(int e) const {
    assert(e >= 0 && e < n_);
    return e < 64 ? (lo_ >> e) & 1 : (hi_ >> (e - 64)) & 1;
  }
  void add(int e) {
    assert(e >= 0 && e < n_);
    if (e < 64) lo_ |= 1ull << e; else hi_ |= 1ull << (e - 64);
  }
  void remove(int e) {
    assert(e >= 0 && e < n_);
    if (e < 64) lo_ &= ~(1ull << e); else hi_ &= ~(1ull << (e - 64));
  }

  int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  bool empty() const { return lo_ == 0 && hi_ == 0; }

  bool subset_of(const ElementSet& o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }
  bool proper_subset_of(const ElementSet& o) const {
    return subset_of(o) && !(*this == o);
  }
  bool intersects(const ElementSet& o) const {
    return (lo_ & o.lo_) != 0 || (hi_ & o.hi_) != 0;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    assert(a.n_ == b.n_);
    a.lo_ |= b.lo_; a.hi_ |= b.hi_;
    return a;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    assert(a.n_ == b.n_);
    a.lo_ &= b.lo_; a.hi_ &= b.hi_;
    return a;
  }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) {
    assert(a.n_ == b.n_);
    a.lo_ ^= b.lo_; a.hi_ ^= b.hi_;
    return a;
  }
  ElementSet operator~() const {
    ElementSet f = full(n_);
    f.lo_ &= ~lo_; f.hi_ &= ~hi_;
    return f;
  }
  ElementSet minus(const ElementSet& o) const {
    assert(n_ == o.n_);
    ElementSet r = *this;
    r.lo_ &= ~o.lo_; r.hi_ &= ~o.hi_;
    return r;
  }
  ElementSet minus(int e) const {
    ElementSet r = *this;
    r.remove(e);
    return r;
  }
  ElementSet plus(int e) const {
    ElementSet r = *this;
    r.add(e);
    return r;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return !(a == b);
  }
  // Raw word order; fast and total, used for maps and dedup.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
    return a.lo_ < b.lo_;
  }

  int min_element() const {
    assert(!empty());
    return lo_ ? std::countr_zero(lo_) : 64 + std::countr_zero(hi_);
  }
  // First element >= from, or -1.
  int next_element(int from) const {
    if (from < 64) {
      uint64_t m = lo_ & (from == 0 ? ~0ull : ~((1ull << from) - 1));
      if (m) return std::countr_zero(m);
      from = 64;
    }
    if (from >= n_) return -1;
    uint64_t m = hi_ & (from == 64 ? ~0ull : ~((1ull << (from - 64)) - 1));
    if (m) return 64 + std::countr_zero(m);
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e = min_element_or(-1); e != -1; e = next_element(e + 1))
      out.push_back(e);
    return out;
  }

  uint64_t lo_word() const { return lo_; }
  uint64_t hi_word() const { return hi_; }
  uint64_t hash() const {
    uint64_t h = lo_ * 0x9e3779b97f4a7c15ull;
    h ^= hi_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e + 1);  // 1-based, matching the serialized form
      first = false;
    }
    return s + "}";
  }

 private:
  int min_element_or(int d) const { return empty() ? d : min_element(); }

  uint64_t lo_ = 0, hi_ = 0;
  int n_ = 0;
};

// Canonical order for circuit lists: by size, then lexicographically on the
// ascending element sequence.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  int ea = a.empty() ? -1 : a.min_element();
  int eb = b.empty() ? -1 : b.min_element();
  while (ea != -1 && eb != -1) {
    if (ea != eb) return ea < eb;
    ea = a.next_element(ea + 1);
    eb = b.next_element(eb + 1);
  }
  return false;
}

}  // namespace omdet
