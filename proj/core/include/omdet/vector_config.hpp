#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "omdet/chirotope.hpp"
#include "omdet/errors.hpp"
#include "omdet/oriented.hpp"

namespace omdet {

// Exact rational scalar; numermaator/denominator in int64 with 128-bit
// intermediates. The configurations here stay tiny, overflow is checked.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return {-num, den}; }
  int sgn() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (a - b).sgn() < 0;
  }
  std::string str() const;
};

// n rational vectors of a fixed dimension (the rank of the realized OM).
struct VectorConfig {
  int dim = 0;
  std::vector<std::vector<Rat>> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
  Rat det(const std::vector<int>& cols) const;  // |cols| == dim
};

// Chirotope chi(B) = sign det(columns B) plus the oriented matroid whose
// signed circuits are the minimal-support sign vectors of the linear
// dependencies. Requires uniform position (all dim x dim minors nonzero);
// throws DegenerateConfiguration otherwise. The returned orientation is
// re-validated against signed elimination.
std::pair<Chirotope, OrientedMatroid> chirotope_from_vectors(
    const VectorConfig& config);

// 2D affine lines a.x = b lifted to vectors (a1, a2, -b); the oriented
// matroid of the lifted configuration is the one represented by the line
// arrangement (vertices of the arrangement = cocircuits).
struct AffineLine {
  Rat a1, a2, b;
};
VectorConfig lift_lines(const std::vector<AffineLine>& lines);

}  // namespace omdet
