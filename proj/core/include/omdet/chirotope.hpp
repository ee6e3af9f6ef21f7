#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "omdet/matroid.hpp"
#include "omdet/oriented.hpp"

namespace omdet {

// Basis orientation: one sign per basis, stored on canonically sorted basis
// tuples; ordered queries apply the permutation parity (alternating rule).
// Canonical form fixes the sign of the first stored basis to +1, which
// resolves the global +/- ambiguity.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int ground, int rank, std::vector<ElementSet> sorted_bases,
            std::vector<int8_t> signs);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<ElementSet>& sorted_bases() const { return bases_; }
  int8_t sign(const ElementSet& basis) const;          // 0 if not a basis
  int8_t sign_at(size_t idx) const { return signs_[idx]; }
  int sign_ordered(const std::vector<int>& tuple) const;  // with parity

  Chirotope canonicalized() const;  // first stored sign forced to +1
  Chirotope flipped(const ElementSet& basis) const;
  bool equal_up_to_global_sign(const Chirotope& o) const;

  // Packed canonical sign vector; usable as a set/map key.
  std::vector<uint64_t> packed_canonical() const;

 private:
  int n_ = 0, rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<int8_t> signs_;
  std::map<ElementSet, size_t> index_;
};

// Basis orientation of an oriented matroid: fixes +1 on the canonically
// smallest basis and propagates along base exchanges using fundamental-
// circuit signs; every exchange relation is re-verified after propagation
// and an inconsistent signing raises InconsistentPropagation.
Chirotope chirotope_of(const OrientedMatroid& om);

// All bases whose single sign flip yields the chirotope of another
// orientation of the same matroid (membership oracle over `all`).
std::vector<ElementSet> invertible_bases(const OrientedMatroid& om,
                                         const std::vector<OrientedMatroid>& all);
std::vector<ElementSet> invertible_bases(const OrientedMatroid& om,
                                         const Budget& budget = {});

// Signed circuits read off a uniform chirotope: on each (r+1)-subset
// {x_0<...<x_r} element x_i gets sign (-1)^i * chi(X - x_i).
std::vector<SignedSet> circuits_from_uniform_chirotope(const Chirotope& chi);

// Membership test for uniform chirotopes that avoids orientation
// enumeration: derive the signed circuits, check signed elimination, and
// confirm the basis-orientation round trip. Exact, and scales to the grid
// construction sizes where the enumeration oracle cannot.
bool is_uniform_chirotope(const Chirotope& chi);

// Chirotope of the dual orientation: chi*(B*) = shuffle_sign(B*) * chi(E-B*).
Chirotope dual_chirotope(const Chirotope& chi);

}  // namespace omdet
