#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omdet/chirotope.hpp"
#include "omdet/dyn_bits.hpp"
#include "omdet/errors.hpp"
#include "omdet/matroid.hpp"
#include "omdet/oriented.hpp"

namespace omdet {

// Everything the determination and covering searches need about one matroid:
// the full orientation list, the verified single-reorientation-class flag,
// restriction fingerprints, bases with per-circuit coverage and exchange
// edges, and (lazily) per-orientation invertible bases.
//
// The single-class fast paths below are exact once the orbit facts are
// established: two orientations of a single-class matroid agree on a circuit
// subset S iff they differ by a reorientation that either contains or avoids
// every member of S, which collapses agreement to "S covers E and its
// intersection graph is connected". The honest fingerprint scan stays
// available and the two routes are cross-checked on every small instance in
// the test suite.
class OrientationUniverse {
 public:
  explicit OrientationUniverse(
      const Matroid& m, const Budget& budget = {},
      const std::optional<OrientedMatroid>& seed = std::nullopt);

  const Matroid& matroid() const { return *m_; }
  const Budget& budget() const { return budget_; }
  const std::vector<OrientedMatroid>& orientations() const { return oms_; }
  size_t count() const { return oms_.size(); }
  bool orientable() const { return !oms_.empty(); }
  bool single_class() const { return single_class_; }

  size_t circuit_count() const { return m_->circuits().size(); }
  // Canonical signing of circuit c in orientation i, as a small pattern id.
  uint16_t signing_id(size_t i, size_t c) const {
    return signing_ids_[i * circuit_count() + c];
  }

  // --- basis-side structures -------------------------------------------
  const std::vector<ElementSet>& all_bases() const { return bases_; }
  // indices of bases covered by circuit c
  const DynBits& covered_by(size_t c) const { return covers_[c]; }
  // base-exchange edges (basis-index pairs) witnessed by circuit c
  const std::vector<std::pair<int, int>>& exchange_edges(size_t c) const {
    return exchange_[c];
  }

  // --- orientation-side structures -------------------------------------
  // invertible bases of orientation i, as a basis-index set (cached)
  const DynBits& invertible(size_t i);
  // union over all orientations (single-class: equals invertible(0))
  const DynBits& invertible_union();

  // --- determination primitives -----------------------------------------
  // Number of orientations whose signing extends the given signed circuits.
  size_t count_extensions(const std::vector<SignedSet>& signed_circuits) const;
  // Does the restriction to `circ_idx` single out orientation i?
  bool determines_orientation(size_t i, const std::vector<int>& circ_idx) const;
  // Injectivity of the restriction map over all orientations.
  bool restriction_injective(const std::vector<int>& circ_idx) const;

  bool covers_ground(const std::vector<int>& circ_idx) const;
  bool intersection_connected(const std::vector<int>& circ_idx) const;

  // determines_all with the verified single-class fast path; `force_scan`
  // bypasses it (used for cross-checking).
  bool determines_all(const std::vector<int>& circ_idx,
                      bool force_scan = false) const;

  int circuit_index(const ElementSet& support) const;

 private:
  void build_basis_structures();
  void build_signing_ids();

  std::shared_ptr<const Matroid> m_;
  Budget budget_;
  std::vector<OrientedMatroid> oms_;
  bool single_class_ = false;
  std::vector<uint16_t> signing_ids_;

  std::vector<ElementSet> bases_;
  std::vector<DynBits> covers_;
  std::vector<std::vector<std::pair<int, int>>> exchange_;

  std::vector<std::optional<DynBits>> invertible_;
  std::optional<DynBits> invertible_union_;
};

}  // namespace omdet
