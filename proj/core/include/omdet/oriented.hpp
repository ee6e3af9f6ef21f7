#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omdet/element_set.hpp"
#include "omdet/errors.hpp"
#include "omdet/graph.hpp"
#include "omdet/matroid.hpp"

namespace omdet {

// Signed subset: disjoint positive/negative parts, nonempty union.
struct SignedSet {
  ElementSet pos, neg;

  SignedSet() = default;
  SignedSet(ElementSet p, ElementSet n) : pos(std::move(p)), neg(std::move(n)) {}

  ElementSet support() const { return pos | neg; }
  SignedSet negated() const { return {neg, pos}; }
  // Representative of the +/- pair: smallest element of the support positive.
  SignedSet canonical() const {
    return neg.contains(support().min_element()) ? negated() : *this;
  }
  SignedSet reoriented(const ElementSet& a) const {
    return {pos.minus(a) | (neg & a), neg.minus(a) | (pos & a)};
  }
  int sign_of(int e) const { return pos.contains(e) ? 1 : neg.contains(e) ? -1 : 0; }

  friend bool operator==(const SignedSet& x, const SignedSet& y) {
    return x.pos == y.pos && x.neg == y.neg;
  }
  friend bool operator<(const SignedSet& x, const SignedSet& y) {
    if (!(x.pos == y.pos)) return x.pos < y.pos;
    return x.neg < y.neg;
  }
  std::string str() const;
};

// An orientation of a fixed matroid: a canonical signed representative per
// circuit, aligned with base().circuits(). Built by validate_signed, the
// enumeration, or reorient; the signed elimination invariant holds.
class OrientedMatroid {
 public:
  const Matroid& base() const { return *base_; }
  const std::vector<SignedSet>& signing() const { return signing_; }
  const SignedSet& signed_circuit(size_t i) const { return signing_[i]; }

  // Signed representative of a given circuit support; NotACircuit otherwise.
  SignedSet orient_circuit(const ElementSet& support) const;

  friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
    return *a.base_ == *b.base_ && a.signing_ == b.signing_;
  }
  friend bool operator<(const OrientedMatroid& a, const OrientedMatroid& b) {
    return a.signing_ < b.signing_;
  }
  uint64_t hash() const;

  static OrientedMatroid unchecked(std::shared_ptr<const Matroid> m,
                                   std::vector<SignedSet> s) {
    return OrientedMatroid(std::move(m), std::move(s));
  }
  std::shared_ptr<const Matroid> base_ptr() const { return base_; }

 private:
  OrientedMatroid(std::shared_ptr<const Matroid> m, std::vector<SignedSet> s)
      : base_(std::move(m)), signing_(std::move(s)) {}

  std::shared_ptr<const Matroid> base_;
  std::vector<SignedSet> signing_;
};

// Verifies one signed set per circuit (supports matching) and exhaustive
// signed elimination over the +/- closure.
OrientedMatroid validate_signed(const Matroid& m, std::vector<SignedSet> signing);

// Does the +/- closure of `signing` satisfy signed-circuit elimination?
// Reports a witness triple via `detail` on failure when non-null.
bool signed_elimination_holds(const Matroid& m,
                              const std::vector<SignedSet>& signing,
                              std::string* detail = nullptr);

OrientedMatroid reorient(const OrientedMatroid& om, const ElementSet& a);

// Complete duplicate-free list of orientations in canonical order; empty iff
// non-orientable. Backtracking over per-circuit signings with incremental
// elimination pruning; when the matroid is binary and one orientation exists,
// the remaining ones are exactly its 2^(n-1) reorientations. An optional
// pre-validated seed (e.g. a graph orientation) short-circuits the first
// search.
std::vector<OrientedMatroid> enumerate_orientations(
    const Matroid& m, const Budget& budget = {},
    const std::optional<OrientedMatroid>& seed = std::nullopt);

// Orbit of om under all sign reversals, deduplicated, canonical order.
std::vector<OrientedMatroid> reorientation_class(const OrientedMatroid& om);
int count_reorientation_classes(const Matroid& m, const Budget& budget = {});

// True iff some e outside B has fundamental_circuit(m, B, e) == support.
// (Equivalently: exactly one element of the circuit lies outside B.)
bool covers_basis(const ElementSet& circuit_support, const ElementSet& basis,
                  const Matroid& m);
bool covers_basis(const SignedSet& circuit, const ElementSet& basis,
                  const Matroid& m);

// Orientations of graphic/cographic matroids read off the reference edge
// direction (low endpoint -> high endpoint); returned pre-validated, suitable
// as enumeration seeds.
OrientedMatroid orient_graphic(const Graph& g);
OrientedMatroid orient_cographic(const Graph& g);

}  // namespace omdet
