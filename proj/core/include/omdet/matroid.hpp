#pragma once

#include <optional>
#include <vector>

#include "omdet/element_set.hpp"
#include "omdet/errors.hpp"

namespace omdet {

// A matroid given by its ground-set size and the antichain of circuits.
// Instances are only ever built through validate_circuits, so a Matroid in
// hand always satisfies the circuit axioms and stores circuits in canonical
// (size, lexicographic) order.
class Matroid {
 public:
  int ground_size() const { return n_; }
  const std::vector<ElementSet>& circuits() const { return circuits_; }

  bool is_independent(const ElementSet& s) const;
  // Index into circuits() of the unique circuit contained in s, if s contains
  // exactly one; used by fundamental-circuit queries.
  std::optional<ElementSet> circuit_inside(const ElementSet& s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.circuits_ == b.circuits_;
  }

  friend Matroid validate_circuits(int n, std::vector<ElementSet> circuits);

 private:
  Matroid(int n, std::vector<ElementSet> circuits)
      : n_(n), circuits_(std::move(circuits)) {}

  int n_ = 0;
  std::vector<ElementSet> circuits_;
};

// Checks the circuit axioms (nonempty, antichain, elimination), canonicalizes
// and deduplicates. Throws OmdetError on violation.
Matroid validate_circuits(int n, std::vector<ElementSet> circuits);

// All bases (maximal independent sets); equal-size by the matroid property.
std::vector<ElementSet> bases(const Matroid& m);
int rank(const Matroid& m);

// The unique circuit contained in B + e, for a basis B and e outside B.
ElementSet fundamental_circuit(const Matroid& m, const ElementSet& basis,
                               int e);

// True iff every pair of elements lies on a common circuit.
bool is_connected(const Matroid& m);

// True iff the symmetric difference of any two distinct circuits is a
// disjoint union of circuits (exhaustive check).
bool is_binary(const Matroid& m);

// Circuits of the dual matroid (minimal transversals of the basis family).
std::vector<ElementSet> cocircuits(const Matroid& m);
Matroid dual_matroid(const Matroid& m);

int circumference(const Matroid& m);
int cogirth(const Matroid& m);
int cogirth_at(const Matroid& m, int e);

// U_{r,n}: circuits are all (r+1)-subsets (none when r == n).
Matroid uniform(int r, int n);

// The Fano plane F7 (smallest binary non-orientable example in the corpus).
Matroid fano();

// Circuits containing element e.
std::vector<ElementSet> circuits_through(const Matroid& m, int e);

}  // namespace omdet
