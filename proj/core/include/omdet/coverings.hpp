#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "omdet/graph.hpp"
#include "omdet/matroid.hpp"
#include "omdet/universe.hpp"

namespace omdet {

// ---------------------------------------------------------------------------
// Element coverings over an explicit set family (matroid circuits, graph
// cycles or graph bonds all feed the same exact search).

Graph intersection_graph(const std::vector<ElementSet>& sets);
bool is_connected_element_cover(const Matroid& m,
                                const std::vector<ElementSet>& sets);

// Exact minimum (connected) cover of the full ground set by family members;
// by-size subset search with suffix-union pruning. Returns the minimum and a
// lexicographically-first witness.
int min_cover_family(int ground, const std::vector<ElementSet>& family,
                     bool connected, const Budget& budget,
                     std::vector<ElementSet>* witness = nullptr);

int c_param(const Matroid& m, const Budget& b = {},
            std::vector<ElementSet>* witness = nullptr);
int cc_param(const Matroid& m, const Budget& b = {},
             std::vector<ElementSet>* witness = nullptr);

// Graph-level flavors (cycle covers of M(G), bond covers of M*(G)).
int c_graph(const Graph& g, const Budget& b = {},
            std::vector<ElementSet>* witness = nullptr);
int cc_graph(const Graph& g, const Budget& b = {},
             std::vector<ElementSet>* witness = nullptr);
int bc_graph(const Graph& g, const Budget& b = {},
             std::vector<ElementSet>* witness = nullptr);
int cbc_graph(const Graph& g, const Budget& b = {},
              std::vector<ElementSet>* witness = nullptr);

// ---------------------------------------------------------------------------
// Base coverings.

Graph base_graph(const Matroid& m, const std::vector<ElementSet>& sets);
bool is_connected_base_cover(const Matroid& m,
                             const std::vector<ElementSet>& sets);
// Smallest connected base covering (exact).
int CC_param(OrientationUniverse& u, const Budget& b = {},
             std::vector<ElementSet>* witness = nullptr);

// Weak coverings: circuits covering all invertible bases.
struct WeakCoverValues {
  int wc = -1;        // one fixed circuit set working in every orientation
  int wc_tilde = -1;  // max over orientations of the per-orientation minimum
  std::vector<ElementSet> wc_witness;
};
WeakCoverValues weak_cover_params(OrientationUniverse& u, const Budget& b = {});

// ---------------------------------------------------------------------------
// Structural parameters.

int delta_param(const Matroid& m);             // max_e |S_e|
int min_cover_multiplicity(const Matroid& m);  // min_e |S_e|

// Vertex connectivity of the circuit intersection graph. `cut` is the least
// number of vertices whose removal disconnects the rest (INT_MAX when no
// removal can, e.g. complete graphs); `convention` reports |V|-1 in that
// complete case, the usual convention.
struct KappaResult {
  int cut = INT_MAX;
  int convention = 0;
};
KappaResult kappa_ic(const Matroid& m);

// Largest k such that removing any k-1 circuits keeps the base graph of the
// remaining family connected on its covered bases. Computed as the smallest
// disconnecting removal; `exact` is false when the scan was truncated by the
// budget, in which case `value` is a verified lower bound.
struct LambdaResult {
  int value = 0;
  bool exact = false;
};
LambdaResult lambda_param(OrientationUniverse& u, const Budget& b = {});

// Smallest subset of the circuits through e covering the ground set.
int theta_param(const Matroid& m, int e, const Budget& b = {});

// ---------------------------------------------------------------------------
// Covering designs.

int covering_number(int n, int k, int r, const Budget& b = {},
                    std::vector<ElementSet>* witness = nullptr);
int connected_covering_number(int n, int k, int r, const Budget& b = {},
                              std::vector<ElementSet>* witness = nullptr);

// ---------------------------------------------------------------------------
// Parity tools.

bool is_eulerian(const Matroid& m);  // all cocircuits even
// Cocircuits of size <= 3 cover the ground set and have a connected
// intersection graph (the c == cc sufficient condition for binary matroids).
bool check_thm3_preconditions(const Matroid& m);

}  // namespace omdet
