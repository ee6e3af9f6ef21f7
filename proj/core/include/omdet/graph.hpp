#pragma once

#include <utility>
#include <vector>

#include "omdet/element_set.hpp"
#include "omdet/errors.hpp"
#include "omdet/matroid.hpp"

namespace omdet {

// Simple undirected graph with stable edge indices; edge indices double as
// matroid elements, so the edge order of the generators is part of the
// external contract (see README serialization notes).
class Graph {
 public:
  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return v_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int i) const { return edges_[i]; }
  bool is_connected() const { return connected_; }

  // Index of edge {a,b}, or -1.
  int edge_index(int a, int b) const;
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return inc_[v];  // (neighbor, edge index)
  }

  ElementSet edge_set(std::initializer_list<int> idx) const {
    return ElementSet::of(edge_count(), idx);
  }
  ElementSet full_edge_set() const { return ElementSet::full(edge_count()); }

 private:
  int v_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  bool connected_ = false;
};

// Generators. Edge orders are canonical and documented:
//  complete(n): pairs (i,j), i<j, lexicographic; vertices identified with Z_n.
//  complete_bipartite(a,b): parts {0..a-1} and {a..a+b-1}, pairs lexicographic.
//  hypercube(n): vertices are n-bit strings; edges grouped by coordinate
//    direction i = 0..n-1 (block i is the coordinate-i perfect matching),
//    sorted by lower endpoint inside each block.
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int n);

// All simple cycles as edge sets, canonically sorted. Throws TooLarge when
// the count would exceed the cap.
std::vector<ElementSet> simple_cycles(const Graph& g, size_t cap = 2'000'000);

// All bonds (minimal edge cuts), via two-sided-connected vertex bipartitions.
std::vector<ElementSet> bonds(const Graph& g);

Matroid graphic_matroid(const Graph& g);
Matroid cographic_matroid(const Graph& g);

// Component count of the subgraph on a vertex subset (mask over vertices).
bool vertex_subset_connected(const Graph& g, const std::vector<char>& in);

// Exact predicates used by certificate verification and the parameter rows.
bool is_simple_cycle(const Graph& g, const ElementSet& edge_set);
bool is_bond(const Graph& g, const ElementSet& edge_set);
bool is_bipartite(const Graph& g);
// Every vertex degree even => every edge cut (hence every bond) is even.
bool all_degrees_even(const Graph& g);

// Hamiltonian helpers (deterministic backtracking).
std::vector<int> hamiltonian_cycle(const Graph& g);  // vertex order; empty if none
// Hamiltonian cycle through all edges of a given perfect matching; empty if
// none found. Used by the hypercube constructions.
ElementSet hamiltonian_cycle_through(const Graph& g, const ElementSet& forced,
                                     uint64_t node_cap = 50'000'000);
// Partition of E into Hamiltonian cycles, if one is found (size m/|V|).
std::vector<ElementSet> hamiltonian_decomposition(const Graph& g,
                                                  uint64_t node_cap = 200'000'000);

ElementSet cycle_vertices_to_edges(const Graph& g, const std::vector<int>& cyc);

}  // namespace omdet
