#include "omdet/matroid.hpp"

#include <algorithm>
#include <functional>

namespace omdet {

bool Matroid::is_independent(const ElementSet& s) const {
  for (const auto& c : circuits_)
    if (c.subset_of(s)) return false;
  return true;
}

std::optional<ElementSet> Matroid::circuit_inside(const ElementSet& s) const {
  for (const auto& c : circuits_)
    if (c.subset_of(s)) return c;
  return std::nullopt;
}

Matroid validate_circuits(int n, std::vector<ElementSet> circuits) {
  if (n < 0 || n > ElementSet::kMaxElements)
    throw OmdetError(Err::BadParameters,
                     "ground size " + std::to_string(n) + " out of range");
  for (const auto& c : circuits) {
    if (c.ground_size() != n)
      throw OmdetError(Err::BadParameters, "circuit over wrong ground set");
    if (c.empty()) throw OmdetError(Err::EmptyCircuit, "empty circuit");
  }
  std::sort(circuits.begin(), circuits.end(), canonical_less);
  circuits.erase(std::unique(circuits.begin(), circuits.end()),
                 circuits.end());

  const size_t k = circuits.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && circuits[i].proper_subset_of(circuits[j]))
        throw OmdetError(Err::NotAntichain, circuits[i].str() + " contained in " +
                                                circuits[j].str());
  // Circuit elimination: C1 != C2, e in C1 & C2  =>  some circuit inside
  // (C1 | C2) - e.
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      ElementSet common = circuits[i] & circuits[j];
      if (common.empty()) continue;
      ElementSet uni = circuits[i] | circuits[j];
      for (int e = common.min_element(); e != -1;
           e = common.next_element(e + 1)) {
        ElementSet target = uni.minus(e);
        bool found = false;
        for (size_t t = 0; t < k && !found; ++t)
          if (circuits[t].subset_of(target)) found = true;
        if (!found)
          throw OmdetError(Err::EliminationFailure,
                           "C1=" + circuits[i].str() + " C2=" +
                               circuits[j].str() + " e=" + std::to_string(e + 1));
      }
    }
  }
  return Matroid(n, std::move(circuits));
}

namespace {

// Greedy maximal independent set gives the rank; all bases are then the
// independent r-subsets.
int compute_rank(const Matroid& m) {
  ElementSet s(m.ground_size());
  for (int e = 0; e < m.ground_size(); ++e) {
    s.add(e);
    if (!m.is_independent(s)) s.remove(e);
  }
  return s.size();
}

}  // namespace

std::vector<ElementSet> bases(const Matroid& m) {
  const int n = m.ground_size();
  const int r = compute_rank(m);
  std::vector<ElementSet> out;
  ElementSet cur(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      out.push_back(cur);
      return;
    }
    for (int e = start; e <= n - (r - depth); ++e) {
      cur.add(e);
      if (m.is_independent(cur)) rec(e + 1, depth + 1);
      cur.remove(e);
    }
  };
  rec(0, 0);
  return out;  // generated in canonical ascending order
}

int rank(const Matroid& m) { return compute_rank(m); }

ElementSet fundamental_circuit(const Matroid& m, const ElementSet& basis,
                               int e) {
  if (e < 0 || e >= m.ground_size())
    throw OmdetError(Err::BadParameters, "element out of range");
  if (basis.contains(e))
    throw OmdetError(Err::ElementInBasis, "e=" + std::to_string(e + 1));
  if (!m.is_independent(basis) || basis.size() != compute_rank(m))
    throw OmdetError(Err::NotABasis, basis.str());
  auto c = m.circuit_inside(basis.plus(e));
  if (!c)
    throw OmdetError(Err::NotABasis,
                     "no circuit in B+" + std::to_string(e + 1));
  return *c;
}

bool is_connected(const Matroid& m) {
  const int n = m.ground_size();
  if (n <= 1) return true;
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      bool found = false;
      for (const auto& c : m.circuits())
        if (c.contains(e) && c.contains(f)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

// Is d a disjoint union of circuits?  Backtracks over circuits inside d.
bool disjoint_union_of_circuits(const Matroid& m, const ElementSet& d) {
  if (d.empty()) return true;
  for (const auto& c : m.circuits()) {
    if (!c.subset_of(d)) continue;
    if (disjoint_union_of_circuits(m, d.minus(c))) return true;
  }
  return false;
}

}  // namespace

bool is_binary(const Matroid& m) {
  const auto& cs = m.circuits();
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (!disjoint_union_of_circuits(m, cs[i] ^ cs[j])) return false;
  return true;
}

std::vector<ElementSet> cocircuits(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 24)
    throw OmdetError(Err::TooLarge,
                     "cocircuit enumeration for n=" + std::to_string(n));
  auto bs = bases(m);
  // X is dependent in the dual iff it hits every basis; cocircuits are the
  // minimal such transversals.
  std::vector<ElementSet> dep;
  const uint64_t lim = 1ull << n;
  for (uint64_t mask = 1; mask < lim; ++mask) {
    ElementSet x(n);
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1) x.add(e);
    bool hits_all = true;
    for (const auto& b : bs)
      if (!x.intersects(b)) {
        hits_all = false;
        break;
      }
    if (hits_all) dep.push_back(x);
  }
  std::vector<ElementSet> minimal;
  for (const auto& x : dep) {
    bool is_min = true;
    for (const auto& y : dep)
      if (y.proper_subset_of(x)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  return minimal;
}

Matroid dual_matroid(const Matroid& m) {
  return validate_circuits(m.ground_size(), cocircuits(m));
}

int circumference(const Matroid& m) {
  int best = 0;
  for (const auto& c : m.circuits()) best = std::max(best, c.size());
  return best;
}

int cogirth(const Matroid& m) {
  int best = m.ground_size() + 1;
  for (const auto& c : cocircuits(m)) best = std::min(best, c.size());
  return best;
}

int cogirth_at(const Matroid& m, int e) {
  if (e < 0 || e >= m.ground_size())
    throw OmdetError(Err::BadParameters, "element out of range");
  int best = m.ground_size() + 1;
  for (const auto& c : cocircuits(m))
    if (c.contains(e)) best = std::min(best, c.size());
  return best;
}

Matroid uniform(int r, int n) {
  if (r < 1 || n < r || n > ElementSet::kMaxElements)
    throw OmdetError(Err::BadParameters,
                     "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")");
  std::vector<ElementSet> circuits;
  if (r < n) {
    // all (r+1)-subsets
    std::vector<int> idx(r + 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == r + 1) {
        ElementSet c(n);
        for (int i : idx) c.add(i);
        circuits.push_back(c);
        return;
      }
      for (int e = start; e <= n - (r + 1 - depth); ++e) {
        idx[depth] = e;
        rec(e + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return validate_circuits(n, circuits);
}

Matroid fano() {
  // Points 1..7; lines of PG(2,2) plus their (circuit) complements.
  std::vector<std::vector<int>> lines = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7},
                                         {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                                         {3, 5, 6}};
  std::vector<ElementSet> circuits;
  for (const auto& l : lines) {
    ElementSet c(7);
    for (int p : l) c.add(p - 1);
    circuits.push_back(c);
    circuits.push_back(~c);
  }
  return validate_circuits(7, circuits);
}

std::vector<ElementSet> circuits_through(const Matroid& m, int e) {
  std::vector<ElementSet> out;
  for (const auto& c : m.circuits())
    if (c.contains(e)) out.push_back(c);
  return out;
}

}  // namespace omdet
