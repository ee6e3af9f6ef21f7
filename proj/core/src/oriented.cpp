#include "omdet/oriented.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace omdet {

std::string SignedSet::str() const {
  std::string s = "(";
  bool first = true;
  for (int e : support().elements()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(e + 1);
    if (neg.contains(e)) s += "-";
  }
  return s + ")";
}

SignedSet OrientedMatroid::orient_circuit(const ElementSet& support) const {
  const auto& cs = base_->circuits();
  for (size_t i = 0; i < cs.size(); ++i)
    if (cs[i] == support) return signing_[i];
  throw OmdetError(Err::NotACircuit, support.str());
}

uint64_t OrientedMatroid::hash() const {
  uint64_t h = 0x243f6a8885a308d3ull;
  for (const auto& s : signing_) {
    h ^= s.pos.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= s.neg.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Z eliminates e between A and B if supp(Z) avoids e, Z+ within (A+ | B+)-e,
// Z- within (A- | B-)-e.
bool eliminates(const SignedSet& z, const ElementSet& pos_room,
                const ElementSet& neg_room) {
  return z.pos.subset_of(pos_room) && z.neg.subset_of(neg_room);
}

// Checks elimination for the ordered pair (A,B) against the closure of
// `signing`. Supports of candidates are looked up in `m`.
bool pair_eliminates(const Matroid& m, const std::vector<SignedSet>& signing,
                     const SignedSet& a, const SignedSet& b,
                     std::string* detail) {
  ElementSet conflict = a.pos & b.neg;
  if (conflict.empty()) return true;
  ElementSet uni = a.support() | b.support();
  for (int e = conflict.min_element(); e != -1; e = conflict.next_element(e + 1)) {
    ElementSet pos_room = (a.pos | b.pos).minus(e);
    ElementSet neg_room = (a.neg | b.neg).minus(e);
    bool ok = false;
    const auto& cs = m.circuits();
    for (size_t t = 0; t < cs.size() && !ok; ++t) {
      if (!cs[t].subset_of(uni) || cs[t].contains(e)) continue;
      if (eliminates(signing[t], pos_room, neg_room) ||
          eliminates(signing[t].negated(), pos_room, neg_room))
        ok = true;
    }
    if (!ok) {
      if (detail)
        *detail = "X=" + a.str() + " Y=" + b.str() + " e=" + std::to_string(e + 1);
      return false;
    }
  }
  return true;
}

}  // namespace

bool signed_elimination_holds(const Matroid& m,
                              const std::vector<SignedSet>& signing,
                              std::string* detail) {
  const size_t k = signing.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      const SignedSet& x = signing[i];
      const SignedSet& y = signing[j];
      // All sign combinations of the pair; (-X,-Y) mirrors (X,Y) with the
      // roles of + and - swapped, so four ordered combos cover the closure.
      for (const auto& a : {x, x.negated()})
        for (const auto& b : {y, y.negated()}) {
          if (!pair_eliminates(m, signing, a, b, detail)) return false;
          if (!pair_eliminates(m, signing, b, a, detail)) return false;
        }
    }
  }
  return true;
}

OrientedMatroid validate_signed(const Matroid& m,
                                std::vector<SignedSet> signing) {
  const auto& cs = m.circuits();
  if (signing.size() != cs.size())
    throw OmdetError(Err::UnderlyingMismatch,
                     "expected " + std::to_string(cs.size()) + " signed circuits");
  for (size_t i = 0; i < signing.size(); ++i) {
    if (signing[i].pos.intersects(signing[i].neg))
      throw OmdetError(Err::BadParameters, "pos and neg overlap");
    if (!(signing[i].support() == cs[i]))
      throw OmdetError(Err::UnderlyingMismatch,
                       "signed set " + signing[i].str() + " does not match circuit " +
                           cs[i].str());
    signing[i] = signing[i].canonical();
  }
  std::string detail;
  if (!signed_elimination_holds(m, signing, &detail))
    throw OmdetError(Err::SignedEliminationFailure, detail);
  return OrientedMatroid::unchecked(std::make_shared<Matroid>(m),
                                    std::move(signing));
}

OrientedMatroid reorient(const OrientedMatroid& om, const ElementSet& a) {
  std::vector<SignedSet> s;
  s.reserve(om.signing().size());
  for (const auto& x : om.signing()) s.push_back(x.reoriented(a).canonical());
  return OrientedMatroid::unchecked(om.base_ptr(), std::move(s));
}

namespace {

// Backtracking enumerator over per-circuit representative signings with
// pair checks scheduled as soon as every candidate eliminator is assigned.
class OrientationSearch {
 public:
  OrientationSearch(const Matroid& m, const Budget& budget)
      : m_(m), budget_(budget), k_(m.circuits().size()) {
    const auto& cs = m_.circuits();
    // circuit order: as stored (size ascending, lexicographic)
    free_elems_.resize(k_);
    for (size_t i = 0; i < k_; ++i) {
      auto elems = cs[i].elements();
      free_elems_[i].assign(elems.begin() + 1, elems.end());
    }
    // pair schedule
    schedule_.resize(k_);
    for (size_t i = 0; i < k_; ++i) {
      for (size_t j = i + 1; j < k_; ++j) {
        if ((cs[i] & cs[j]).empty()) continue;
        ElementSet uni = cs[i] | cs[j];
        size_t last = j;
        for (size_t t = 0; t < k_; ++t)
          if (cs[t].subset_of(uni)) last = std::max(last, t);
        schedule_[last].push_back({i, j});
      }
    }
    signing_.resize(k_);
  }

  // Enumerate all valid signings; stop early once `limit` found.
  std::vector<std::vector<SignedSet>> run(uint64_t limit) {
    results_.clear();
    limit_ = limit;
    nodes_ = 0;
    rec(0);
    return std::move(results_);
  }

 private:
  bool rec(size_t depth) {  // returns true when the limit is reached
    if (depth == k_) {
      results_.push_back(signing_);
      return results_.size() >= limit_;
    }
    const ElementSet& c = m_.circuits()[depth];
    const auto& rest = free_elems_[depth];
    const uint64_t patterns = 1ull << rest.size();
    for (uint64_t p = 0; p < patterns; ++p) {
      budget_.charge(nodes_, 1, "orientation enumeration");
      ElementSet pos(c.ground_size()), neg(c.ground_size());
      pos.add(c.min_element());
      for (size_t b = 0; b < rest.size(); ++b)
        ((p >> b) & 1) ? neg.add(rest[b]) : pos.add(rest[b]);
      signing_[depth] = SignedSet(pos, neg);
      if (consistent(depth) && rec(depth + 1)) return true;
    }
    return false;
  }

  bool consistent(size_t depth) {
    for (auto [i, j] : schedule_[depth]) {
      const SignedSet& x = signing_[i];
      const SignedSet& y = signing_[j];
      for (const auto& a : {x, x.negated()})
        for (const auto& b : {y, y.negated()}) {
          if (!partial_pair_ok(a, b, depth)) return false;
          if (!partial_pair_ok(b, a, depth)) return false;
        }
    }
    return true;
  }

  // Like pair_eliminates but only consults circuits with index <= depth
  // (the schedule guarantees all candidates are assigned by then).
  bool partial_pair_ok(const SignedSet& a, const SignedSet& b, size_t depth) {
    ElementSet conflict = a.pos & b.neg;
    if (conflict.empty()) return true;
    ElementSet uni = a.support() | b.support();
    const auto& cs = m_.circuits();
    for (int e = conflict.min_element(); e != -1;
         e = conflict.next_element(e + 1)) {
      ElementSet pos_room = (a.pos | b.pos).minus(e);
      ElementSet neg_room = (a.neg | b.neg).minus(e);
      bool ok = false;
      for (size_t t = 0; t <= depth && !ok; ++t) {
        if (!cs[t].subset_of(uni) || cs[t].contains(e)) continue;
        if (eliminates(signing_[t], pos_room, neg_room) ||
            eliminates(signing_[t].negated(), pos_room, neg_room))
          ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  const Matroid& m_;
  const Budget& budget_;
  size_t k_;
  std::vector<std::vector<int>> free_elems_;
  std::vector<std::vector<std::pair<size_t, size_t>>> schedule_;
  std::vector<SignedSet> signing_;
  std::vector<std::vector<SignedSet>> results_;
  uint64_t limit_ = 0;
  uint64_t nodes_ = 0;
};

}  // namespace

std::vector<OrientedMatroid> enumerate_orientations(
    const Matroid& m, const Budget& budget,
    const std::optional<OrientedMatroid>& seed) {
  if (!is_connected(m))
    throw OmdetError(Err::NotConnected, "orientation enumeration");
  auto shared = std::make_shared<Matroid>(m);
  if (m.circuits().empty())
    return {OrientedMatroid::unchecked(shared, {})};

  const int n = m.ground_size();
  std::vector<OrientedMatroid> out;

  if (is_binary(m)) {
    // One orientation, if any, generates all of them by reorientation.
    std::optional<OrientedMatroid> first;
    if (seed) {
      if (!(seed->base() == m))
        throw OmdetError(Err::UnderlyingMismatch, "seed matroid mismatch");
      first = *seed;
    } else {
      OrientationSearch search(m, budget);
      auto found = search.run(1);
      if (!found.empty())
        first = OrientedMatroid::unchecked(shared, std::move(found[0]));
    }
    if (!first) return {};
    if (budget.max_orientations && n >= 1 &&
        (1ull << (n - 1)) > budget.max_orientations)
      throw OmdetError(Err::BudgetExceeded, "2^(n-1) reorientations");
    out = reorientation_class(*first);
    return out;
  }

  OrientationSearch search(m, budget);
  uint64_t limit =
      budget.max_orientations ? budget.max_orientations : UINT64_MAX;
  auto found = search.run(limit);
  if (found.size() >= limit)
    throw OmdetError(Err::BudgetExceeded, "orientation count");
  out.reserve(found.size());
  for (auto& s : found)
    out.push_back(OrientedMatroid::unchecked(shared, std::move(s)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrientedMatroid> reorientation_class(const OrientedMatroid& om) {
  const int n = om.base().ground_size();
  std::set<OrientedMatroid> orbit;
  // A and E-A induce the same orientation, so fixing element 0 outside A
  // already covers the orbit.
  const uint64_t lim = n >= 1 ? (1ull << (n - 1)) : 1;
  for (uint64_t mask = 0; mask < lim; ++mask) {
    ElementSet a(n);
    for (int e = 1; e < n; ++e)
      if ((mask >> (e - 1)) & 1) a.add(e);
    orbit.insert(reorient(om, a));
  }
  return {orbit.begin(), orbit.end()};
}

int count_reorientation_classes(const Matroid& m, const Budget& budget) {
  auto all = enumerate_orientations(m, budget);
  std::set<OrientedMatroid> seen;
  int classes = 0;
  for (const auto& om : all) {
    if (seen.count(om)) continue;
    ++classes;
    for (const auto& o : reorientation_class(om)) seen.insert(o);
  }
  return classes;
}

bool covers_basis(const ElementSet& circuit_support, const ElementSet& basis,
                  const Matroid& m) {
  if (!m.is_independent(basis) || basis.size() != rank(m))
    throw OmdetError(Err::NotABasis, basis.str());
  return circuit_support.minus(basis).size() == 1;
}

bool covers_basis(const SignedSet& circuit, const ElementSet& basis,
                  const Matroid& m) {
  return covers_basis(circuit.support(), basis, m);
}

namespace {

// Vertex sequence of a cycle given by its edge set.
std::vector<int> walk_cycle(const Graph& g, const ElementSet& cyc) {
  int first_edge = cyc.min_element();
  auto [start, second] = g.edge(first_edge);
  std::vector<int> seq = {start, second};
  int prev_edge = first_edge;
  while (seq.back() != start) {
    int u = seq.back();
    for (auto [w, ei] : g.incident(u)) {
      if (ei != prev_edge && cyc.contains(ei)) {
        seq.push_back(w);
        prev_edge = ei;
        break;
      }
    }
  }
  seq.pop_back();
  return seq;
}

}  // namespace

OrientedMatroid orient_graphic(const Graph& g) {
  Matroid m = graphic_matroid(g);
  std::vector<SignedSet> signing;
  for (const auto& c : m.circuits()) {
    auto seq = walk_cycle(g, c);
    ElementSet pos(m.ground_size()), neg(m.ground_size());
    for (size_t i = 0; i < seq.size(); ++i) {
      int u = seq[i], w = seq[(i + 1) % seq.size()];
      int ei = g.edge_index(u, w);
      // reference direction: low endpoint -> high endpoint
      (u < w ? pos : neg).add(ei);
    }
    signing.push_back(SignedSet(pos, neg).canonical());
  }
  return validate_signed(m, std::move(signing));
}

OrientedMatroid orient_cographic(const Graph& g) {
  Matroid m = cographic_matroid(g);
  std::vector<SignedSet> signing;
  for (const auto& bond : m.circuits()) {
    // recover the two sides
    std::vector<char> side(g.vertex_count(), 0);
    {
      std::vector<char> seen(g.vertex_count(), 0);
      std::vector<int> stack = {g.edge(bond.min_element()).first};
      seen[stack[0]] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        side[u] = 1;
        for (auto [w, ei] : g.incident(u))
          if (!bond.contains(ei) && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    ElementSet pos(m.ground_size()), neg(m.ground_size());
    for (int ei = bond.min_element(); ei != -1; ei = bond.next_element(ei + 1)) {
      auto [a, b] = g.edge(ei);
      // reference direction a->b leaves side A: positive
      (side[a] ? pos : neg).add(ei);
    }
    signing.push_back(SignedSet(pos, neg).canonical());
  }
  return validate_signed(m, std::move(signing));
}

}  // namespace omdet
