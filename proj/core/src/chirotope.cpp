#include "omdet/chirotope.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace omdet {

Chirotope::Chirotope(int ground, int rank, std::vector<ElementSet> sorted_bases,
                     std::vector<int8_t> signs)
    : n_(ground), rank_(rank), bases_(std::move(sorted_bases)),
      signs_(std::move(signs)) {
  for (size_t i = 0; i < bases_.size(); ++i) index_[bases_[i]] = i;
}

int8_t Chirotope::sign(const ElementSet& basis) const {
  auto it = index_.find(basis);
  return it == index_.end() ? 0 : signs_[it->second];
}

int Chirotope::sign_ordered(const std::vector<int>& tuple) const {
  ElementSet b(n_);
  for (int e : tuple) {
    if (b.contains(e)) return 0;  // repeated element
    b.add(e);
  }
  int8_t s = sign(b);
  if (s == 0) return 0;
  // parity of the permutation sorting `tuple`
  int inv = 0;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) ++inv;
  return (inv % 2) ? -s : s;
}

Chirotope Chirotope::canonicalized() const {
  if (signs_.empty() || signs_[0] == 1) return *this;
  Chirotope c = *this;
  for (auto& s : c.signs_) s = -s;
  return c;
}

Chirotope Chirotope::flipped(const ElementSet& basis) const {
  auto it = index_.find(basis);
  if (it == index_.end())
    throw OmdetError(Err::NotABasis, basis.str());
  Chirotope c = *this;
  c.signs_[it->second] = -c.signs_[it->second];
  return c;
}

bool Chirotope::equal_up_to_global_sign(const Chirotope& o) const {
  if (n_ != o.n_ || rank_ != o.rank_ || bases_ != o.bases_) return false;
  return canonicalized().signs_ == o.canonicalized().signs_;
}

std::vector<uint64_t> Chirotope::packed_canonical() const {
  Chirotope c = canonicalized();
  std::vector<uint64_t> out((c.signs_.size() + 63) / 64, 0);
  for (size_t i = 0; i < c.signs_.size(); ++i)
    if (c.signs_[i] < 0) out[i / 64] |= 1ull << (i % 64);
  return out;
}

Chirotope chirotope_of(const OrientedMatroid& om) {
  const Matroid& m = om.base();
  auto bs = bases(m);
  if (bs.empty()) throw OmdetError(Err::BadParameters, "no bases");
  std::map<ElementSet, size_t> index;
  for (size_t i = 0; i < bs.size(); ++i) index[bs[i]] = i;

  // Exchange relations: for basis B, e outside B, f in C(B,e)-e:
  //   chi(B') = sigma(e,R) * sigma(f,R) * (-C_f * C_e) * chi(B),
  // with B' = B-f+e, R = B-f, sigma(x,R) = (-1)^|{r in R : r < x}|.
  struct Rel {
    size_t from, to;
    int8_t factor;
  };
  std::vector<Rel> rels;
  auto sigma = [](int x, const ElementSet& r) -> int {
    int cnt = 0;
    for (int e = r.empty() ? -1 : r.min_element(); e != -1 && e < x;
         e = r.next_element(e + 1))
      ++cnt;
    return (cnt % 2) ? -1 : 1;
  };
  for (size_t bi = 0; bi < bs.size(); ++bi) {
    const ElementSet& b = bs[bi];
    for (int e = 0; e < m.ground_size(); ++e) {
      if (b.contains(e)) continue;
      auto copt = m.circuit_inside(b.plus(e));
      if (!copt) continue;  // e is a coloop relative to B (cannot happen for bases)
      const ElementSet c = *copt;
      SignedSet sc = om.orient_circuit(c);
      int ce = sc.sign_of(e);
      for (int f = c.min_element(); f != -1; f = c.next_element(f + 1)) {
        if (f == e) continue;
        ElementSet r = b.minus(f);
        ElementSet b2 = r.plus(e);
        auto it = index.find(b2);
        if (it == index.end()) continue;
        int cf = sc.sign_of(f);
        int factor = -cf * ce * sigma(e, r) * sigma(f, r);
        rels.push_back({bi, it->second, static_cast<int8_t>(factor)});
      }
    }
  }

  std::vector<int8_t> sign(bs.size(), 0);
  sign[0] = 1;
  // BFS propagation over the exchange relations.
  std::vector<std::vector<std::pair<size_t, int8_t>>> adj(bs.size());
  for (const auto& r : rels) {
    adj[r.from].push_back({r.to, r.factor});
    adj[r.to].push_back({r.from, r.factor});  // relation is symmetric
  }
  std::queue<size_t> q;
  q.push(0);
  while (!q.empty()) {
    size_t u = q.front();
    q.pop();
    for (auto [w, f] : adj[u]) {
      int8_t expect = static_cast<int8_t>(sign[u] * f);
      if (sign[w] == 0) {
        sign[w] = expect;
        q.push(w);
      }
    }
  }
  for (size_t i = 0; i < bs.size(); ++i)
    if (sign[i] == 0)
      throw OmdetError(Err::InconsistentPropagation,
                       "base-exchange graph not connected at " + bs[i].str());
  // full cross-edge verification
  for (const auto& r : rels)
    if (sign[r.to] != sign[r.from] * r.factor)
      throw OmdetError(Err::InconsistentPropagation,
                       bs[r.from].str() + " vs " + bs[r.to].str());
  return Chirotope(m.ground_size(), rank(m), std::move(bs), std::move(sign));
}

std::vector<ElementSet> invertible_bases(const OrientedMatroid& om,
                                         const std::vector<OrientedMatroid>& all) {
  Chirotope chi = chirotope_of(om);
  std::set<std::vector<uint64_t>> known;
  for (const auto& o : all) known.insert(chirotope_of(o).packed_canonical());
  std::vector<ElementSet> out;
  for (const auto& b : chi.sorted_bases())
    if (known.count(chi.flipped(b).packed_canonical())) out.push_back(b);
  return out;
}

std::vector<ElementSet> invertible_bases(const OrientedMatroid& om,
                                         const Budget& budget) {
  return invertible_bases(om, enumerate_orientations(om.base(), budget));
}

std::vector<SignedSet> circuits_from_uniform_chirotope(const Chirotope& chi) {
  const int n = chi.ground_size();
  const int r = chi.rank();
  std::vector<SignedSet> out;
  std::vector<int> idx(r + 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r + 1) {
      ElementSet pos(n), neg(n);
      for (int i = 0; i <= r; ++i) {
        ElementSet b(n);
        for (int j = 0; j <= r; ++j)
          if (j != i) b.add(idx[j]);
        int s = chi.sign(b) * ((i % 2) ? -1 : 1);
        if (s > 0) pos.add(idx[i]);
        else if (s < 0) neg.add(idx[i]);
        else throw OmdetError(Err::DegenerateConfiguration,
                              "zero chirotope value on " + b.str());
      }
      out.push_back(SignedSet(pos, neg).canonical());
      return;
    }
    for (int e = start; e <= n - (r + 1 - depth); ++e) {
      idx[depth] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

bool is_uniform_chirotope(const Chirotope& chi) {
  const int n = chi.ground_size();
  const int r = chi.rank();
  if (static_cast<int>(chi.sorted_bases().size()) != [&] {
        long long b = 1;
        for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
        return b;
      }())
    return false;
  std::vector<SignedSet> circuits;
  try {
    circuits = circuits_from_uniform_chirotope(chi);
  } catch (const OmdetError&) {
    return false;
  }
  Matroid m = uniform(r, n);
  if (!signed_elimination_holds(m, circuits)) return false;
  // round trip: the basis orientation propagated from these circuits must
  // reproduce chi (up to global sign)
  OrientedMatroid om = OrientedMatroid::unchecked(
      std::make_shared<Matroid>(m), std::move(circuits));
  try {
    return chirotope_of(om).equal_up_to_global_sign(chi);
  } catch (const OmdetError&) {
    return false;
  }
}

Chirotope dual_chirotope(const Chirotope& chi) {
  const int n = chi.ground_size();
  const int r = chi.rank();
  const int rd = n - r;
  // bases of the dual = complements of bases
  std::vector<ElementSet> dbases;
  std::vector<int8_t> dsigns;
  std::vector<std::pair<ElementSet, int8_t>> items;
  for (const auto& b : chi.sorted_bases()) {
    ElementSet bd = ~b;
    // shuffle parity: inversions between bd (first block) and b (second)
    int inv = 0;
    for (int x = bd.empty() ? -1 : bd.min_element(); x != -1;
         x = bd.next_element(x + 1))
      for (int y = b.empty() ? -1 : b.min_element(); y != -1 && y < x;
           y = b.next_element(y + 1))
        ++inv;
    int8_t s = static_cast<int8_t>(((inv % 2) ? -1 : 1) * chi.sign(b));
    items.push_back({bd, s});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  for (auto& [b, s] : items) {
    dbases.push_back(b);
    dsigns.push_back(s);
  }
  return Chirotope(n, rd, std::move(dbases), std::move(dsigns));
}

}  // namespace omdet
