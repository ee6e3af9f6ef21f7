#include "omdet/universe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace omdet {

OrientationUniverse::OrientationUniverse(
    const Matroid& m, const Budget& budget,
    const std::optional<OrientedMatroid>& seed)
    : budget_(budget) {
  oms_ = enumerate_orientations(m, budget, seed);
  m_ = oms_.empty() ? std::make_shared<const Matroid>(m) : oms_[0].base_ptr();
  if (!oms_.empty()) {
    auto orbit = reorientation_class(oms_[0]);
    single_class_ = (orbit.size() == oms_.size()) &&
                    std::equal(orbit.begin(), orbit.end(), oms_.begin());
  }
  build_basis_structures();
  build_signing_ids();
  invertible_.resize(oms_.size());
}

void OrientationUniverse::build_basis_structures() {
  bases_ = bases(*m_);
  std::map<ElementSet, int> index;
  for (size_t i = 0; i < bases_.size(); ++i)
    index[bases_[i]] = static_cast<int>(i);
  const auto& cs = m_->circuits();
  covers_.assign(cs.size(), DynBits(bases_.size()));
  exchange_.assign(cs.size(), {});
  for (size_t bi = 0; bi < bases_.size(); ++bi) {
    const ElementSet& b = bases_[bi];
    for (size_t ci = 0; ci < cs.size(); ++ci) {
      ElementSet outside = cs[ci].minus(b);
      if (outside.size() != 1) continue;
      covers_[ci].add(bi);
      int e = outside.min_element();
      ElementSet inside = cs[ci].minus(e);
      for (int f = inside.min_element(); f != -1;
           f = inside.next_element(f + 1)) {
        ElementSet b2 = b.minus(f).plus(e);
        auto it = index.find(b2);
        if (it != index.end() && it->second > static_cast<int>(bi))
          exchange_[ci].push_back({static_cast<int>(bi), it->second});
      }
    }
  }
}

void OrientationUniverse::build_signing_ids() {
  const auto& cs = m_->circuits();
  for (const auto& c : cs)
    if (c.size() > 16)
      throw OmdetError(Err::TooLarge, "circuit too large for signing ids");
  signing_ids_.assign(oms_.size() * cs.size(), 0);
  for (size_t i = 0; i < oms_.size(); ++i) {
    for (size_t c = 0; c < cs.size(); ++c) {
      const SignedSet& s = oms_[i].signed_circuit(c);
      uint16_t id = 0;
      int bit = 0;
      for (int e = cs[c].min_element(), first = 1; e != -1;
           e = cs[c].next_element(e + 1)) {
        if (first) { first = 0; continue; }  // min element always positive
        if (s.neg.contains(e)) id |= static_cast<uint16_t>(1u << bit);
        ++bit;
      }
      signing_ids_[i * cs.size() + c] = id;
    }
  }
}

const DynBits& OrientationUniverse::invertible(size_t i) {
  if (!invertible_[i]) {
    std::map<ElementSet, int> index;
    for (size_t b = 0; b < bases_.size(); ++b)
      index[bases_[b]] = static_cast<int>(b);
    auto inv = invertible_bases(oms_[i], oms_);
    DynBits bits(bases_.size());
    for (const auto& b : inv) bits.add(index.at(b));
    invertible_[i] = std::move(bits);
  }
  return *invertible_[i];
}

const DynBits& OrientationUniverse::invertible_union() {
  if (!invertible_union_) {
    DynBits u(bases_.size());
    if (single_class_) {
      // invertibility is preserved by reorientation; one orientation suffices
      u = invertible(0);
    } else {
      for (size_t i = 0; i < oms_.size(); ++i) u.unite(invertible(i));
    }
    invertible_union_ = std::move(u);
  }
  return *invertible_union_;
}

size_t OrientationUniverse::count_extensions(
    const std::vector<SignedSet>& signed_circuits) const {
  std::vector<std::pair<int, SignedSet>> wanted;
  for (const auto& s : signed_circuits) {
    int ci = circuit_index(s.support());
    if (ci < 0) throw OmdetError(Err::NotACircuit, s.support().str());
    wanted.push_back({ci, s.canonical()});
  }
  size_t cnt = 0;
  for (const auto& om : oms_) {
    bool ok = true;
    for (const auto& [ci, s] : wanted)
      if (!(om.signed_circuit(ci) == s)) {
        ok = false;
        break;
      }
    cnt += ok;
  }
  return cnt;
}

bool OrientationUniverse::determines_orientation(
    size_t i, const std::vector<int>& circ_idx) const {
  const size_t k = circuit_count();
  for (size_t j = 0; j < oms_.size(); ++j) {
    if (j == i) continue;
    bool same = true;
    for (int c : circ_idx)
      if (signing_ids_[i * k + c] != signing_ids_[j * k + c]) {
        same = false;
        break;
      }
    if (same) return false;
  }
  return true;
}

bool OrientationUniverse::restriction_injective(
    const std::vector<int>& circ_idx) const {
  const size_t k = circuit_count();
  std::set<std::vector<uint16_t>> seen;
  std::vector<uint16_t> fp(circ_idx.size());
  for (size_t i = 0; i < oms_.size(); ++i) {
    for (size_t t = 0; t < circ_idx.size(); ++t)
      fp[t] = signing_ids_[i * k + circ_idx[t]];
    if (!seen.insert(fp).second) return false;
  }
  return true;
}

bool OrientationUniverse::covers_ground(const std::vector<int>& circ_idx) const {
  ElementSet u(m_->ground_size());
  for (int c : circ_idx) u = u | m_->circuits()[c];
  return u == ElementSet::full(m_->ground_size());
}

bool OrientationUniverse::intersection_connected(
    const std::vector<int>& circ_idx) const {
  if (circ_idx.empty()) return false;
  const auto& cs = m_->circuits();
  std::vector<int> parent(circ_idx.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < circ_idx.size(); ++i)
    for (size_t j = i + 1; j < circ_idx.size(); ++j)
      if (cs[circ_idx[i]].intersects(cs[circ_idx[j]]))
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  int root = find(0);
  for (size_t i = 1; i < circ_idx.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

bool OrientationUniverse::determines_all(const std::vector<int>& circ_idx,
                                         bool force_scan) const {
  if (single_class_ && !force_scan)
    return covers_ground(circ_idx) && intersection_connected(circ_idx);
  return restriction_injective(circ_idx);
}

int OrientationUniverse::circuit_index(const ElementSet& support) const {
  const auto& cs = m_->circuits();
  for (size_t i = 0; i < cs.size(); ++i)
    if (cs[i] == support) return static_cast<int>(i);
  return -1;
}

}  // namespace omdet
