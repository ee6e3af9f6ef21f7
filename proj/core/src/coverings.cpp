#include "omdet/coverings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace omdet {

Graph intersection_graph(const std::vector<ElementSet>& sets) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].intersects(sets[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(std::max<size_t>(sets.size(), 1), std::move(edges));
}

bool is_connected_element_cover(const Matroid& m,
                                const std::vector<ElementSet>& sets) {
  if (sets.empty()) return false;
  ElementSet u(m.ground_size());
  for (const auto& s : sets) {
    if (!m.circuit_inside(s) || !(*m.circuit_inside(s) == s))
      throw OmdetError(Err::NotACircuit, s.str());
    u = u | s;
  }
  if (!(u == ElementSet::full(m.ground_size()))) return false;
  Graph ig = intersection_graph(sets);
  return ig.is_connected();
}

namespace {

struct CoverSearch {
  int ground;
  std::vector<ElementSet> family;  // sorted by size descending
  bool connected;
  const Budget& budget;
  ElementSet full;
  std::vector<ElementSet> suffix_union;
  int max_size = 0;
  uint64_t nodes = 0;

  CoverSearch(int g, std::vector<ElementSet> f, bool conn, const Budget& b)
      : ground(g), family(std::move(f)), connected(conn), budget(b),
        full(ElementSet::full(g)) {
    // big members first: the greedy-style coverage bound prunes best
    std::stable_sort(family.begin(), family.end(),
                     [](const ElementSet& a, const ElementSet& b) {
                       return a.size() > b.size();
                     });
    suffix_union.assign(family.size() + 1, ElementSet(g));
    for (int i = static_cast<int>(family.size()) - 1; i >= 0; --i) {
      suffix_union[i] = suffix_union[i + 1] | family[i];
      max_size = std::max(max_size, family[i].size());
    }
  }

  bool connected_subset(const std::vector<int>& chosen) const {
    if (chosen.empty()) return false;
    std::vector<int> parent(chosen.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j)
        if (family[chosen[i]].intersects(family[chosen[j]]))
          parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    for (size_t i = 1; i < chosen.size(); ++i)
      if (find(static_cast<int>(i)) != find(0)) return false;
    return true;
  }

  bool dfs(size_t start, int remaining, ElementSet covered,
           std::vector<int>& chosen) {
    budget.charge(nodes, 1, "cover search");
    if (remaining == 0) {
      if (!(covered == full)) return false;
      return !connected || connected_subset(chosen);
    }
    ElementSet todo = full.minus(covered);
    if (todo.size() > remaining * max_size) return false;
    for (size_t i = start; i + remaining <= family.size(); ++i) {
      if (!full.minus(covered | suffix_union[i]).empty()) return false;
      // skip members that add nothing unless connectivity may need them
      if (!connected && family[i].minus(covered).empty()) continue;
      chosen.push_back(static_cast<int>(i));
      if (dfs(i + 1, remaining - 1, covered | family[i], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  // smallest k admitting a cover, with witness
  int run(int lower_bound, std::vector<ElementSet>* witness) {
    if (suffix_union.empty() || !(suffix_union[0] == full))
      throw OmdetError(Err::BadParameters, "family does not cover the ground set");
    for (int k = std::max(lower_bound, 1);
         k <= static_cast<int>(family.size()); ++k) {
      std::vector<int> chosen;
      if (dfs(0, k, ElementSet(ground), chosen)) {
        if (witness) {
          witness->clear();
          for (int i : chosen) witness->push_back(family[i]);
          std::sort(witness->begin(), witness->end(), canonical_less);
        }
        return k;
      }
    }
    throw OmdetError(Err::BadParameters, "no cover exists");
  }
};

}  // namespace

int min_cover_family(int ground, const std::vector<ElementSet>& family,
                     bool connected, const Budget& budget,
                     std::vector<ElementSet>* witness) {
  CoverSearch search(ground, family, connected, budget);
  int lb = 1;
  const int circ = search.max_size;
  if (circ > 0) {
    if (!connected) {
      lb = (ground + circ - 1) / circ;
    } else if (circ >= 2) {
      // s intersecting circuits cover at most circ + (s-1)(circ-1) elements
      lb = std::max(1, 1 + (ground - circ + circ - 2) / (circ - 1));
    } else {
      lb = ground;  // single-element circuits cannot chain
    }
    lb = std::max(lb, 1);
  }
  return search.run(lb, witness);
}

int c_param(const Matroid& m, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(m.ground_size(), m.circuits(), false, b, w);
}
int cc_param(const Matroid& m, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(m.ground_size(), m.circuits(), true, b, w);
}
int c_graph(const Graph& g, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(g.edge_count(), simple_cycles(g), false, b, w);
}
int cc_graph(const Graph& g, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(g.edge_count(), simple_cycles(g), true, b, w);
}
int bc_graph(const Graph& g, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(g.edge_count(), bonds(g), false, b, w);
}
int cbc_graph(const Graph& g, const Budget& b, std::vector<ElementSet>* w) {
  return min_cover_family(g.edge_count(), bonds(g), true, b, w);
}

// ---------------------------------------------------------------------------

Graph base_graph(const Matroid& m, const std::vector<ElementSet>& sets) {
  auto bs = bases(m);
  std::map<ElementSet, int> index;
  for (size_t i = 0; i < bs.size(); ++i) index[bs[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : sets) {
    for (size_t bi = 0; bi < bs.size(); ++bi) {
      ElementSet outside = c.minus(bs[bi]);
      if (outside.size() != 1) continue;
      int e = outside.min_element();
      for (int f = c.min_element(); f != -1; f = c.next_element(f + 1)) {
        if (f == e) continue;
        auto it = index.find(bs[bi].minus(f).plus(e));
        if (it != index.end() && it->second > static_cast<int>(bi))
          edges.push_back({static_cast<int>(bi), it->second});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(static_cast<int>(bs.size()), std::move(edges));
}

bool is_connected_base_cover(const Matroid& m,
                             const std::vector<ElementSet>& sets) {
  auto bs = bases(m);
  for (const auto& b : bs) {
    bool covered = false;
    for (const auto& c : sets)
      if (c.minus(b).size() == 1) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return base_graph(m, sets).is_connected();
}

namespace {

// by-size search over circuits for base-coverage problems (CC, weak covers,
// lambda share the universe's covered-bitset/exchange-edge tables)
struct BaseCoverSearch {
  OrientationUniverse& u;
  const Budget& budget;
  DynBits target;          // bases that must be covered
  bool need_connected;     // B_S connected over all bases
  uint64_t nodes = 0;
  std::vector<DynBits> suffix;

  BaseCoverSearch(OrientationUniverse& uni, DynBits tgt, bool conn,
                  const Budget& b)
      : u(uni), budget(b), target(std::move(tgt)), need_connected(conn) {
    const size_t k = u.circuit_count();
    suffix.assign(k + 1, DynBits(u.all_bases().size()));
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      suffix[i] = suffix[i + 1];
      suffix[i].unite(u.covered_by(i));
    }
  }

  bool leaf_ok(const std::vector<int>& chosen) {
    if (!need_connected) return true;
    const size_t nb = u.all_bases().size();
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c : chosen)
      for (auto [a, b] : u.exchange_edges(c)) parent[find(a)] = find(b);
    int root = find(0);
    for (size_t i = 1; i < nb; ++i)
      if (find(static_cast<int>(i)) != root) return false;
    return true;
  }

  bool dfs(size_t start, int remaining, DynBits covered,
           std::vector<int>& chosen) {
    budget.charge(nodes, 1, "base cover search");
    if (remaining == 0)
      return covered.covers(target) && leaf_ok(chosen);
    DynBits reach = covered;
    if (start < suffix.size()) reach.unite(suffix[start]);
    if (!reach.covers(target)) return false;
    for (size_t i = start; i + remaining <= u.circuit_count(); ++i) {
      chosen.push_back(static_cast<int>(i));
      DynBits next = covered;
      next.unite(u.covered_by(i));
      if (dfs(i + 1, remaining - 1, std::move(next), chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  int run(std::vector<ElementSet>* witness) {
    for (int k = 1; k <= static_cast<int>(u.circuit_count()); ++k) {
      std::vector<int> chosen;
      if (dfs(0, k, DynBits(u.all_bases().size()), chosen)) {
        if (witness) {
          witness->clear();
          for (int i : chosen)
            witness->push_back(u.matroid().circuits()[i]);
        }
        return k;
      }
    }
    throw OmdetError(Err::BadParameters, "no base cover exists");
  }
};

}  // namespace

int CC_param(OrientationUniverse& u, const Budget& b,
             std::vector<ElementSet>* witness) {
  DynBits all(u.all_bases().size());
  for (size_t i = 0; i < u.all_bases().size(); ++i) all.add(i);
  BaseCoverSearch search(u, std::move(all), true, b);
  return search.run(witness);
}

WeakCoverValues weak_cover_params(OrientationUniverse& u, const Budget& b) {
  if (!u.orientable())
    throw OmdetError(Err::NotOrientable, "weak coverings");
  WeakCoverValues out;
  {
    BaseCoverSearch search(u, u.invertible_union(), false, b);
    out.wc = search.run(&out.wc_witness);
  }
  if (u.single_class()) {
    out.wc_tilde = out.wc;
  } else {
    int worst = 0;
    for (size_t i = 0; i < u.count(); ++i) {
      BaseCoverSearch search(u, u.invertible(i), false, b);
      worst = std::max(worst, search.run(nullptr));
    }
    out.wc_tilde = worst;
  }
  return out;
}

// ---------------------------------------------------------------------------

int delta_param(const Matroid& m) {
  int best = 0;
  for (int e = 0; e < m.ground_size(); ++e)
    best = std::max(best, static_cast<int>(circuits_through(m, e).size()));
  return best;
}

int min_cover_multiplicity(const Matroid& m) {
  int best = INT_MAX;
  for (int e = 0; e < m.ground_size(); ++e)
    best = std::min(best, static_cast<int>(circuits_through(m, e).size()));
  return best;
}

namespace {

// Unit-capacity max flow on the vertex-split graph; enough for the small
// intersection graphs here.
int vertex_disjoint_paths(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  // node 2v = in, 2v+1 = out
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? 2 * n : 1;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [a, b] = g.edge(i);
    cap[2 * a + 1][2 * b] = 2 * n;
    cap[2 * b + 1][2 * a] = 2 * n;
  }
  int flow = 0;
  while (true) {
    std::vector<int> prev(2 * n, -1);
    std::vector<int> stack = {2 * s + 1};
    prev[2 * s + 1] = 2 * s + 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < 2 * n; ++y)
        if (cap[x][y] > 0 && prev[y] == -1) {
          prev[y] = x;
          stack.push_back(y);
        }
    }
    if (prev[2 * t] == -1) break;
    int x = 2 * t;
    while (x != 2 * s + 1) {
      int p = prev[x];
      cap[p][x] -= 1;
      cap[x][p] += 1;
      x = p;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

KappaResult kappa_ic(const Matroid& m) {
  Graph ig = intersection_graph(m.circuits());
  const int n = ig.vertex_count();
  KappaResult res;
  res.convention = n - 1;
  bool complete = true;
  for (int s = 0; s < n && complete; ++s)
    for (int t = s + 1; t < n; ++t)
      if (ig.edge_index(s, t) == -1) {
        complete = false;
        break;
      }
  if (complete) return res;  // cut = INT_MAX, convention = n-1
  int best = INT_MAX;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (ig.edge_index(s, t) == -1)
        best = std::min(best, vertex_disjoint_paths(ig, s, t));
  res.cut = best;
  res.convention = best;
  return res;
}

LambdaResult lambda_param(OrientationUniverse& u, const Budget& b) {
  const int k = static_cast<int>(u.circuit_count());
  const size_t nb = u.all_bases().size();
  // connectivity of the covered part of the base graph of the remaining
  // circuit family, after removing each candidate subset
  auto connected_after_removal = [&](const std::vector<char>& removed) {
    DynBits covered(nb);
    for (int c = 0; c < k; ++c)
      if (!removed[c]) covered.unite(u.covered_by(c));
    if (covered.empty()) return true;
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < k; ++c)
      if (!removed[c])
        for (auto [x, y] : u.exchange_edges(c)) parent[find(x)] = find(y);
    int root = -1;
    for (size_t i = 0; i < nb; ++i) {
      if (!covered.contains(i)) continue;
      int r = find(static_cast<int>(i));
      if (root == -1) root = r;
      else if (r != root) return false;
    }
    return true;
  };

  uint64_t nodes = 0;
  std::vector<char> removed(k, 0);
  // scan removal sizes ascending; stop when the per-level cost explodes
  for (int sz = 0; sz <= k - 1; ++sz) {
    // feasibility estimate: C(k, sz)
    long double levels = 1;
    for (int i = 0; i < sz; ++i) levels = levels * (k - i) / (i + 1);
    if (levels > 3e6)
      return {sz, false};  // verified: every smaller removal keeps it connected
    bool found = false;
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (found) return;
      if (depth == sz) {
        b.charge(nodes, 1, "lambda scan");
        if (!connected_after_removal(removed)) found = true;
        return;
      }
      for (int i = start; i <= k - (sz - depth); ++i) {
        removed[i] = 1;
        rec(i + 1, depth + 1);
        removed[i] = 0;
        if (found) return;
      }
    };
    rec(0, 0);
    if (found) return {sz, true};
  }
  // no proper removal disconnects; the complete-graph-style convention
  return {k - 1, true};
}

int theta_param(const Matroid& m, int e, const Budget& b) {
  auto family = circuits_through(m, e);
  return min_cover_family(m.ground_size(), family, false, b, nullptr);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(ElementSet::of(n, idx));
      return;
    }
    for (int e = start; e <= n - (k - depth); ++e) {
      idx[depth] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

int design_search(int n, int k, int r, bool connected, const Budget& budget,
                  std::vector<ElementSet>* witness) {
  if (!(n >= k && k >= r && r >= 1))
    throw OmdetError(Err::BadParameters, "need n >= k >= r >= 1");
  auto blocks = k_subsets(n, k);
  auto targets = k_subsets(n, r);
  const size_t nt = targets.size();
  std::vector<DynBits> cover(blocks.size(), DynBits(nt));
  for (size_t bi = 0; bi < blocks.size(); ++bi)
    for (size_t t = 0; t < nt; ++t)
      if (targets[t].subset_of(blocks[bi])) cover[bi].add(t);
  std::vector<DynBits> suffix(blocks.size() + 1, DynBits(nt));
  for (int i = static_cast<int>(blocks.size()) - 1; i >= 0; --i) {
    suffix[i] = suffix[i + 1];
    suffix[i].unite(cover[i]);
  }
  DynBits full(nt);
  for (size_t t = 0; t < nt; ++t) full.add(t);

  auto blocks_connected = [&](const std::vector<int>& chosen) {
    if (chosen.empty()) return false;
    std::vector<int> parent(chosen.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j)
        if ((blocks[chosen[i]] & blocks[chosen[j]]).size() >= r)
          parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    for (size_t i = 1; i < chosen.size(); ++i)
      if (find(static_cast<int>(i)) != find(0)) return false;
    return true;
  };

  uint64_t nodes = 0;
  std::vector<int> chosen;
  std::function<bool(size_t, int, DynBits)> dfs = [&](size_t start, int rem,
                                                      DynBits covered) {
    budget.charge(nodes, 1, "design search");
    if (rem == 0) {
      if (!covered.covers(full)) return false;
      return !connected || blocks_connected(chosen);
    }
    DynBits reach = covered;
    if (start < suffix.size()) reach.unite(suffix[start]);
    if (!reach.covers(full)) return false;
    for (size_t i = start; i + rem <= blocks.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      DynBits next = covered;
      next.unite(cover[i]);
      if (dfs(i + 1, rem - 1, std::move(next))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int sz = 1; sz <= static_cast<int>(blocks.size()); ++sz) {
    chosen.clear();
    if (dfs(0, sz, DynBits(nt))) {
      if (witness) {
        witness->clear();
        for (int i : chosen) witness->push_back(blocks[i]);
      }
      return sz;
    }
  }
  throw OmdetError(Err::BadParameters, "no design covering exists");
}

}  // namespace

int covering_number(int n, int k, int r, const Budget& b,
                    std::vector<ElementSet>* witness) {
  return design_search(n, k, r, false, b, witness);
}

int connected_covering_number(int n, int k, int r, const Budget& b,
                              std::vector<ElementSet>* witness) {
  return design_search(n, k, r, true, b, witness);
}

// ---------------------------------------------------------------------------

bool is_eulerian(const Matroid& m) {
  for (const auto& c : cocircuits(m))
    if (c.size() % 2) return false;
  return true;
}

bool check_thm3_preconditions(const Matroid& m) {
  if (!is_binary(m)) return false;
  std::vector<ElementSet> small;
  for (const auto& c : cocircuits(m))
    if (c.size() <= 3) small.push_back(c);
  if (small.empty()) return false;
  ElementSet u(m.ground_size());
  for (const auto& c : small) u = u | c;
  if (!(u == ElementSet::full(m.ground_size()))) return false;
  return intersection_graph(small).is_connected();
}

}  // namespace omdet
