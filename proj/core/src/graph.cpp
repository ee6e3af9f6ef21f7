#include "omdet/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace omdet {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edges)
    : v_(vertices), edges_(std::move(edges)) {
  if (v_ < 1) throw OmdetError(Err::BadParameters, "graph needs >= 1 vertex");
  inc_.resize(v_);
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto [a, b] = edges_[i];
    if (a == b) throw OmdetError(Err::BadParameters, "self-loop");
    if (a < 0 || b < 0 || a >= v_ || b >= v_)
      throw OmdetError(Err::BadParameters, "edge endpoint out of range");
    inc_[a].push_back({b, static_cast<int>(i)});
    inc_[b].push_back({a, static_cast<int>(i)});
  }
  // connectivity flag
  std::vector<char> seen(v_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, ei] : inc_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  connected_ = (cnt == v_);
}

int Graph::edge_index(int a, int b) const {
  for (auto [w, ei] : inc_[a])
    if (w == b) return ei;
  return -1;
}

Graph complete(int n) {
  if (n < 1) throw OmdetError(Err::BadParameters, "complete(n), n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw OmdetError(Err::BadParameters, "K_{a,b}, a,b >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, std::move(e));
}

Graph hypercube(int n) {
  if (n < 1 || n > 6) throw OmdetError(Err::BadParameters, "hypercube(n), 1 <= n <= 6");
  int nv = 1 << n;
  std::vector<std::pair<int, int>> e;
  for (int dir = 0; dir < n; ++dir)
    for (int v = 0; v < nv; ++v)
      if (!(v >> dir & 1)) e.push_back({v, v | (1 << dir)});
  return Graph(nv, std::move(e));
}

std::vector<ElementSet> simple_cycles(const Graph& g, size_t cap) {
  if (!g.is_connected())
    throw OmdetError(Err::BadParameters, "cycle enumeration needs a connected graph");
  const int m = g.edge_count();
  std::vector<ElementSet> out;
  // Each cycle is found once: rooted at its smallest vertex, second vertex
  // smaller than the last to kill the direction symmetry.
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<int> path;
  std::function<void(int, int)> dfs = [&](int root, int u) {
    for (auto [w, ei] : g.incident(u)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < u) {  // canonical direction
          ElementSet c(m);
          for (size_t i = 0; i + 1 < path.size(); ++i)
            c.add(g.edge_index(path[i], path[i + 1]));
          c.add(ei);
          out.push_back(c);
          if (out.size() > cap)
            throw OmdetError(Err::TooLarge, "cycle cap exceeded");
        }
      } else if (w > root && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        dfs(root, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (int root = 0; root < g.vertex_count(); ++root) {
    used[root] = 1;
    path = {root};
    dfs(root, root);
    used[root] = 0;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool vertex_subset_connected(const Graph& g, const std::vector<char>& in) {
  int start = -1, total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[v]) {
      if (start == -1) start = v;
      ++total;
    }
  if (total == 0) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, ei] : g.incident(u))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == total;
}

std::vector<ElementSet> bonds(const Graph& g) {
  if (!g.is_connected())
    throw OmdetError(Err::BadParameters, "bond enumeration needs a connected graph");
  const int nv = g.vertex_count();
  if (nv > 20) throw OmdetError(Err::TooLarge, "bond enumeration for v > 20");
  const int m = g.edge_count();
  std::vector<ElementSet> out;
  std::vector<char> side(nv, 0);
  // Fix vertex 0 on side A; S runs over subsets of the rest.
  const uint64_t lim = 1ull << (nv - 1);
  for (uint64_t mask = 0; mask + 1 < lim; ++mask) {
    side[0] = 1;
    for (int v = 1; v < nv; ++v) side[v] = (mask >> (v - 1)) & 1;
    std::vector<char> a(side.begin(), side.end()), b(nv);
    for (int v = 0; v < nv; ++v) b[v] = !side[v];
    if (!vertex_subset_connected(g, a) || !vertex_subset_connected(g, b))
      continue;
    ElementSet cut(m);
    for (int i = 0; i < m; ++i) {
      auto [x, y] = g.edge(i);
      if (side[x] != side[y]) cut.add(i);
    }
    out.push_back(cut);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matroid graphic_matroid(const Graph& g) {
  return validate_circuits(g.edge_count(), simple_cycles(g));
}

Matroid cographic_matroid(const Graph& g) {
  return validate_circuits(g.edge_count(), bonds(g));
}

bool is_simple_cycle(const Graph& g, const ElementSet& edge_set) {
  if (edge_set.size() < 3 && g.vertex_count() > 2) {
    // 2-cycles need parallel edges; simple graphs start at girth 3.
    if (edge_set.size() < 3) return false;
  }
  std::vector<int> deg(g.vertex_count(), 0);
  for (int i = edge_set.empty() ? -1 : edge_set.min_element(); i != -1;
       i = edge_set.next_element(i + 1)) {
    deg[g.edge(i).first]++;
    deg[g.edge(i).second]++;
  }
  int touched = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    if (deg[v] != 2) return false;
    ++touched;
  }
  if (touched == 0) return false;
  // connected: walk from one touched vertex along the cycle edges
  std::vector<char> in(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) in[v] = deg[v] > 0;
  // restrict BFS to cycle edges
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[v]) {
      start = v;
      break;
    }
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, ei] : g.incident(u))
      if (edge_set.contains(ei) && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == touched;
}

namespace {

int components_without(const Graph& g, const ElementSet& removed,
                       std::vector<int>* comp_out) {
  std::vector<int> comp(g.vertex_count(), -1);
  int nc = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = nc;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [w, ei] : g.incident(u))
        if (!removed.contains(ei) && comp[w] == -1) {
          comp[w] = nc;
          q.push(w);
        }
    }
    ++nc;
  }
  if (comp_out) *comp_out = comp;
  return nc;
}

}  // namespace

bool is_bond(const Graph& g, const ElementSet& edge_set) {
  if (edge_set.empty()) return false;
  std::vector<int> comp;
  if (components_without(g, edge_set, &comp) != 2) return false;
  // minimality: every removed edge must span the two components
  for (int i = edge_set.min_element(); i != -1; i = edge_set.next_element(i + 1)) {
    auto [a, b] = g.edge(i);
    if (comp[a] == comp[b]) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [w, ei] : g.incident(u)) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool all_degrees_even(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.incident(v).size() % 2) return false;
  return true;
}

std::vector<int> hamiltonian_cycle(const Graph& g) {
  const int nv = g.vertex_count();
  std::vector<int> path = {0};
  std::vector<char> used(nv, 0);
  used[0] = 1;
  std::function<bool()> dfs = [&]() -> bool {
    if (static_cast<int>(path.size()) == nv)
      return g.edge_index(path.back(), 0) != -1;
    int u = path.back();
    for (auto [w, ei] : g.incident(u)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!dfs()) return {};
  return path;
}

ElementSet cycle_vertices_to_edges(const Graph& g, const std::vector<int>& cyc) {
  ElementSet out(g.edge_count());
  for (size_t i = 0; i < cyc.size(); ++i) {
    int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    int ei = g.edge_index(a, b);
    if (ei == -1) throw OmdetError(Err::BadParameters, "not a closed walk");
    out.add(ei);
  }
  return out;
}

ElementSet hamiltonian_cycle_through(const Graph& g, const ElementSet& forced,
                                     uint64_t node_cap) {
  const int nv = g.vertex_count();
  uint64_t nodes = 0;
  // Cycle must use every forced edge: at each vertex with a forced edge, the
  // cycle's two incident edges include it. Walk vertices in path order; when
  // the current endpoint has an unused forced edge, it must be taken next.
  std::vector<int> forced_at(nv, -1);
  for (int i = forced.empty() ? -1 : forced.min_element(); i != -1;
       i = forced.next_element(i + 1)) {
    auto [a, b] = g.edge(i);
    if (forced_at[a] != -1 || forced_at[b] != -1)
      throw OmdetError(Err::BadParameters, "forced edges must form a matching");
    forced_at[a] = i;
    forced_at[b] = i;
  }
  std::vector<int> path = {0};
  std::vector<char> used(nv, 0);
  used[0] = 1;
  ElementSet result(g.edge_count());
  std::vector<char> edge_used(g.edge_count(), 0);
  std::function<bool()> dfs = [&]() -> bool {
    if (++nodes > node_cap)
      throw OmdetError(Err::SearchBudgetExceeded, "hamiltonian_cycle_through");
    int u = path.back();
    if (static_cast<int>(path.size()) == nv) {
      int ei = g.edge_index(u, 0);
      if (ei == -1) return false;
      // every forced edge must be on the cycle
      if (forced_at[u] != -1 && !edge_used[forced_at[u]] && forced_at[u] != ei)
        return false;
      if (forced_at[0] != -1 && !edge_used[forced_at[0]] && forced_at[0] != ei)
        return false;
      edge_used[ei] = 1;
      for (int i = forced.empty() ? -1 : forced.min_element(); i != -1;
           i = forced.next_element(i + 1))
        if (!edge_used[i]) {
          edge_used[ei] = 0;
          return false;
        }
      ElementSet c(g.edge_count());
      for (size_t i = 0; i + 1 < path.size(); ++i)
        c.add(g.edge_index(path[i], path[i + 1]));
      c.add(ei);
      result = c;
      return true;
    }
    // forced continuation?
    if (forced_at[u] != -1 && !edge_used[forced_at[u]]) {
      int ei = forced_at[u];
      auto [a, b] = g.edge(ei);
      int w = (a == u) ? b : a;
      if (used[w]) return false;
      used[w] = 1;
      edge_used[ei] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      edge_used[ei] = 0;
      used[w] = 0;
      return false;
    }
    for (auto [w, ei] : g.incident(u)) {
      if (used[w]) continue;
      // entering w while w has a pending forced edge is fine; it will be the
      // continuation out of w
      used[w] = 1;
      edge_used[ei] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      edge_used[ei] = 0;
      used[w] = 0;
    }
    return false;
  };
  if (!dfs()) return ElementSet(g.edge_count());
  return result;
}

std::vector<ElementSet> hamiltonian_decomposition(const Graph& g,
                                                  uint64_t node_cap) {
  const int nv = g.vertex_count();
  const int m = g.edge_count();
  if (m % nv != 0) return {};
  const int k = m / nv;
  uint64_t nodes = 0;
  std::vector<ElementSet> found;
  ElementSet remaining = ElementSet::full(m);

  // Peel off Hamiltonian cycles one at a time from the remaining edges,
  // backtracking across peels.
  std::function<bool()> peel = [&]() -> bool {
    if (static_cast<int>(found.size()) == k) return remaining.empty();
    // enumerate Hamiltonian cycles of the remaining graph
    std::vector<int> path = {0};
    std::vector<char> used(nv, 0);
    used[0] = 1;
    std::function<bool()> dfs = [&]() -> bool {
      if (++nodes > node_cap)
        throw OmdetError(Err::SearchBudgetExceeded, "hamiltonian_decomposition");
      int u = path.back();
      if (static_cast<int>(path.size()) == nv) {
        int ei = g.edge_index(u, 0);
        if (ei == -1 || !remaining.contains(ei)) return false;
        if (path[1] > path.back()) return false;  // one direction only
        ElementSet c(m);
        for (size_t i = 0; i + 1 < path.size(); ++i)
          c.add(g.edge_index(path[i], path[i + 1]));
        c.add(ei);
        found.push_back(c);
        remaining = remaining.minus(c);
        if (peel()) return true;
        remaining = remaining | c;
        found.pop_back();
        return false;
      }
      for (auto [w, ei] : g.incident(u)) {
        if (used[w] || !remaining.contains(ei)) continue;
        used[w] = 1;
        path.push_back(w);
        if (dfs()) return true;
        path.pop_back();
        used[w] = 0;
      }
      return false;
    };
    return dfs();
  };
  if (!peel()) return {};
  return found;
}

}  // namespace omdet
