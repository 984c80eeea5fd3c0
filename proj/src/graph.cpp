#include "tensegrity/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tensegrity {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : edges) {
    if (edges_.contains(Edge(u, v)))
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    add_edge(u, v);
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edges_.insert(Edge(i, j));
  return g;
}

Graph Graph::complete_bipartite(int left, int right) {
  Graph g(left + right);
  for (int i = 1; i <= left; ++i)
    for (int j = left + 1; j <= left + right; ++j) g.edges_.insert(Edge(i, j));
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  edges_.insert(Edge(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.contains(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = degree(1);
  for (int v = 2; v <= n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.edge_set().contains(e)) throw std::invalid_argument("no such edge");
  Graph out(g.vertex_count());
  for (const auto& f : g.edge_set())
    if (f != e) out.add_edge(f.a, f.b);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> position(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k] < 1 || vs[k] > g.vertex_count()) throw std::invalid_argument("vertex out of range");
    position[vs[k]] = static_cast<int>(k) + 1;
  }
  InducedSubgraph out{Graph(static_cast<int>(vs.size())), vs};
  for (const auto& e : g.edge_set())
    if (position[e.a] && position[e.b]) out.graph.add_edge(position[e.a], position[e.b]);
  return out;
}

namespace {

// Connectedness of g after removing the vertices flagged in `removed` and
// the edges flagged in `cut` (indexed like g.edges()).
bool connected_without(const Graph& g, const std::vector<bool>& removed, const std::vector<Edge>& edges,
                       const std::vector<bool>& cut) {
  const int n = g.vertex_count();
  int alive = 0;
  for (int v = 1; v <= n; ++v)
    if (!removed[v]) ++alive;
  if (alive <= 1) return true;
  std::vector<int> parent(n + 1);
  for (int v = 1; v <= n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = alive;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (cut[i] || removed[e.a] || removed[e.b]) continue;
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

// Calls visit(mask) on every k-subset of {0..n-1}; stops when visit returns true.
template <typename Visit>
bool any_subset(int n, int k, Visit visit) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::fill(mask.begin(), mask.end(), false);
    for (int i : idx) mask[i] = true;
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  const auto edges = g.edges();
  return connected_without(g, std::vector<bool>(g.vertex_count() + 1, false), edges,
                           std::vector<bool>(edges.size(), false));
}

Connectivity connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return {};
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Connectivity out;

  out.kappa = n - 1;
  for (int k = 1; k <= n - 2; ++k) {
    bool separates = any_subset(n, k, [&](const std::vector<bool>& mask) {
      std::vector<bool> removed(n + 1, false);
      for (int v = 0; v < n; ++v) removed[v + 1] = mask[v];
      return !connected_without(g, removed, edges, std::vector<bool>(m, false));
    });
    if (separates) {
      out.kappa = k;
      break;
    }
  }

  // Isolating a minimum-degree vertex is always a cut.
  out.lambda = g.min_degree();
  const std::vector<bool> none(n + 1, false);
  for (int k = 1; k < g.min_degree(); ++k) {
    bool separates = any_subset(m, k, [&](const std::vector<bool>& cut) { return !connected_without(g, none, edges, cut); });
    if (separates) {
      out.lambda = k;
      break;
    }
  }
  return out;
}

std::optional<std::array<int, 4>> find_induced_k4(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        for (int d = c + 1; d <= n; ++d)
          if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) return std::array<int, 4>{a, b, c, d};
      }
    }
  return std::nullopt;
}

}  // namespace tensegrity
