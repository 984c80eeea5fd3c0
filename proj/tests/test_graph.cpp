#include <doctest.h>

#include "support.hpp"
#include "tensegrity/graph.hpp"

#include <stdexcept>

using namespace tensegrity;

namespace {

// Connectivity by deleting every subset: slow but independent of the library.
bool connected_without(const Graph& g, const std::vector<int>& gone_v, const std::vector<Edge>& gone_e) {
  const int n = g.vertex_count();
  std::vector<char> dead(n + 1, 0);
  for (int v : gone_v) dead[v] = 1;
  int start = 0, alive = 0;
  for (int v = 1; v <= n; ++v)
    if (!dead[v]) {
      ++alive;
      if (!start) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges()) {
      if (!e.contains(v) || std::find(gone_e.begin(), gone_e.end(), e) != gone_e.end()) continue;
      const int u = e.other(v);
      if (dead[u] || seen[u]) continue;
      seen[u] = 1;
      ++count;
      stack.push_back(u);
    }
  }
  return count == alive;
}

int brute_kappa(const Graph& g) {
  const int n = g.vertex_count();
  for (int size = 0; size < n - 1; ++size)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<int> gone;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) gone.push_back(v + 1);
      if (!connected_without(g, gone, {})) return size;
    }
  return n - 1;
}

int brute_lambda(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= m; ++size)
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      if (__builtin_popcountl(mask) != size) continue;
      std::vector<Edge> gone;
      for (int i = 0; i < m; ++i)
        if (mask & (1ul << i)) gone.push_back(edges[i]);
      if (!connected_without(g, {}, gone)) return size;
    }
  return m;
}

}  // namespace

TEST_CASE("edges are stored sorted and lexicographic") {
  const Graph g(4, {{3, 1}, {2, 4}, {1, 2}});
  const auto e = g.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == Edge(1, 2));
  CHECK(e[1] == Edge(1, 3));
  CHECK(e[2] == Edge(2, 4));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(3, 4));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(2) == std::vector<int>{1, 4});
  CHECK(g.min_degree() == 1);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_WITH(delete_edge(Graph::complete(3), Edge(1, 4)), doctest::Contains("no such edge"));
}

TEST_CASE("named families") {
  CHECK(Graph::complete(5).edge_count() == 10);
  const Graph k33 = Graph::complete_bipartite(3, 3);
  CHECK(k33.edge_count() == 9);
  CHECK(k33.has_edge(1, 4));
  CHECK_FALSE(k33.has_edge(1, 2));
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK(Graph::cycle(5).has_edge(1, 5));
}

TEST_CASE("induced subgraph relabels in the given order") {
  const auto sub = induced_subgraph(Graph::complete(5), {2, 4, 5});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.original_index == std::vector<int>{2, 4, 5});
}

TEST_CASE("connectivity of known graphs") {
  CHECK(connectivity(Graph::complete(5)).kappa == 4);
  CHECK(connectivity(Graph::complete(5)).lambda == 4);
  CHECK(connectivity(Graph::complete_bipartite(3, 3)).kappa == 3);
  CHECK(connectivity(Graph::complete_bipartite(3, 3)).lambda == 3);
  CHECK(connectivity(Graph::cycle(6)).kappa == 2);
  CHECK(connectivity(Graph::cycle(6)).lambda == 2);
  CHECK(connectivity(Graph(4, {{1, 2}, {3, 4}})).kappa == 0);
  CHECK(connectivity(Graph(4, {{1, 2}, {3, 4}})).lambda == 0);
  CHECK_FALSE(is_connected(Graph(3, {{1, 2}})));
  CHECK(is_connected(Graph::cycle(4)));
}

TEST_CASE("connectivity agrees with subset deletion on random graphs") {
  Lcg64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(2, 6);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.uniform(0, 2) > 0) edges.push_back({i, j});
    const Graph g(n, edges);
    const auto c = connectivity(g);
    CHECK(c.kappa == brute_kappa(g));
    CHECK(c.lambda == brute_lambda(g));
    CHECK(c.kappa <= c.lambda);
    CHECK(c.lambda <= g.min_degree());
  }
}

TEST_CASE("induced K4 search") {
  CHECK(find_induced_k4(Graph::complete(4)).has_value());
  CHECK_FALSE(find_induced_k4(Graph::complete_bipartite(3, 3)).has_value());
  // Triangular prism: two triangles and three rungs.
  CHECK_FALSE(find_induced_k4(Graph(6, {{1, 4}, {1, 5}, {4, 5}, {2, 3}, {2, 6}, {3, 6}, {1, 2}, {3, 4}, {5, 6}})).has_value());
  Lcg64 rng(1);
  const auto k = find_induced_k4(testing_support::surgery_I_instance(rng).first.graph);
  REQUIRE(k);
  CHECK(*k == std::array<int, 4>{1, 2, 3, 4});
}
