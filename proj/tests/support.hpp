#pragma once

#include "tensegrity/surgery.hpp"
#include "tensegrity/tchar.hpp"

#include <utility>

namespace testing_support {

using namespace tensegrity;

inline Rational random_fraction(Lcg64& rng, long range) {
  long den = rng.uniform(1, 9);
  return make_rational(rng.uniform(-range, range), den);
}

// t outside {0, 1}: the point v + t (w - v) is on line vw and differs from both.
inline Vector on_line(const Vector& v, const Vector& w, Lcg64& rng) {
  Rational t = 0;
  while (t == 0 || t == 1) t = random_fraction(rng, 40);
  return {v[0] + t * (w[0] - v[0]), v[1] + t * (w[1] - v[1])};
}

inline Vector planar_point(Lcg64& rng) { return {random_fraction(rng, 1000), random_fraction(rng, 1000)}; }

/// Surgery I on vertices v1..v4 = 1..4, p = 5, q = 6 and two extra vertices
/// 7, 8. Outside the K4 the graph is complete on {5,6,7,8}, and v4 meets 7, 8.
inline std::pair<Framework, SurgeryI> surgery_I_instance(Lcg64& rng) {
  const SurgeryI spec{1, 2, 3, 4, 5, 6};
  std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {1, 6},
                                         {2, 5}, {3, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
                                         {4, 7}, {4, 8}};
  const Graph g(8, edges);
  while (true) {
    std::vector<Vector> pts(8);
    for (int v : {1, 2, 3, 4, 7, 8}) pts[v - 1] = planar_point(rng);
    pts[4] = on_line(pts[0], pts[1], rng);
    pts[5] = on_line(pts[0], pts[2], rng);
    Framework f(g, Configuration(2, pts));
    try {
      check_surgery(f, spec);
      return {f, spec};
    } catch (const PreconditionError&) {
    }
  }
}

/// Surgery II on v1..v4 = 1..4 with p, q, r, s = 5..8 and the outside
/// vertices forming a K4.
inline std::pair<Framework, SurgeryII> surgery_II_instance(Lcg64& rng) {
  const SurgeryII spec{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {1, 6}, {3, 6},
                                         {2, 7}, {4, 7}, {3, 8}, {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}};
  const Graph g(8, edges);
  while (true) {
    std::vector<Vector> pts(8);
    for (int v : {1, 2, 3, 4}) pts[v - 1] = planar_point(rng);
    pts[4] = on_line(pts[0], pts[1], rng);  // p on v1v2
    pts[5] = on_line(pts[0], pts[2], rng);  // q on v1v3
    pts[6] = on_line(pts[1], pts[3], rng);  // r on v2v4
    pts[7] = on_line(pts[2], pts[3], rng);  // s on v3v4
    Framework f(g, Configuration(2, pts));
    try {
      check_surgery(f, spec);
      return {f, spec};
    } catch (const PreconditionError&) {
    }
  }
}

/// Random connected graph on n vertices with edge probability num/den.
inline Graph random_connected_graph(int n, int num, int den, Lcg64& rng) {
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.uniform(0, den - 1) < num) edges.push_back({i, j});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace testing_support
