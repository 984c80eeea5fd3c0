#include <doctest.h>

#include "support.hpp"
#include "tensegrity/surgery.hpp"

using namespace tensegrity;
using testing_support::surgery_I_instance;
using testing_support::surgery_II_instance;

namespace {

template <typename Spec, typename Apply>
void check_transport(const Framework& g, const Spec& spec, int from, Direction dir, Apply apply) {
  const SideFramework source = surgery_side(g, spec, from);
  const SideFramework target = surgery_side(g, spec, 3 - from);
  const auto basis = self_stress_space(source.framework).basis;
  CHECK(basis.size() == self_stress_dim(target.framework));
  std::vector<Vector> images;
  const auto order = target.framework.graph.edges();
  for (const auto& b : basis) {
    const Stress w = source.lift(b);
    const SurgeryResult r = apply(g, spec, dir, w);
    const Stress local = target.restrict(r.stress);
    CHECK(is_self_stress(target.framework, local));
    images.push_back(local.to_vector(order));
    const Direction back = dir == Direction::Forward ? Direction::Backward : Direction::Forward;
    CHECK(apply(g, spec, back, r.stress).stress.same_values(w));
  }
  // Injective on a basis, so an isomorphism onto the target fiber.
  CHECK(rank(images, order.size()) == basis.size());
}

auto apply_I = [](const Framework& g, const SurgeryI& s, Direction d, const Stress& w) { return surgery_I(g, s, d, w); };
auto apply_II = [](const Framework& g, const SurgeryII& s, Direction d, const Stress& w) { return surgery_II(g, s, d, w); };

}  // namespace

TEST_CASE("merge and split are inverse") {
  // a = (0,0), x = (1,0), b = (3,0) on one line.
  const Configuration c(2, {{0, 0}, {1, 0}, {3, 0}});
  Stress w;
  w.set(Edge(1, 3), 6);
  split_edge(w, c, 1, 3, 2);
  CHECK(w.get(Edge(1, 2)) == 18);  // b - a = 3 (x - a)
  CHECK(w.get(Edge(2, 3)) == 9);   // a - b = 3/2 (x - b)
  CHECK(w.get(Edge(1, 3)) == 0);
  merge_collinear(w, c, 2, 1, 3);
  CHECK(w.get(Edge(1, 3)) == 6);
  CHECK(w.get(Edge(1, 2)) == 0);
  CHECK(w.get(Edge(2, 3)) == 0);

  const Configuration off(2, {{0, 0}, {1, 1}, {3, 0}});
  CHECK_THROWS_AS(split_edge(w, off, 1, 3, 2), PreconditionError);
}

TEST_CASE("surgery I preserves the fiber in both directions") {
  Lcg64 rng(100);
  for (int trial = 0; trial < 3; ++trial) {
    const auto [g, spec] = surgery_I_instance(rng);
    CHECK(self_stress_dim(surgery_side(g, spec, 1).framework) >= 1);
    check_transport(g, spec, 2, Direction::Forward, apply_I);
    check_transport(g, spec, 1, Direction::Backward, apply_I);
  }
}

TEST_CASE("surgery II preserves the fiber in both directions") {
  Lcg64 rng(200);
  for (int trial = 0; trial < 3; ++trial) {
    const auto [g, spec] = surgery_II_instance(rng);
    CHECK(self_stress_dim(surgery_side(g, spec, 1).framework) >= 1);
    check_transport(g, spec, 1, Direction::Forward, apply_II);
    check_transport(g, spec, 2, Direction::Backward, apply_II);
  }
}

TEST_CASE("surgery I names the violated hypothesis") {
  Lcg64 rng(300);
  auto [g, spec] = surgery_I_instance(rng);
  SUBCASE("p moved off the line v1v2") {
    auto pts = g.config.points;
    pts[4][1] += 1;
    const Framework moved(g.graph, Configuration(2, pts));
    CHECK_THROWS_WITH_AS(check_surgery(moved, spec), "required collinear triple (p,v1,v2) is not collinear", PreconditionError);
  }
  SUBCASE("v4 on the line v2v3") {
    auto pts = g.config.points;
    pts[3] = {2 * pts[1][0] - pts[2][0], 2 * pts[1][1] - pts[2][1]};
    const Framework moved(g.graph, Configuration(2, pts));
    CHECK_THROWS_AS(check_surgery(moved, spec), PreconditionError);
  }
  SUBCASE("missing K4 edge") {
    const Framework cut(delete_edge(g.graph, Edge(2, 3)), g.config);
    CHECK_THROWS_WITH_AS(check_surgery(cut, spec), doctest::Contains("missing K4 edge v2v3"), PreconditionError);
  }
  SUBCASE("extra attachment at v2") {
    Graph extra = g.graph;
    extra.add_edge(2, 7);
    CHECK_THROWS_WITH_AS(check_surgery(Framework(extra, g.config), spec), doctest::Contains("from v2"), PreconditionError);
  }
  SUBCASE("input not a self-stress of the source side") {
    Stress w;
    w.set(Edge(5, 6), 1);
    CHECK_THROWS_WITH_AS(surgery_I(g, spec, Direction::Forward, w), "input stress is not a self-stress", PreconditionError);
  }
}

TEST_CASE("surgery II names the violated hypothesis") {
  Lcg64 rng(400);
  auto [g, spec] = surgery_II_instance(rng);
  auto pts = g.config.points;
  pts[7][0] += 1;  // s off the line v3v4
  CHECK_THROWS_WITH_AS(check_surgery(Framework(g.graph, Configuration(2, pts)), spec),
                       "required collinear triple (s,v3,v4) is not collinear", PreconditionError);
}

TEST_CASE("general surgery exchanges two edges of an atom") {
  Lcg64 rng(500);
  const Framework g(Graph::complete(5), random_configuration(5, 2, rng));
  const GeneralSurgery forward{{1, 2, 3, 4}, Edge(1, 2), Edge(3, 4)};
  const GeneralSurgery backward{{1, 2, 3, 4}, Edge(3, 4), Edge(1, 2)};
  const Framework source(delete_edge(g.graph, Edge(1, 2)), g.config);
  const Framework target(delete_edge(g.graph, Edge(3, 4)), g.config);
  const auto basis = self_stress_space(source).basis;
  CHECK(basis.size() == self_stress_dim(target));
  for (const auto& w : basis) {
    const Stress moved = general_surgery(g, forward, w);
    CHECK(is_self_stress(target, moved));
    CHECK(general_surgery(g, backward, moved).same_values(w));
  }
}

TEST_CASE("general surgery preconditions") {
  Lcg64 rng(600);
  const Framework g(Graph::complete(5), random_configuration(5, 2, rng));
  const Framework source(delete_edge(g.graph, Edge(1, 2)), g.config);
  const Stress w = self_stress_space(source).basis.front();
  CHECK_THROWS_WITH_AS(general_surgery(g, {{1, 2, 3, 4, 5}, Edge(1, 2), Edge(3, 4)}, w), "dim W(H, P|H) = 3, expected 1",
                       PreconditionError);
  CHECK_THROWS_WITH_AS(general_surgery(g, {{1, 2, 3}, Edge(1, 2), Edge(3, 4)}, w), doctest::Contains("not an edge of H"),
                       PreconditionError);
}
