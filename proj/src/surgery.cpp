#include "tensegrity/surgery.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tensegrity {

namespace {

std::string name_triple(const char* a, const char* b, const char* c) {
  return std::string("(") + a + "," + b + "," + c + ")";
}

bool collinear_points(const Configuration& c, int a, int b, int x) {
  Matrix m(3, 3);
  const int ids[3] = {a, b, x};
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = c.at(ids[r])[0];
    m(r, 1) = c.at(ids[r])[1];
    m(r, 2) = 1;
  }
  return sgn(det(m)) == 0;
}

// lambda with u = lambda * v; throws unless u and v are parallel and v != 0.
Rational parallel_ratio(const Vector& u, const Vector& v) {
  std::size_t k = 0;
  while (k < v.size() && sgn(v[k]) == 0) ++k;
  if (k == v.size()) throw PreconditionError("degenerate segment: coincident points");
  const Rational lambda = u[k] / v[k];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != lambda * v[i]) throw PreconditionError("points are not collinear");
  return lambda;
}

Vector minus(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::set<int> outside_neighbors(const Graph& g, int v, const std::set<int>& core) {
  std::set<int> out;
  for (int u : g.neighbors(v))
    if (!core.contains(u)) out.insert(u);
  return out;
}

void require_distinct(const std::vector<int>& vs, int n) {
  std::set<int> seen;
  for (int v : vs) {
    if (v < 1 || v > n) throw PreconditionError("surgery vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) throw PreconditionError("surgery vertices must be distinct");
  }
}

void require_k4(const Framework& f, int a, int b, int c, int d) {
  const int v[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!f.graph.has_edge(v[i], v[j]))
        throw PreconditionError("graph pattern: missing K4 edge v" + std::to_string(i + 1) + "v" + std::to_string(j + 1));
  std::vector<Vector> pts;
  for (int x : v) pts.push_back(f.config.at(x));
  if (!general_position(Configuration(2, pts))) throw PreconditionError("K4 points v1..v4 are not in general position");
}

void require_attachments(const Graph& g, int v, const char* vname, const std::set<int>& core, const std::set<int>& expected) {
  if (outside_neighbors(g, v, core) != expected)
    throw PreconditionError(std::string("graph pattern: edges from ") + vname + " to vertices outside the K4 do not match");
}

// Adds the multiple of the v1..v4 atom that cancels the tension on e.
void cancel_with_atom(Stress& w, const Configuration& c, const std::vector<int>& k4, Edge e) {
  std::vector<int> support = k4;
  std::sort(support.begin(), support.end());
  std::vector<Vector> pts;
  for (int v : support) pts.push_back(c.at(v));
  const Stress local = atom_stress(Configuration(2, pts));
  Stress atom;
  for (const auto& [le, t] : local.tensions()) atom.set(Edge(support[le.a - 1], support[le.b - 1]), t);
  w += atom.scaled(-w.get(e) / atom.get(e));
}

void require_zero_at(const Stress& w, const std::vector<int>& removed) {
  for (const auto& [e, t] : w.tensions())
    for (int v : removed)
      if (e.contains(v) && sgn(t) != 0)
        throw PreconditionError("transport left tension on edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "}");
}

Stress zero_extended(const Graph& g, const Stress& w) {
  Stress full = Stress::zero(g);
  for (const auto& [e, t] : w.tensions()) {
    if (!g.edge_set().contains(e))
      throw PreconditionError("stress key {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an edge of G");
    full.set(e, t);
  }
  return full;
}

SideFramework side_without(const Framework& g_full, const std::vector<int>& removed) {
  std::vector<int> keep;
  for (int v = 1; v <= g_full.n(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  auto sub = induced_subgraph(g_full.graph, keep);
  std::vector<Vector> pts;
  for (int v : keep) pts.push_back(g_full.config.at(v));
  return {Framework(std::move(sub.graph), Configuration(g_full.d(), std::move(pts))), std::move(keep)};
}

void require_self_stress_on(const SideFramework& side, const Stress& w, const char* what) {
  const Stress local = side.restrict(w);
  if (!is_self_stress(side.framework, local)) throw PreconditionError(std::string(what) + " is not a self-stress");
}

}  // namespace

Stress SideFramework::restrict(const Stress& w) const {
  std::vector<int> local(labels.empty() ? 1 : labels.back() + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) local[labels[k]] = static_cast<int>(k) + 1;
  Stress out = Stress::zero(framework.graph);
  for (const auto& [e, t] : w.tensions()) {
    const bool inside = e.b < static_cast<int>(local.size()) && local[e.a] && local[e.b];
    if (!inside || !framework.graph.has_edge(local[e.a], local[e.b])) {
      if (sgn(t) != 0)
        throw PreconditionError("stress key {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an edge of this side");
      continue;
    }
    out.set(Edge(local[e.a], local[e.b]), t);
  }
  return out;
}

Stress SideFramework::lift(const Stress& w) const {
  Stress out;
  for (const auto& [e, t] : w.tensions()) out.set(Edge(labels[e.a - 1], labels[e.b - 1]), t);
  return out;
}

void merge_collinear(Stress& w, const Configuration& c, int x, int a, int b) {
  const Rational t_xa = w.get(Edge(x, a));
  const Rational t_xb = w.get(Edge(x, b));
  // Force of x-a on a must equal the force of a-b on a, and likewise at b.
  const Rational via_a = parallel_ratio(minus(c.at(x), c.at(a)), minus(c.at(b), c.at(a))) * t_xa;
  const Rational via_b = parallel_ratio(minus(c.at(x), c.at(b)), minus(c.at(a), c.at(b))) * t_xb;
  if (via_a != via_b) throw PreconditionError("tensions at v" + std::to_string(x) + " are not balanced along the line");
  w.add(Edge(a, b), via_a);
  w.set(Edge(x, a), 0);
  w.set(Edge(x, b), 0);
}

void split_edge(Stress& w, const Configuration& c, int a, int b, int x) {
  const Rational t = w.get(Edge(a, b));
  const Rational t_ax = parallel_ratio(minus(c.at(b), c.at(a)), minus(c.at(x), c.at(a))) * t;
  const Rational t_xb = parallel_ratio(minus(c.at(a), c.at(b)), minus(c.at(x), c.at(b))) * t;
  w.add(Edge(a, x), t_ax);
  w.add(Edge(x, b), t_xb);
  w.set(Edge(a, b), 0);
}

Stress general_surgery(const Framework& g_full, const GeneralSurgery& spec, const Stress& w) {
  const auto h = induced_subgraph(g_full.graph, spec.h_vertices);
  auto local = [&](int v) {
    auto it = std::find(h.original_index.begin(), h.original_index.end(), v);
    return it == h.original_index.end() ? 0 : static_cast<int>(it - h.original_index.begin()) + 1;
  };
  for (const Edge& e : {spec.e1, spec.e2})
    if (!local(e.a) || !local(e.b) || !h.graph.has_edge(local(e.a), local(e.b)))
      throw PreconditionError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} is not an edge of H");

  std::vector<Vector> pts;
  for (int v : h.original_index) pts.push_back(g_full.config.at(v));
  const SelfStressSpace hs = self_stress_space(Framework(h.graph, Configuration(g_full.d(), pts)));
  if (hs.dim() != 1)
    throw PreconditionError("dim W(H, P|H) = " + std::to_string(hs.dim()) + ", expected 1");
  Stress certificate;
  for (const auto& [e, t] : hs.basis.front().tensions()) {
    if (sgn(t) == 0) throw PreconditionError("certificate stress vanishes on an edge of H");
    certificate.set(Edge(h.original_index[e.a - 1], h.original_index[e.b - 1]), t);
  }
  if (sgn(certificate.get(spec.e2)) == 0) throw PreconditionError("certificate tension on e2 is zero");

  const Framework source(spec.e1 == spec.e2 ? g_full.graph : delete_edge(g_full.graph, spec.e1), g_full.config);
  const Framework target(delete_edge(g_full.graph, spec.e2), g_full.config);
  Stress full = zero_extended(source.graph, w);
  if (!is_self_stress(source, full)) throw PreconditionError("input is not a self-stress of G - e1");

  if (spec.e1 == spec.e2) {
    full.erase(spec.e2);
    return full;
  }
  full += certificate.scaled(-full.get(spec.e2) / certificate.get(spec.e2));
  if (sgn(full.get(spec.e2)) != 0) throw PreconditionError("failed to cancel e2");
  full.erase(spec.e2);
  if (!is_self_stress(target, full)) throw PreconditionError("transported stress is not a self-stress of G - e2");
  return full;
}

void check_surgery(const Framework& g_full, const SurgeryI& s) {
  if (g_full.d() != 2) throw PreconditionError("surgery I is planar");
  require_distinct({s.v1, s.v2, s.v3, s.v4, s.p, s.q}, g_full.n());
  require_k4(g_full, s.v1, s.v2, s.v3, s.v4);
  const std::set<int> core{s.v1, s.v2, s.v3, s.v4};
  require_attachments(g_full.graph, s.v1, "v1", core, {s.p, s.q});
  require_attachments(g_full.graph, s.v2, "v2", core, {s.p});
  require_attachments(g_full.graph, s.v3, "v3", core, {s.q});

  const auto& c = g_full.config;
  if (!collinear_points(c, s.p, s.v1, s.v2)) throw PreconditionError("required collinear triple " + name_triple("p", "v1", "v2") + " is not collinear");
  if (!collinear_points(c, s.q, s.v1, s.v3)) throw PreconditionError("required collinear triple " + name_triple("q", "v1", "v3") + " is not collinear");
  struct T {
    int a, b, x;
    const char *na, *nb, *nx;
  };
  const T excluded[] = {{s.p, s.v2, s.v3, "p", "v2", "v3"},
                        {s.q, s.v2, s.v3, "q", "v2", "v3"},
                        {s.p, s.v2, s.v4, "p", "v2", "v4"},
                        {s.q, s.v3, s.v4, "q", "v3", "v4"},
                        {s.v2, s.v3, s.v4, "v2", "v3", "v4"}};
  for (const auto& t : excluded)
    if (collinear_points(c, t.a, t.b, t.x)) throw PreconditionError("triple " + name_triple(t.na, t.nb, t.nx) + " is collinear");
}

void check_surgery(const Framework& g_full, const SurgeryII& s) {
  if (g_full.d() != 2) throw PreconditionError("surgery II is planar");
  require_distinct({s.v1, s.v2, s.v3, s.v4, s.p, s.q, s.r, s.s}, g_full.n());
  require_k4(g_full, s.v1, s.v2, s.v3, s.v4);
  const std::set<int> core{s.v1, s.v2, s.v3, s.v4};
  require_attachments(g_full.graph, s.v1, "v1", core, {s.p, s.q});
  require_attachments(g_full.graph, s.v2, "v2", core, {s.p, s.r});
  require_attachments(g_full.graph, s.v3, "v3", core, {s.q, s.s});
  require_attachments(g_full.graph, s.v4, "v4", core, {s.r, s.s});

  const auto& c = g_full.config;
  struct T {
    int a, b, x;
    const char *na, *nb, *nx;
  };
  const T required[] = {{s.p, s.v1, s.v2, "p", "v1", "v2"},
                        {s.q, s.v1, s.v3, "q", "v1", "v3"},
                        {s.r, s.v2, s.v4, "r", "v2", "v4"},
                        {s.s, s.v3, s.v4, "s", "v3", "v4"}};
  for (const auto& t : required)
    if (!collinear_points(c, t.a, t.b, t.x))
      throw PreconditionError("required collinear triple " + name_triple(t.na, t.nb, t.nx) + " is not collinear");
  const T excluded[] = {{s.p, s.q, s.v1, "p", "q", "v1"},  {s.p, s.v1, s.v4, "p", "v1", "v4"},
                        {s.r, s.v1, s.v4, "r", "v1", "v4"}, {s.q, s.v1, s.v4, "q", "v1", "v4"},
                        {s.s, s.v1, s.v4, "s", "v1", "v4"}, {s.r, s.s, s.v4, "r", "s", "v4"}};
  for (const auto& t : excluded)
    if (collinear_points(c, t.a, t.b, t.x)) throw PreconditionError("triple " + name_triple(t.na, t.nb, t.nx) + " is collinear");
}

SideFramework surgery_side(const Framework& g_full, const SurgeryI& s, int side) {
  return side == 1 ? side_without(g_full, {s.v2, s.v3}) : side_without(g_full, {s.v1});
}

SideFramework surgery_side(const Framework& g_full, const SurgeryII& s, int side) {
  return side == 1 ? side_without(g_full, {s.v1, s.v4}) : side_without(g_full, {s.v2, s.v3});
}

SurgeryResult surgery_I(const Framework& g_full, const SurgeryI& s, Direction dir, const Stress& w) {
  check_surgery(g_full, s);
  const auto& c = g_full.config;
  const std::vector<int> k4{s.v1, s.v2, s.v3, s.v4};
  const SideFramework source = surgery_side(g_full, s, dir == Direction::Forward ? 2 : 1);
  SideFramework target = surgery_side(g_full, s, dir == Direction::Forward ? 1 : 2);
  require_self_stress_on(source, w, "input stress");

  Stress full = zero_extended(g_full.graph, w);
  if (dir == Direction::Forward) {
    cancel_with_atom(full, c, k4, Edge(s.v2, s.v3));
    merge_collinear(full, c, s.v2, s.p, s.v1);
    merge_collinear(full, c, s.v3, s.q, s.v1);
    require_zero_at(full, {s.v2, s.v3});
  } else {
    split_edge(full, c, s.p, s.v1, s.v2);
    split_edge(full, c, s.q, s.v1, s.v3);
    cancel_with_atom(full, c, k4, Edge(s.v1, s.v2));
    require_zero_at(full, {s.v1});
  }
  Stress out = target.lift(target.restrict(full));
  if (!is_self_stress(target.framework, target.restrict(out))) throw PreconditionError("transported stress is not a self-stress");
  return {std::move(target), std::move(out)};
}

SurgeryResult surgery_II(const Framework& g_full, const SurgeryII& s, Direction dir, const Stress& w) {
  check_surgery(g_full, s);
  const auto& c = g_full.config;
  const std::vector<int> k4{s.v1, s.v2, s.v3, s.v4};
  const SideFramework source = surgery_side(g_full, s, dir == Direction::Forward ? 1 : 2);
  SideFramework target = surgery_side(g_full, s, dir == Direction::Forward ? 2 : 1);
  require_self_stress_on(source, w, "input stress");

  Stress full = zero_extended(g_full.graph, w);
  if (dir == Direction::Forward) {
    cancel_with_atom(full, c, k4, Edge(s.v2, s.v3));
    merge_collinear(full, c, s.v2, s.p, s.v1);
    merge_collinear(full, c, s.v2, s.r, s.v4);
    merge_collinear(full, c, s.v3, s.q, s.v1);
    merge_collinear(full, c, s.v3, s.s, s.v4);
    require_zero_at(full, {s.v2, s.v3});
  } else {
    cancel_with_atom(full, c, k4, Edge(s.v1, s.v4));
    merge_collinear(full, c, s.v1, s.p, s.v2);
    merge_collinear(full, c, s.v1, s.q, s.v3);
    merge_collinear(full, c, s.v4, s.r, s.v2);
    merge_collinear(full, c, s.v4, s.s, s.v3);
    require_zero_at(full, {s.v1, s.v4});
  }
  Stress out = target.lift(target.restrict(full));
  if (!is_self_stress(target.framework, target.restrict(out))) throw PreconditionError("transported stress is not a self-stress");
  return {std::move(target), std::move(out)};
}

}  // namespace tensegrity
