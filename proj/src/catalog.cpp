#include "tensegrity/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace tensegrity {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

ClaimResult generic_claim(const CatalogEntry& e, std::uint64_t seed, int samples) {
  const int used = std::max(samples, e.generic_samples);
  const std::size_t got = generic_dim(e.graph, e.d, used, seed);
  ClaimResult r;
  r.claim = "generic dim = " + std::to_string(*e.expected_generic_dim);
  r.pass = got == *e.expected_generic_dim;
  r.detail = "computed " + std::to_string(got) + " over " + std::to_string(used) + " samples";
  return r;
}

ClaimResult witness_claim(const CatalogEntry& e, const WitnessCondition& w, Lcg64& rng) {
  const WitnessTally t = tally_witness(e.graph, w, kWitnessSamples, rng);
  const bool need_visible =
      std::find(e.visible_conditions.begin(), e.visible_conditions.end(), w.description) != e.visible_conditions.end();
  ClaimResult r;
  r.claim = w.description + " forces dim >= 1";
  r.pass = t.satisfying == t.samples && t.positive == t.samples;
  std::ostringstream d;
  d << t.positive << "/" << t.samples << " configurations with dim >= 1 (dims " << t.min_dim << ".." << t.max_dim
    << "), visible at " << t.visible << "/" << t.samples;
  if (t.satisfying != t.samples) d << ", " << (t.samples - t.satisfying) << " failed the condition system";
  if (static_cast<int>(t.invisible_samples.size()) == t.samples) {
    d << ", not visible at any sample";
  } else if (!t.invisible_samples.empty()) {
    std::vector<std::string> ids;
    for (int s : t.invisible_samples) ids.push_back(std::to_string(s));
    d << ", not visible at samples " << join(ids, ",");
  }
  if (need_visible) {
    d << " (visibility required at " << kVisibleRequired << ")";
    r.pass = r.pass && t.visible >= kVisibleRequired;
  }
  r.detail = d.str();
  return r;
}

Graph prism_graph(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  std::vector<std::pair<int, int>> edges{{1, 2}, {3, 4}, {5, 6}};
  for (const auto& t : {a, b}) {
    edges.push_back({t[0], t[1]});
    edges.push_back({t[0], t[2]});
    edges.push_back({t[1], t[2]});
  }
  return Graph(6, edges);
}

std::vector<WitnessCondition> prism_conditions() {
  return {concurrency_witness({1, 2, 3, 4, 5, 6}), collinear_witness({1, 4, 5}), collinear_witness({2, 3, 6})};
}

CatalogEntry prism_entry(const PrismLabeling& l) {
  CatalogEntry e;
  e.name = "prism_g61";
  e.description = "triangular prism, triangles " + l.describe() + ", rungs v1v2, v3v4, v5v6";
  e.graph = l.graph();
  e.d = 2;
  e.provenance = Provenance::DerivedReconstruction;
  e.expected_generic_dim = 0;
  e.conditions = prism_conditions();
  e.visible_conditions = {e.conditions.front().description};
  return e;
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::PaperText ? "paper-text" : "derived-reconstruction"; }

std::array<int, 3> PrismLabeling::other() const {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 1; v <= 6; ++v)
    if (std::find(triangle.begin(), triangle.end(), v) == triangle.end()) out[k++] = v;
  return out;
}

Graph PrismLabeling::graph() const { return prism_graph(triangle, other()); }

std::string PrismLabeling::describe() const {
  auto fmt = [](const std::array<int, 3>& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
  };
  return fmt(triangle) + "/" + fmt(other());
}

PrismLabeling pinned_prism_labeling() { return {{1, 4, 5}}; }

std::vector<PrismLabeling> prism_labelings() { return {{{1, 3, 5}}, {{1, 3, 6}}, {{1, 4, 5}}, {{1, 4, 6}}}; }

Graph two_block_k4() {
  std::vector<std::pair<int, int>> edges;
  for (int base : {0, 4})
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) edges.push_back({base + i, base + j});
  edges.push_back({4, 5});
  return Graph(8, edges);
}

Framework example_k4_framework() {
  return Framework(Graph::complete(4), Configuration(2, {{0, 0}, {1, 0}, {2, 2}, {0, 1}}));
}

Stress example_k4_stress() {
  return Stress::from_vector(Graph::complete(4).edges(), {6, -3, 6, 2, -4, 2});
}

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;

  CatalogEntry ex;
  ex.name = "example_k4";
  ex.description = "K4 at (0,0), (1,0), (2,2), (0,1) with stress (6,-3,6,2,-4,2)";
  ex.framework = example_k4_framework();
  ex.graph = ex.framework->graph;
  ex.d = 2;
  ex.expected_generic_dim = 1;
  ex.stress = example_k4_stress();
  ex.expected_signs = SignMatrix(4, {{Edge(1, 2), 1}, {Edge(1, 3), -1}, {Edge(1, 4), 1},
                                     {Edge(2, 3), 1}, {Edge(2, 4), -1}, {Edge(3, 4), 1}});
  out.push_back(std::move(ex));

  for (int n = 3; n <= 8; ++n)
    for (int d = 1; d <= 3; ++d) {
      CatalogEntry k;
      k.name = "k" + std::to_string(n) + "_d" + std::to_string(d);
      k.description = "complete graph K" + std::to_string(n) + " in dimension " + std::to_string(d);
      k.graph = Graph::complete(n);
      k.d = d;
      k.expected_generic_dim = n >= d + 2 ? static_cast<std::size_t>(tau_complete(n, d)) : 0;
      out.push_back(std::move(k));
    }

  CatalogEntry k33;
  k33.name = "k33_conic";
  k33.description = "K3,3 on parts {1,2,3} and {4,5,6}";
  k33.graph = Graph::complete_bipartite(3, 3);
  k33.d = 2;
  k33.expected_generic_dim = 0;
  k33.generic_samples = 10;
  k33.conditions = {conic_witness()};
  k33.visible_conditions = {k33.conditions.front().description};
  out.push_back(std::move(k33));

  out.push_back(prism_entry(pinned_prism_labeling()));

  CatalogEntry blocks;
  blocks.name = "two_block_k4";
  blocks.description = "two K4 blocks on 1..4 and 5..8 joined by the edge {4,5}";
  blocks.graph = two_block_k4();
  blocks.d = 2;
  blocks.provenance = Provenance::DerivedReconstruction;
  blocks.expected_generic_dim = 2;
  blocks.zero_tension_edges = {Edge(4, 5)};
  out.push_back(std::move(blocks));

  return out;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
  for (auto& e : catalog_list())
    if (e.name == name) return e;
  return std::nullopt;
}

WitnessTally tally_witness(const Graph& g, const WitnessCondition& w, int samples, Lcg64& rng) {
  WitnessTally t;
  t.samples = samples;
  for (int s = 1; s <= samples; ++s) {
    auto pts = w.sample(g.vertex_count(), rng);
    std::vector<ProjPoint> base;
    for (int i = 0; i < w.system.base_count; ++i) base.push_back(ProjPoint::affine(pts[i][0], pts[i][1]));
    if (evaluate_system(w.system, base).satisfied) ++t.satisfying;
    const Framework f(g, Configuration(2, std::move(pts)));
    const std::size_t dim = self_stress_dim(f);
    t.min_dim = s == 1 ? dim : std::min(t.min_dim, dim);
    t.max_dim = std::max(t.max_dim, dim);
    if (dim >= 1) ++t.positive;
    if (dim >= 1 && visible(f)) ++t.visible;
    else t.invisible_samples.push_back(s);
  }
  return t;
}

bool VerifyReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::string VerifyReport::status() const {
  if (pass()) return "PASS";
  return provenance == Provenance::DerivedReconstruction ? "FAIL (reconstruction unverified)" : "FAIL";
}

bool prism_labeling_passes(const PrismLabeling& l, std::uint64_t seed, int samples, std::string& detail) {
  const CatalogEntry e = prism_entry(l);
  Lcg64 rng(seed);
  std::vector<std::string> failed;
  if (!generic_claim(e, seed, samples).pass) failed.push_back("generic dim");
  const char* tags[] = {"i", "ii", "iii"};
  for (std::size_t k = 0; k < e.conditions.size(); ++k)
    if (!witness_claim(e, e.conditions[k], rng).pass) failed.push_back(std::string("condition ") + tags[k]);
  detail = failed.empty() ? "passes" : "fails " + join(failed, ", ");
  return failed.empty();
}

VerifyReport verify(const CatalogEntry& e, std::uint64_t seed, int samples) {
  VerifyReport report;
  report.entry = e.name;
  report.provenance = e.provenance;
  Lcg64 rng(seed);

  if (e.framework) {
    const SelfStressSpace space = self_stress_space(*e.framework);
    report.claims.push_back({"dim W = " + std::to_string(*e.expected_generic_dim),
                             space.dim() == *e.expected_generic_dim, "computed " + std::to_string(space.dim())});
    if (e.stress) {
      report.claims.push_back({"stated stress is a self-stress", is_self_stress(*e.framework, *e.stress), ""});
      bool proportional = space.dim() == 1;
      if (proportional) {
        const Stress& b = space.basis.front();
        const Rational ratio = e.stress->get(space.edge_order.front()) / b.get(space.edge_order.front());
        proportional = b.scaled(ratio).same_values(*e.stress);
      }
      report.claims.push_back({"basis proportional to stated stress", proportional, ""});
      if (e.expected_signs)
        report.claims.push_back({"sign matrix matches", sign_matrix(*e.stress, e.framework->n()) == *e.expected_signs, ""});
    }
  } else if (e.expected_generic_dim) {
    report.claims.push_back(generic_claim(e, seed, samples));
  }

  for (const auto& w : e.conditions) report.claims.push_back(witness_claim(e, w, rng));

  for (const Edge& z : e.zero_tension_edges) {
    const auto drops = edge_deletion_check(e.graph, e.d, samples, seed);
    const auto it = std::find_if(drops.begin(), drops.end(), [&](const EdgeDrop& x) { return x.edge == z; });
    ClaimResult r;
    r.claim = "edge {" + std::to_string(z.a) + "," + std::to_string(z.b) + "} carries no tension";
    r.pass = it != drops.end() && it->drop == 0;
    r.detail = it == drops.end() ? "edge missing" : "deleting it lowers the generic dim by " + std::to_string(it->drop);
    report.claims.push_back(r);
  }

  if (e.name == "prism_g61") {
    for (const auto& l : prism_labelings()) {
      std::string detail;
      const bool ok = prism_labeling_passes(l, seed, samples, detail);
      report.labeling_search.push_back(l.describe() + ": " + detail);
      if (ok && !report.passing_labeling) report.passing_labeling = l.describe();
    }
    const std::string pinned = pinned_prism_labeling().describe();
    report.claims.push_back({"pinned labeling " + pinned + " is the first passing labeling",
                             report.passing_labeling == pinned,
                             report.passing_labeling ? "search found " + *report.passing_labeling : "no labeling passed"});
  }
  return report;
}

std::vector<Prop22Row> prop22_scan(const std::vector<NamedGraph>& graphs, std::uint64_t seed, int samples) {
  std::vector<Prop22Row> out;
  for (const auto& [name, g] : graphs) {
    Prop22Row row;
    row.name = name;
    row.n = g.vertex_count();
    row.k = g.edge_count();
    row.conn = connectivity(g);
    row.expected = std::max(0L, static_cast<long>(row.k) - 2L * row.n + 3);
    if (row.n > 7) row.skipped = "more than 7 vertices";
    else if (row.conn.kappa < 2) row.skipped = "vertex connectivity " + std::to_string(row.conn.kappa) + " < 2";
    else if (row.conn.lambda < 3) row.skipped = "edge connectivity " + std::to_string(row.conn.lambda) + " < 3";
    if (!row.skipped) {
      row.generic = generic_dim(g, 2, samples, seed);
      row.pass = static_cast<long>(row.generic) == row.expected;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tensegrity
