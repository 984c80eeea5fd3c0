#include "tensegrity/tchar.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tensegrity {

namespace {

std::size_t min_dim_over_samples(const Graph& g, int d, int samples, Lcg64& rng) {
  if (samples < 1) throw std::invalid_argument("at least one sample is required");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (int s = 0; s < samples; ++s)
    best = std::min(best, self_stress_dim(Framework(g, random_configuration(g.vertex_count(), d, rng))));
  return best;
}

}  // namespace

Configuration random_configuration(int n, int d, Lcg64& rng) {
  std::vector<Vector> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, d, kSampleRange));
  return Configuration(d, std::move(pts));
}

std::size_t generic_dim(const Graph& g, int d, int samples, std::uint64_t seed) {
  Lcg64 rng(seed);
  return min_dim_over_samples(g, d, samples, rng);
}

long tau_complete(int n, int d) {
  if (n < d + 2) throw std::invalid_argument("closed form needs n >= d + 2");
  return static_cast<long>(n - d - 1) * (n - d) / 2;
}

std::optional<long> TcReport::tau() const {
  if (positive) return static_cast<long>(generic_dim);
  if (witness_name) return 0;
  return std::nullopt;
}

TcReport tau_report(const Graph& g, int d, int samples, std::uint64_t seed, const std::vector<WitnessCondition>& witnesses) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  Lcg64 rng(seed);
  TcReport report;
  report.graph = g;
  report.d = d;
  report.samples_used = samples;
  report.generic_dim = min_dim_over_samples(g, d, samples, rng);
  report.positive = report.generic_dim >= 1;
  if (report.positive || d != 2) return report;

  for (const auto& w : witnesses) {
    if (w.system.base_count > g.vertex_count()) continue;
    Lcg64 first = rng;
    auto dim = witness_dim(g, w, samples, rng);
    if (dim && *dim >= 1) {
      report.witness_name = w.name;
      report.witness_description = w.description;
      report.witness_configuration = Configuration(2, w.sample(g.vertex_count(), first));
      break;
    }
  }
  return report;
}

std::vector<EdgeDrop> edge_deletion_check(const Graph& g, int d, int samples, std::uint64_t seed) {
  const auto base = static_cast<long>(generic_dim(g, d, samples, seed));
  if (base < 2) throw std::invalid_argument("edge deletion law needs generic dimension at least 2");
  std::vector<EdgeDrop> out;
  for (const auto& e : g.edges())
    out.push_back({e, base - static_cast<long>(generic_dim(delete_edge(g, e), d, samples, seed))});
  return out;
}

BoundCheck bound_check(const Graph& g, int d) {
  BoundCheck out;
  const long n = g.vertex_count();
  const long k = static_cast<long>(g.edge_count());
  out.lower_bound = std::max(0L, k - (d * n - d * (d + 1) / 2));
  if (d == 2 && n <= 7) {
    const auto c = connectivity(g);
    if (c.kappa >= 2 && c.lambda >= 3) out.predicted = k - 2 * n + 3;
  }
  return out;
}

}  // namespace tensegrity
