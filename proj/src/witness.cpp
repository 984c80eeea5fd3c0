#include "tensegrity/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensegrity {

namespace {

constexpr long kWitnessRange = 1000;

std::vector<Vector> random_points(int n, Lcg64& rng) {
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, 2, kWitnessRange));
  return pts;
}

Rational random_nonzero(Lcg64& rng, long range) {
  long v = 0;
  while (v == 0) v = rng.uniform(-range, range);
  return v;
}

}  // namespace

Vector random_point(Lcg64& rng, int d, long range) {
  Vector p;
  for (int k = 0; k < d; ++k) p.push_back(rng.uniform_rational(-range, range));
  return p;
}

WitnessCondition conic_witness() {
  WitnessCondition w;
  w.name = "conic";
  w.description = "six points on a conic";
  w.system = pascal_system();
  w.sample = [](int n, Lcg64& rng) {
    if (n < 6) throw std::invalid_argument("conic witness needs six vertices");
    auto pts = random_points(n, rng);
    const Rational cx = rng.uniform_rational(-kWitnessRange, kWitnessRange);
    const Rational cy = rng.uniform_rational(-kWitnessRange, kWitnessRange);
    const Rational radius = rng.uniform_rational(1, kWitnessRange);
    std::vector<Rational> ts;
    while (ts.size() < 6) {
      Rational t = make_rational(rng.uniform(-200, 200), rng.uniform(1, 50));
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    for (int i = 0; i < 6; ++i) {
      const Rational& t = ts[i];
      const Rational den = 1 + t * t;
      pts[i] = {cx + radius * (1 - t * t) / den, cy + radius * 2 * t / den};
    }
    return pts;
  };
  return w;
}

WitnessCondition concurrency_witness(std::array<int, 6> v) {
  WitnessCondition w;
  w.name = "concurrent";
  w.description = "lines v" + std::to_string(v[0]) + "v" + std::to_string(v[1]) + ", v" + std::to_string(v[2]) + "v" +
                  std::to_string(v[3]) + ", v" + std::to_string(v[4]) + "v" + std::to_string(v[5]) + " concurrent";
  w.system = concurrency_system(v, *std::max_element(v.begin(), v.end()));
  w.sample = [v](int n, Lcg64& rng) {
    auto pts = random_points(n, rng);
    const Vector center = random_point(rng, 2, kWitnessRange);
    for (int pair = 0; pair < 3; ++pair) {
      Vector dir;
      do dir = random_point(rng, 2, 50);
      while (is_zero(dir));
      Rational s1 = random_nonzero(rng, 20);
      Rational s2 = s1;
      while (s2 == s1) s2 = random_nonzero(rng, 20);
      pts[v[2 * pair] - 1] = {center[0] + s1 * dir[0], center[1] + s1 * dir[1]};
      pts[v[2 * pair + 1] - 1] = {center[0] + s2 * dir[0], center[1] + s2 * dir[1]};
    }
    return pts;
  };
  return w;
}

WitnessCondition collinear_witness(std::array<int, 3> v) {
  WitnessCondition w;
  w.name = "collinear";
  w.description = "v" + std::to_string(v[0]) + ", v" + std::to_string(v[1]) + ", v" + std::to_string(v[2]) + " collinear";
  w.system = collinear_system(v, *std::max_element(v.begin(), v.end()));
  w.sample = [v](int n, Lcg64& rng) {
    auto pts = random_points(n, rng);
    const Vector origin = random_point(rng, 2, kWitnessRange);
    Vector dir;
    do dir = random_point(rng, 2, 50);
    while (is_zero(dir));
    std::vector<Rational> used;
    for (int idx : v) {
      Rational s = random_nonzero(rng, 20);
      while (std::find(used.begin(), used.end(), s) != used.end()) s = random_nonzero(rng, 20);
      used.push_back(s);
      pts[idx - 1] = {origin[0] + s * dir[0], origin[1] + s * dir[1]};
    }
    return pts;
  };
  return w;
}

std::vector<WitnessCondition> default_witnesses(int n) {
  std::vector<WitnessCondition> out;
  if (n >= 6) {
    out.push_back(conic_witness());
    out.push_back(concurrency_witness());
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back(collinear_witness({a, b, c}));
  return out;
}

std::optional<std::size_t> witness_dim(const Graph& g, const WitnessCondition& w, int samples, Lcg64& rng) {
  const int n = g.vertex_count();
  if (w.system.base_count > n) throw std::invalid_argument("witness refers to more vertices than the graph has");
  std::optional<std::size_t> best;
  for (int s = 0; s < samples; ++s) {
    auto pts = w.sample(n, rng);
    std::vector<ProjPoint> base;
    for (int i = 0; i < w.system.base_count; ++i) base.push_back(ProjPoint::affine(pts[i][0], pts[i][1]));
    if (!evaluate_system(w.system, base).satisfied) return std::nullopt;
    const std::size_t dim = self_stress_dim(Framework(g, Configuration(2, std::move(pts))));
    best = best ? std::min(*best, dim) : dim;
  }
  return best;
}

}  // namespace tensegrity
