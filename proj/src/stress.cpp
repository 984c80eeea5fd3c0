#include "tensegrity/stress.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tensegrity {

Configuration::Configuration(int dim, std::vector<Vector> pts) : d(dim), points(std::move(pts)) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (static_cast<int>(points[i].size()) != d)
      throw std::invalid_argument("point " + std::to_string(i + 1) + " has " + std::to_string(points[i].size()) +
                                  " coordinates, expected " + std::to_string(d));
}

Framework::Framework(Graph g, Configuration c) : graph(std::move(g)), config(std::move(c)) {
  if (graph.vertex_count() != config.size())
    throw std::invalid_argument("graph has " + std::to_string(graph.vertex_count()) + " vertices but configuration has " +
                                std::to_string(config.size()) + " points");
}

Stress Stress::zero(const Graph& g) {
  Stress s;
  for (const auto& e : g.edge_set()) s.tensions_.emplace(e, 0);
  return s;
}

Stress Stress::from_vector(const std::vector<Edge>& order, const Vector& values) {
  if (order.size() != values.size()) throw std::invalid_argument("stress vector length mismatch");
  Stress s;
  for (std::size_t k = 0; k < order.size(); ++k) s.tensions_.emplace(order[k], values[k]);
  return s;
}

Rational Stress::get(Edge e) const {
  auto it = tensions_.find(e);
  return it == tensions_.end() ? Rational(0) : it->second;
}

Vector Stress::to_vector(const std::vector<Edge>& order) const {
  Vector v;
  v.reserve(order.size());
  for (const auto& e : order) v.push_back(get(e));
  return v;
}

bool Stress::is_zero() const {
  return std::all_of(tensions_.begin(), tensions_.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

bool Stress::keyed_by(const Graph& g) const {
  if (tensions_.size() != g.edge_count()) return false;
  return std::all_of(tensions_.begin(), tensions_.end(), [&](const auto& kv) { return g.edge_set().contains(kv.first); });
}

Stress Stress::scaled(const Rational& factor) const {
  Stress s = *this;
  for (auto& [e, w] : s.tensions_) w *= factor;
  return s;
}

Stress& Stress::operator+=(const Stress& other) {
  for (const auto& [e, w] : other.tensions_) tensions_[e] += w;
  return *this;
}

bool Stress::same_values(const Stress& other) const {
  for (const auto& [e, w] : tensions_)
    if (other.get(e) != w) return false;
  for (const auto& [e, w] : other.tensions_)
    if (get(e) != w) return false;
  return true;
}

Stress operator+(Stress a, const Stress& b) {
  a += b;
  return a;
}

Matrix equilibrium_matrix(const Framework& f) {
  const int d = f.d();
  const auto edges = f.graph.edges();
  Matrix m(static_cast<std::size_t>(d) * f.n(), edges.size());
  for (std::size_t c = 0; c < edges.size(); ++c) {
    const auto& [i, j] = edges[c];
    const Vector& pi = f.config.at(i);
    const Vector& pj = f.config.at(j);
    for (int k = 0; k < d; ++k) {
      m((i - 1) * d + k, c) = pj[k] - pi[k];
      m((j - 1) * d + k, c) = pi[k] - pj[k];
    }
  }
  return m;
}

std::vector<Vector> SelfStressSpace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(basis.size());
  for (const auto& s : basis) out.push_back(s.to_vector(edge_order));
  return out;
}

Stress SelfStressSpace::combination(const Vector& coeffs) const {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count differs from fiber dimension");
  Stress s = Stress::zero(framework.graph);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(coeffs[k]) != 0) s += basis[k].scaled(coeffs[k]);
  return s;
}

SelfStressSpace self_stress_space(const Framework& f) {
  SelfStressSpace space{f, f.graph.edges(), {}};
  for (auto& v : nullspace(equilibrium_matrix(f))) space.basis.push_back(Stress::from_vector(space.edge_order, v));
  return space;
}

std::size_t self_stress_dim(const Framework& f) {
  return f.graph.edge_count() - rank(equilibrium_matrix(f));
}

std::vector<Vector> verify_self_stress(const Framework& f, const Stress& w) {
  for (const auto& [e, t] : w.tensions())
    if (!f.graph.edge_set().contains(e))
      throw std::invalid_argument("stress key {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                  "} is not an edge of the framework");
  const int d = f.d();
  std::vector<Vector> residual(f.n(), Vector(d, 0));
  for (const auto& [e, t] : w.tensions()) {
    if (sgn(t) == 0) continue;
    const Vector& pa = f.config.at(e.a);
    const Vector& pb = f.config.at(e.b);
    for (int k = 0; k < d; ++k) {
      const Rational delta = t * (pb[k] - pa[k]);
      residual[e.a - 1][k] += delta;
      residual[e.b - 1][k] -= delta;
    }
  }
  return residual;
}

bool is_self_stress(const Framework& f, const Stress& w) {
  const auto residual = verify_self_stress(f, w);
  return std::all_of(residual.begin(), residual.end(), [](const Vector& r) { return is_zero(r); });
}

SignMatrix::SignMatrix(int n, std::map<Edge, int> entries) : n_(n), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second < -1 || it->second > 1) throw std::invalid_argument("sign entry outside {-1,0,1}");
    // Zeros are implicit so that equality compares values only.
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

int SignMatrix::at(int i, int j) const {
  if (i == j) return 0;
  auto it = entries_.find(Edge(i, j));
  return it == entries_.end() ? 0 : it->second;
}

std::vector<int> SignMatrix::to_vector(const std::vector<Edge>& order) const {
  std::vector<int> out;
  out.reserve(order.size());
  for (const auto& e : order) out.push_back(at(e.a, e.b));
  return out;
}

std::strong_ordering SignMatrix::operator<=>(const SignMatrix& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (auto c = at(i, j) <=> o.at(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix m = *this;
  for (auto& [e, s] : m.entries_) s = -s;
  return m;
}

SignMatrix sign_matrix(const Stress& w, int n) {
  std::map<Edge, int> entries;
  for (const auto& [e, t] : w.tensions()) entries.emplace(e, sgn(t));
  return SignMatrix(n, std::move(entries));
}

Tensegrity add_tensegrities(const Tensegrity& t1, const Tensegrity& t2) {
  if (t1.framework.d() != t2.framework.d()) throw std::invalid_argument("tensegrities live in different dimensions");
  const int d = t1.framework.d();
  std::vector<Vector> points = t1.framework.config.points;
  std::vector<bool> claimed(points.size(), false);
  std::vector<int> image(t2.framework.n() + 1, 0);
  for (int v = 1; v <= t2.framework.n(); ++v) {
    const Vector& p = t2.framework.config.at(v);
    for (std::size_t k = 0; k < t1.framework.config.points.size(); ++k)
      if (!claimed[k] && points[k] == p) {
        claimed[k] = true;
        image[v] = static_cast<int>(k) + 1;
        break;
      }
    if (!image[v]) {
      points.push_back(p);
      claimed.push_back(true);
      image[v] = static_cast<int>(points.size());
    }
  }

  Graph g(static_cast<int>(points.size()));
  for (const auto& e : t1.framework.graph.edge_set()) g.add_edge(e.a, e.b);
  for (const auto& e : t2.framework.graph.edge_set()) g.add_edge(image[e.a], image[e.b]);

  Stress w = Stress::zero(g);
  w += t1.stress;
  for (const auto& [e, t] : t2.stress.tensions()) w.add(Edge(image[e.a], image[e.b]), t);

  Tensegrity sum{Framework(std::move(g), Configuration(d, std::move(points))), std::move(w)};
  if (!is_self_stress(sum.framework, sum.stress)) throw std::runtime_error("sum of tensegrities is not in equilibrium");
  return sum;
}

bool affinely_independent(const std::vector<Vector>& points, int d) {
  if (points.empty()) return true;
  std::vector<Vector> rows;
  for (const auto& p : points) {
    Vector r = p;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rank(rows, static_cast<std::size_t>(d) + 1) == points.size();
}

bool general_position(const Configuration& c) {
  const int k = c.d + 1;
  const int n = c.size();
  if (n < k) return affinely_independent(c.points, c.d);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Matrix m(k, k);
    for (int r = 0; r < k; ++r) {
      for (int s = 0; s < c.d; ++s) m(r, s) = c.points[idx[r]][s];
      m(r, c.d) = 1;
    }
    if (sgn(det(m)) == 0) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tensegrity
