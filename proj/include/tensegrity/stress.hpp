#pragma once

#include "tensegrity/exact_math.hpp"
#include "tensegrity/graph.hpp"

#include <compare>
#include <map>
#include <vector>

namespace tensegrity {

/// Ordered point configuration in R^d.
struct Configuration {
  int d = 0;
  std::vector<Vector> points;

  Configuration() = default;
  /// Throws std::invalid_argument when a point has the wrong arity.
  Configuration(int dim, std::vector<Vector> pts);

  int size() const { return static_cast<int>(points.size()); }
  /// 1-based access, matching vertex labels.
  const Vector& at(int v) const { return points.at(v - 1); }
};

struct Framework {
  Graph graph;
  Configuration config;

  Framework() = default;
  /// Throws std::invalid_argument unless graph and configuration sizes agree.
  Framework(Graph g, Configuration c);

  int d() const { return config.d; }
  int n() const { return graph.vertex_count(); }
};

/// Tensions keyed by edge. Missing keys read as zero.
class Stress {
 public:
  Stress() = default;
  explicit Stress(std::map<Edge, Rational> tensions) : tensions_(std::move(tensions)) {}
  /// Zero stress on every edge of g.
  static Stress zero(const Graph& g);
  static Stress from_vector(const std::vector<Edge>& order, const Vector& values);

  Rational get(Edge e) const;
  void set(Edge e, Rational value) { tensions_[e] = std::move(value); }
  void add(Edge e, const Rational& value) { tensions_[e] += value; }
  void erase(Edge e) { tensions_.erase(e); }
  bool has(Edge e) const { return tensions_.contains(e); }

  const std::map<Edge, Rational>& tensions() const { return tensions_; }
  Vector to_vector(const std::vector<Edge>& order) const;
  bool is_zero() const;
  /// Keys exactly equal to the edges of g.
  bool keyed_by(const Graph& g) const;

  Stress scaled(const Rational& factor) const;
  Stress& operator+=(const Stress& other);
  Stress operator-() const { return scaled(-1); }

  /// Entry-by-entry equality where absent keys count as zero.
  bool same_values(const Stress& other) const;
  bool operator==(const Stress&) const = default;

 private:
  std::map<Edge, Rational> tensions_;
};

Stress operator+(Stress a, const Stress& b);

struct Tensegrity {
  Framework framework;
  Stress stress;
};

/// Rows 0..d-1 belong to vertex 1, the next d to vertex 2, and so on.
/// The column of edge {i,j} carries p_j - p_i on the rows of i and
/// p_i - p_j on the rows of j. Columns follow graph.edges().
Matrix equilibrium_matrix(const Framework& f);

struct SelfStressSpace {
  Framework framework;
  std::vector<Edge> edge_order;
  std::vector<Stress> basis;

  std::size_t dim() const { return basis.size(); }
  /// Basis vectors as coordinate rows in edge_order.
  std::vector<Vector> basis_vectors() const;
  /// sum coeffs[k] * basis[k].
  Stress combination(const Vector& coeffs) const;
};

SelfStressSpace self_stress_space(const Framework& f);
std::size_t self_stress_dim(const Framework& f);

/// Vector residual sum_j w_ij (p_j - p_i) at each vertex (index v-1).
/// Throws std::invalid_argument if w has a key that is not an edge of f.
std::vector<Vector> verify_self_stress(const Framework& f, const Stress& w);
bool is_self_stress(const Framework& f, const Stress& w);

/// Strut-cable matrix, stored on edges only; non-edges read as 0.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(int n) : n_(n) {}
  SignMatrix(int n, std::map<Edge, int> entries);

  int n() const { return n_; }
  int at(int i, int j) const;
  const std::map<Edge, int>& entries() const { return entries_; }
  std::vector<int> to_vector(const std::vector<Edge>& order) const;
  SignMatrix negated() const;

  bool operator==(const SignMatrix&) const = default;
  // Lexicographic on entries (i,j), i<j, with -1 < 0 < +1.
  std::strong_ordering operator<=>(const SignMatrix& o) const;

 private:
  int n_ = 0;
  std::map<Edge, int> entries_;
};

SignMatrix sign_matrix(const Stress& w, int n);

/// Union of two tensegrities; vertices are identified by exact coordinate
/// equality and tensions on shared edges add. Throws std::runtime_error if
/// the sum fails the equilibrium check (an input was not a self-stress).
Tensegrity add_tensegrities(const Tensegrity& t1, const Tensegrity& t2);

/// No d+1 points lie on a common affine hyperplane. With fewer than d+1
/// points this asks that the points be affinely independent.
bool general_position(const Configuration& c);
bool affinely_independent(const std::vector<Vector>& points, int d);

}  // namespace tensegrity
