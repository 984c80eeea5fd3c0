#include <doctest.h>

#include "tensegrity/exact_math.hpp"
#include "tensegrity/random.hpp"

#include <stdexcept>

using namespace tensegrity;

namespace {

Matrix random_matrix(Lcg64& rng, std::size_t r, std::size_t c, long range) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(rng.uniform(-range, range), rng.uniform(1, 3));
  return m;
}

// Cofactor expansion along the first row.
Rational laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Homogeneous strict system {a.x > 0} after eliminating equalities by
// substitution, decided by Fourier-Motzkin elimination.
bool fm_feasible(std::size_t k, std::vector<Vector> eqs, std::vector<Vector> strict) {
  for (auto& e : eqs) {
    std::size_t piv = 0;
    while (piv < k && sgn(e[piv]) == 0) ++piv;
    if (piv == k) continue;
    auto substitute = [&](Vector& row) {
      if (sgn(row[piv]) == 0) return;
      const Rational f = row[piv] / e[piv];
      for (std::size_t j = 0; j < k; ++j) row[j] -= f * e[j];
    };
    for (auto& other : eqs)
      if (&other != &e) substitute(other);
    for (auto& s : strict) substitute(s);
  }
  for (std::size_t var = 0; var < k; ++var) {
    std::vector<Vector> pos, neg, zero;
    for (auto& s : strict) {
      const int sg = sgn(s[var]);
      (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(s);
    }
    std::vector<Vector> next = zero;
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Vector row(k);
        const Rational a = -n[var], b = p[var];
        for (std::size_t j = 0; j < k; ++j) row[j] = a * p[j] + b * n[j];
        next.push_back(row);
      }
    strict = std::move(next);
  }
  // Only constant rows remain; "0 > 0" is false.
  return strict.empty();
}

Vector random_row(Lcg64& rng, std::size_t k, long range) {
  Vector v(k);
  for (auto& x : v) x = rng.uniform(-range, range);
  return v;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6") == 6);
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("+4/2") == 2);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK_THROWS_WITH_AS(parse_rational("1.5"), doctest::Contains("floating point forbidden"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_rational("1e3"), doctest::Contains("floating point forbidden"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_rational("1/0"), doctest::Contains("zero denominator"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays canonical") {
  const Rational a = make_rational(2, 4);
  CHECK(a.get_num() == 1);
  CHECK(a.get_den() == 2);
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("reduced echelon form and rank") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ef = reduced_echelon(m);
  CHECK(ef.pivots == std::vector<std::size_t>{0, 1});
  CHECK(ef.reduced(0, 0) == 1);
  CHECK(ef.reduced(0, 1) == 0);
  CHECK(ef.reduced(1, 1) == 1);
  CHECK(ef.reduced(2, 2) == 0);
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix(0, 3)) == 0);
  CHECK(rank(Matrix(3, 0)) == 0);
}

TEST_CASE("nullspace vectors are annihilated and count matches rank-nullity") {
  Lcg64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 7);
    Matrix m = random_matrix(rng, r, c, 4);
    if (trial % 3 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    const auto ns = nullspace(m);
    CHECK(ns.size() == c - rank(m));
    for (const auto& v : ns) CHECK(is_zero(m.multiply(v)));
    CHECK(rank(ns, c) == ns.size());
  }
}

TEST_CASE("nullspace convention: free variable set to one") {
  const Matrix m{{1, 1, 0}, {0, 0, 1}};
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{-1, 1, 0});
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Lcg64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.uniform(1, 5);
    Matrix m = random_matrix(rng, n, n, 5);
    if (trial % 5 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j);
    CHECK(det(m) == laplace_det(m));
  }
  CHECK_THROWS_AS(det(Matrix(2, 3)), std::invalid_argument);
  CHECK(det(Matrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("simplex from the origin") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  const Matrix a{{1, 2}, {3, 1}};
  const auto sol = maximize_from_origin(a, {4, 6}, {1, 1});
  CHECK(sol.bounded);
  CHECK(sol.objective == make_rational(14, 5));
  CHECK(sol.primal == Vector{make_rational(8, 5), make_rational(6, 5)});
  // Dual feasibility and strong duality.
  CHECK(sol.dual[0] * 4 + sol.dual[1] * 6 == sol.objective);
  for (std::size_t j = 0; j < 2; ++j) CHECK(sol.dual[0] * a(0, j) + sol.dual[1] * a(1, j) >= 1);

  const auto unbounded = maximize_from_origin(Matrix{{1, -1}}, {1}, {0, 1});
  CHECK_FALSE(unbounded.bounded);
}

TEST_CASE("cell feasibility matches Fourier-Motzkin on random systems") {
  Lcg64 rng(2024);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CellSpec cell;
    cell.ambient_dim = rng.uniform(1, 3);
    const std::size_t k = cell.ambient_dim;
    const int ne = rng.uniform(0, 1), np = rng.uniform(0, 3), nn = rng.uniform(0, 2);
    for (int i = 0; i < ne; ++i) cell.equalities.push_back(random_row(rng, k, 2));
    for (int i = 0; i < np; ++i) cell.positives.push_back(random_row(rng, k, 2));
    for (int i = 0; i < nn; ++i) cell.negatives.push_back(random_row(rng, k, 2));

    std::vector<Vector> strict = cell.positives;
    for (auto n : cell.negatives) {
      for (auto& x : n) x = -x;
      strict.push_back(n);
    }
    const bool oracle = fm_feasible(k, cell.equalities, strict);
    const CellResult r = cell_feasible_dim(cell);
    CHECK(r.feasible == oracle);
    if (r.feasible) {
      ++feasible;
      for (const auto& e : cell.equalities) CHECK(sgn(dot(e, r.witness)) == 0);
      for (const auto& p : cell.positives) CHECK(sgn(dot(p, r.witness)) > 0);
      for (const auto& n : cell.negatives) CHECK(sgn(dot(n, r.witness)) < 0);
      REQUIRE(r.dim);
      CHECK(*r.dim == k - rank(cell.equalities, k));
    } else {
      ++infeasible;
      // Motzkin certificate: sum eq_w E + sum pos_w P - sum neg_w N = 0 with
      // nonnegative strict weights, not all zero.
      Vector total(k);
      Rational strict_sum = 0;
      for (std::size_t i = 0; i < cell.equalities.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) total[j] += r.equality_weights[i] * cell.equalities[i][j];
      for (std::size_t i = 0; i < cell.positives.size(); ++i) {
        CHECK(r.positive_weights[i] >= 0);
        strict_sum += r.positive_weights[i];
        for (std::size_t j = 0; j < k; ++j) total[j] += r.positive_weights[i] * cell.positives[i][j];
      }
      for (std::size_t i = 0; i < cell.negatives.size(); ++i) {
        CHECK(r.negative_weights[i] >= 0);
        strict_sum += r.negative_weights[i];
        for (std::size_t j = 0; j < k; ++j) total[j] -= r.negative_weights[i] * cell.negatives[i][j];
      }
      CHECK(is_zero(total));
      CHECK(strict_sum > 0);
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 20);
}

TEST_CASE("cell witnesses survive sampling near the witness") {
  // x > 0, y > 0, x - y < 0 in R^2: open wedge of dimension 2.
  CellSpec cell{2, {}, {{1, 0}, {0, 1}}, {{1, -1}}};
  const auto r = cell_feasible_dim(cell);
  REQUIRE(r.feasible);
  CHECK(*r.dim == 2);
  // Equalities cut the span: x = y with x > 0 is a ray.
  CellSpec ray{2, {{1, -1}}, {{1, 0}}, {}};
  const auto rr = cell_feasible_dim(ray);
  REQUIRE(rr.feasible);
  CHECK(*rr.dim == 1);
  // Only the zero cone: no strict constraints, full rank equalities.
  CellSpec origin{2, {{1, 0}, {0, 1}}, {}, {}};
  const auto ro = cell_feasible_dim(origin);
  CHECK(ro.feasible);
  CHECK(*ro.dim == 0);
  CHECK(is_zero(ro.witness));
}
