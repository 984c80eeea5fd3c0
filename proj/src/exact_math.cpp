#include "tensegrity/exact_math.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace tensegrity {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.find_first_of(".eE") != std::string_view::npos)
    throw std::invalid_argument("floating point forbidden: \"" + std::string(text) + "\"");
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

EchelonForm reduced_echelon(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead_row);
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivots.size(); }

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vector> nullspace(const Matrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      m.swap_rows(pivot, c);
      result = -result;
    }
    result *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return result;
}

LpSolution maximize_from_origin(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("LP dimension mismatch");
  for (const auto& bi : b)
    if (sgn(bi) < 0) throw std::invalid_argument("LP right-hand side must be nonnegative");

  // Tableau columns: n structural, m slack, then rhs.
  const std::size_t width = n + m + 1;
  Matrix t(m + 1, width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) t(r, k) = a(r, k);
    t(r, n + r) = 1;
    t(r, width - 1) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) t(m, k) = -c[k];
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  LpSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t k = 0; k + 1 < width; ++k)
      if (sgn(t(m, k)) < 0) {
        enter = k;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t(r, enter)) <= 0) continue;
      Rational ratio = t(r, width - 1) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == m) {
      sol.bounded = false;
      return sol;
    }

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t k = 0; k < width; ++k) t(leave, k) *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || sgn(t(r, enter)) == 0) continue;
      const Rational factor = t(r, enter);
      for (std::size_t k = 0; k < width; ++k)
        if (sgn(t(leave, k)) != 0) t(r, k) -= factor * t(leave, k);
    }
    basis[leave] = enter;
  }

  sol.objective = t(m, width - 1);
  sol.primal.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.primal[basis[r]] = t(r, width - 1);
  sol.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) sol.dual[r] = t(m, n + r);
  return sol;
}

CellResult cell_feasible_dim(const CellSpec& cell) {
  const std::size_t n = cell.ambient_dim;
  auto check = [n](const std::vector<Vector>& fs) {
    for (const auto& f : fs)
      if (f.size() != n) throw std::invalid_argument("functional length differs from ambient dimension");
  };
  check(cell.equalities);
  check(cell.positives);
  check(cell.negatives);

  CellResult result;
  const std::size_t eq_rank = rank(cell.equalities, n);
  const std::size_t strict = cell.positives.size() + cell.negatives.size();
  if (strict == 0) {
    result.feasible = true;
    result.dim = n - eq_rank;
    result.witness.assign(n, 0);
    return result;
  }

  // Variables: x+ (n), x- (n), t. Rows: +E, -E, -P + t, N + t, t <= 1.
  const std::size_t neq = cell.equalities.size();
  const std::size_t rows = 2 * neq + strict + 1;
  const std::size_t cols = 2 * n + 1;
  Matrix a(rows, cols);
  Vector b(rows, 0);
  Vector c(cols, 0);
  c[2 * n] = 1;

  auto put = [&](std::size_t r, const Vector& f, int scale) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(f[k]) == 0) continue;
      a(r, k) = scale * f[k];
      a(r, n + k) = -scale * f[k];
    }
  };
  std::size_t r = 0;
  for (const auto& e : cell.equalities) put(r++, e, 1);
  for (const auto& e : cell.equalities) put(r++, e, -1);
  for (const auto& p : cell.positives) {
    put(r, p, -1);
    a(r++, 2 * n) = 1;
  }
  for (const auto& q : cell.negatives) {
    put(r, q, 1);
    a(r++, 2 * n) = 1;
  }
  a(r, 2 * n) = 1;
  b[r] = 1;

  LpSolution lp = maximize_from_origin(a, b, c);
  if (sgn(lp.objective) > 0) {
    result.feasible = true;
    result.dim = n - eq_rank;
    result.witness.resize(n);
    for (std::size_t k = 0; k < n; ++k) result.witness[k] = lp.primal[k] - lp.primal[n + k];
    return result;
  }

  result.equality_weights.resize(neq);
  for (std::size_t i = 0; i < neq; ++i) result.equality_weights[i] = lp.dual[neq + i] - lp.dual[i];
  std::size_t base = 2 * neq;
  for (std::size_t i = 0; i < cell.positives.size(); ++i) result.positive_weights.push_back(lp.dual[base + i]);
  base += cell.positives.size();
  for (std::size_t i = 0; i < cell.negatives.size(); ++i) result.negative_weights.push_back(lp.dual[base + i]);
  return result;
}

}  // namespace tensegrity
