#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "leibdef/rational.hpp"

namespace leibdef {

using Vec = std::vector<Rational>;

/* Dense rational matrix, row-major. Shapes with zero rows or columns are
   legal and behave (empty products are zero matrices of the right shape). */
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  static Matrix from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (int(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
      for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const { return Vec(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_); }
  Vec col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
      }
    return out;
  }

  Vec apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_) if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
  int rank() const { return int(pivots.size()); }
};

/* Reduced row echelon form by exact Gauss-Jordan. Pivot choice is the first
   row with a nonzero entry in the current column, so the result is unique
   and runs are reproducible. */
inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return rref(m).rank(); }

/* Subspace of K^ambient in canonical form: the basis rows are the reduced
   echelon basis with strictly increasing pivots. Two subspaces are equal as
   sets exactly when their stored data compare equal. */
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {
    if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
    basis_ = Matrix(0, ambient);
  }

  static Subspace span(int ambient, const std::vector<Vec>& vectors) {
    RrefResult r = rref(Matrix::from_rows(ambient, vectors));
    Subspace s(ambient);
    Matrix b(r.rank(), ambient);
    for (int i = 0; i < r.rank(); ++i)
      for (int j = 0; j < ambient; ++j) b.at(i, j) = r.mat.at(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace full(int ambient) { return span(ambient, rows_of(Matrix::identity(ambient))); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  /* Subtracts the unique combination of basis rows matching v on the pivot
     coordinates; the remainder is zero iff v lies in the subspace. */
  Vec reduce(Vec v) const {
    if (int(v.size()) != ambient_) throw std::invalid_argument("reduce: ambient mismatch");
    for (int i = 0; i < dim(); ++i) {
      const Rational& f = v[pivots_[i]];
      if (f.is_zero()) continue;
      Rational c = f;
      for (int j = 0; j < ambient_; ++j)
        if (!basis_.at(i, j).is_zero()) v[j] -= c * basis_.at(i, j);
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& x : r) if (!x.is_zero()) return false;
    return true;
  }

  /* Coordinates of v in the basis rows; rejects vectors outside the space. */
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("coordinates: vector outside subspace");
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool encloses(const Subspace& o) const {
    if (o.ambient_ != ambient_) return false;
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (int i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
    return span(ambient_, rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  static std::vector<Vec> rows_of(const Matrix& m) {
    std::vector<Vec> out;
    for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
  }

private:
  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

/* Kernel {v : m v = 0} with canonical basis. */
inline Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Rational(1);
    for (int i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

/* Image of m as a subspace of K^rows. */
inline Subspace column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(m.rows(), cols);
}

/* One solution of m x = b, or nullopt if inconsistent. Free variables are
   set to zero, which fixes the returned solution uniquely. */
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  for (int i = 0; i < r.rank(); ++i)
    if (r.pivots[i] == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (int i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.mat.at(i, m.cols());
  return x;
}

/* Basis vectors of `within` extending a basis of `sub` to one of `within`,
   taken greedily in the canonical order of within's echelon basis. The
   returned vectors are basis rows of `within` itself. */
inline std::vector<Vec> quotient_basis(const Subspace& sub, const Subspace& within) {
  if (sub.ambient() != within.ambient() || !within.encloses(sub))
    throw std::invalid_argument("quotient_basis: sub is not contained in within");
  std::vector<Vec> work = Subspace::rows_of(sub.basis());
  Subspace acc = sub;
  std::vector<Vec> out;
  for (int i = 0; i < within.dim(); ++i) {
    Vec w = within.basis_vector(i);
    if (acc.contains(w)) continue;
    work.push_back(w);
    acc = Subspace::span(within.ambient(), work);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace leibdef
