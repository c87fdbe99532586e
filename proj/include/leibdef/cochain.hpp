#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "leibdef/leibniz_algebra.hpp"
#include "leibdef/matrix.hpp"

namespace leibdef {

inline std::size_t pow_size(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= std::size_t(base);
  return r;
}

/* Multilinear map L^q -> M stored densely on basis tuples: the value of
   f(e_{i_1},...,e_{i_q}) is the m-vector at flat offset
   ((i_1 n + i_2) n + ...) m, with the module coordinate fastest. A 0-cochain
   is a single module vector. */
class Cochain {
public:
  Cochain(int q, int n, int m)
      : q_(q), n_(n), m_(m), coeffs_(pow_size(n, q) * std::size_t(m)) {
    if (q < 0 || n < 1 || m < 1) throw std::invalid_argument("bad cochain shape");
  }

  static Cochain from_flat(int q, int n, int m, Vec flat) {
    Cochain f(q, n, m);
    if (flat.size() != f.coeffs_.size()) throw std::invalid_argument("cochain flat length mismatch");
    f.coeffs_ = std::move(flat);
    return f;
  }

  static Cochain basis_element(int q, int n, int m, std::size_t flat_index) {
    Cochain f(q, n, m);
    f.coeffs_.at(flat_index) = Rational(1);
    return f;
  }

  int degree() const { return q_; }
  int algebra_dim() const { return n_; }
  int module_dim() const { return m_; }
  const Vec& flat() const { return coeffs_; }
  std::size_t flat_size() const { return coeffs_.size(); }

  std::size_t tuple_offset(const std::vector<int>& idx) const {
    if (int(idx.size()) != q_) throw std::invalid_argument("cochain arity mismatch");
    std::size_t off = 0;
    for (int t = 0; t < q_; ++t) {
      if (idx[t] < 0 || idx[t] >= n_) throw std::invalid_argument("cochain index out of range");
      off = off * n_ + std::size_t(idx[t]);
    }
    return off * m_;
  }

  Rational& at(const std::vector<int>& idx, int b) { return coeffs_[tuple_offset(idx) + b]; }
  const Rational& at(const std::vector<int>& idx, int b) const { return coeffs_[tuple_offset(idx) + b]; }

  /* Value on a basis tuple as a module vector. */
  Vec eval(const std::vector<int>& idx) const {
    std::size_t off = tuple_offset(idx);
    return Vec(coeffs_.begin() + off, coeffs_.begin() + off + m_);
  }

  bool is_zero() const {
    for (const auto& x : coeffs_) if (!x.is_zero()) return false;
    return true;
  }

  Cochain& operator+=(const Cochain& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cochain& scale(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }

private:
  void require_same_shape(const Cochain& o) const {
    if (q_ != o.q_ || n_ != o.n_ || m_ != o.m_) throw std::invalid_argument("cochain shape mismatch");
  }

  int q_, n_, m_;
  Vec coeffs_;
};

namespace detail {
inline bool next_tuple(std::vector<int>& idx, int n) {
  for (int t = int(idx.size()) - 1; t >= 0; --t) {
    if (++idx[t] < n) return true;
    idx[t] = 0;
  }
  return false;
}
}  // namespace detail

/* Coboundary of a q-cochain, evaluated on x_1..x_{q+1} as
     [x_1, f(x_2,...)]
   + sum_{i=2}^{q+1} (-1)^i [f(...without x_i...), x_i]
   + sum_{i<j} (-1)^{j+1} f(x_1,...,x_{i-1},[x_i,x_j],x_{i+1},...without x_j...).
   Signs and slot placement follow this expansion literally; d(d f) = 0 is
   covered by the tests rather than assumed. */
inline Cochain coboundary(const LeibnizAlgebra& alg, const Representation& rep, const Cochain& f) {
  int q = f.degree(), n = f.algebra_dim(), m = f.module_dim();
  if (alg.dim() != n || rep.algebra_dim() != n || rep.module_dim() != m)
    throw std::invalid_argument("coboundary: cochain shape does not match algebra/representation");
  Cochain out(q + 1, n, m);
  std::vector<int> xs(q + 1, 0);
  std::vector<int> sub(q);
  do {
    Vec acc(m);
    // [x_1, f(x_2..x_{q+1})]
    for (int t = 0; t < q; ++t) sub[t] = xs[t + 1];
    {
      Vec v = rep.left(xs[0], f.eval(sub));
      for (int b = 0; b < m; ++b) acc[b] += v[b];
    }
    // (-1)^i [f(x_1..^x_i..x_{q+1}), x_i],  i = 2..q+1
    for (int i = 2; i <= q + 1; ++i) {
      int pos = 0;
      for (int t = 0; t < q + 1; ++t)
        if (t != i - 1) sub[pos++] = xs[t];
      Vec v = rep.right(f.eval(sub), xs[i - 1]);
      if (i % 2 == 0)
        for (int b = 0; b < m; ++b) acc[b] += v[b];
      else
        for (int b = 0; b < m; ++b) acc[b] -= v[b];
    }
    // (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..^x_j..),  1 <= i < j <= q+1
    for (int i = 1; i <= q; ++i)
      for (int j = i + 1; j <= q + 1; ++j) {
        const Vec& br = alg.bracket_basis(xs[i - 1], xs[j - 1]);
        bool plus = (j + 1) % 2 == 0;
        for (int k = 0; k < n; ++k) {
          if (br[k].is_zero()) continue;
          int pos = 0;
          for (int t = 0; t < q + 1; ++t) {
            if (t == j - 1) continue;
            sub[pos++] = (t == i - 1) ? k : xs[t];
          }
          Vec v = f.eval(sub);
          for (int b = 0; b < m; ++b) {
            Rational term = br[k] * v[b];
            if (plus) acc[b] += term; else acc[b] -= term;
          }
        }
      }
    for (int b = 0; b < m; ++b) out.at(xs, b) = std::move(acc[b]);
  } while (detail::next_tuple(xs, n));
  return out;
}

inline Matrix coboundary_matrix(const LeibnizAlgebra& alg, const Representation& rep, int q) {
  int n = alg.dim(), m = rep.module_dim();
  std::size_t dom = pow_size(n, q) * std::size_t(m);
  std::size_t cod = pow_size(n, q + 1) * std::size_t(m);
  Matrix mat{int(cod), int(dom)};
  for (std::size_t c = 0; c < dom; ++c) {
    Cochain img = coboundary(alg, rep, Cochain::basis_element(q, n, m, c));
    const Vec& flat = img.flat();
    for (std::size_t r = 0; r < cod; ++r)
      if (!flat[r].is_zero()) mat.at(int(r), int(c)) = flat[r];
  }
  return mat;
}

inline bool is_cocycle(const LeibnizAlgebra& alg, const Representation& rep, const Cochain& f) {
  return coboundary(alg, rep, f).is_zero();
}

/* Preimage under the coboundary: some f with d f = g, free coordinates zero,
   or nullopt when g is not a coboundary. */
inline std::optional<Cochain> solve_coboundary(const LeibnizAlgebra& alg, const Representation& rep,
                                               const Cochain& g) {
  if (g.degree() < 1) throw std::invalid_argument("solve_coboundary needs degree >= 1");
  Matrix d = coboundary_matrix(alg, rep, g.degree() - 1);
  auto x = solve(d, g.flat());
  if (!x) return std::nullopt;
  return Cochain::from_flat(g.degree() - 1, g.algebra_dim(), g.module_dim(), std::move(*x));
}

/* Cocycles, coboundaries and chosen representatives in one degree. The
   representatives extend the coboundary space greedily by the earliest
   echelon basis vectors of the cocycle space, so they are reproducible. */
class CohomologyData {
public:
  CohomologyData(int degree, Subspace cocycles, Subspace coboundaries,
                 std::vector<Cochain> reps, Matrix lower)
      : degree_(degree), cocycles_(std::move(cocycles)), coboundaries_(std::move(coboundaries)),
        representatives_(std::move(reps)), lower_(std::move(lower)) {}

  int degree() const { return degree_; }
  int betti() const { return int(representatives_.size()); }
  const Subspace& cocycle_space() const { return cocycles_; }
  const Subspace& coboundary_space() const { return coboundaries_; }
  const std::vector<Cochain>& representatives() const { return representatives_; }

  bool is_cocycle_vec(const Vec& flat) const { return cocycles_.contains(flat); }

  /* Coordinates of the class of f in the chosen representatives. The
     decomposition f = sum c_i mu_i + d(rho) fixes c uniquely because the
     representatives are independent modulo coboundaries. */
  Vec class_of(const Cochain& f) const {
    if (!cocycles_.contains(f.flat())) throw std::invalid_argument("class_of: not a cocycle");
    int nreps = betti();
    std::size_t rows = f.flat_size();
    Matrix sys(int(rows), nreps + lower_.cols());
    for (int j = 0; j < nreps; ++j) {
      const Vec& r = representatives_[j].flat();
      for (std::size_t i = 0; i < rows; ++i)
        if (!r[i].is_zero()) sys.at(int(i), j) = r[i];
    }
    for (int j = 0; j < lower_.cols(); ++j)
      for (int i = 0; i < int(rows); ++i)
        if (!lower_.at(i, j).is_zero()) sys.at(i, nreps + j) = lower_.at(i, j);
    auto sol = solve(sys, f.flat());
    if (!sol) throw std::logic_error("class_of: cocycle failed to decompose");  // cannot happen
    return Vec(sol->begin(), sol->begin() + nreps);
  }

private:
  int degree_;
  Subspace cocycles_;
  Subspace coboundaries_;
  std::vector<Cochain> representatives_;
  Matrix lower_;  // coboundary matrix one degree down
};

inline CohomologyData cohomology(const LeibnizAlgebra& alg, const Representation& rep, int q) {
  if (q < 0) throw std::invalid_argument("cohomology degree must be >= 0");
  int n = alg.dim(), m = rep.module_dim();
  Subspace z = nullspace(coboundary_matrix(alg, rep, q));
  Matrix lower = q == 0 ? Matrix(int(pow_size(n, 0) * std::size_t(m)), 0)
                        : coboundary_matrix(alg, rep, q - 1);
  Subspace b = q == 0 ? Subspace(int(z.ambient())) : column_space(lower);
  std::vector<Cochain> reps;
  for (Vec& v : quotient_basis(b, z)) reps.push_back(Cochain::from_flat(q, n, m, std::move(v)));
  return CohomologyData(q, std::move(z), std::move(b), std::move(reps), std::move(lower));
}

}  // namespace leibdef
