#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "leibdef/matrix.hpp"

namespace leibdef {

struct LeibnizViolation {
  int x = 0, y = 0, z = 0;  // basis indices of the witness triple
  Vec lhs, rhs;             // [x,[y,z]] and [[x,y],z] - [[x,z],y]
};

/* Finite-dimensional algebra with a bilinear bracket given by structure
   constants c[i][j] = coefficient vector of [e_i, e_j]. Nothing here
   assumes the bracket identity holds; verify_leibniz checks it. */
class LeibnizAlgebra {
public:
  explicit LeibnizAlgebra(int dim) : n_(dim) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
    c_.assign(size_t(n_), std::vector<Vec>(size_t(n_), Vec(size_t(n_))));
  }

  int dim() const { return n_; }

  void set_bracket(int i, int j, Vec value) {
    check_index(i); check_index(j);
    if (int(value.size()) != n_) throw std::invalid_argument("bracket value length mismatch");
    c_[i][j] = std::move(value);
  }

  const Vec& bracket_basis(int i, int j) const { return c_[i][j]; }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (int(x.size()) != n_ || int(y.size()) != n_) throw std::invalid_argument("bracket operand length mismatch");
    Vec out(n_);
    for (int i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        Rational f = x[i] * y[j];
        for (int k = 0; k < n_; ++k)
          if (!c_[i][j][k].is_zero()) out[k] += f * c_[i][j][k];
      }
    }
    return out;
  }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("basis index out of range");
  }

  int n_;
  std::vector<std::vector<Vec>> c_;
};

/* Checks [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples; returns the
   first failing triple in lexicographic order, or nullopt when the identity
   holds. Bilinearity makes the basis check sufficient. */
inline std::optional<LeibnizViolation> verify_leibniz(const LeibnizAlgebra& alg) {
  int n = alg.dim();
  auto unit = [n](int i) { Vec v(n); v[i] = Rational(1); return v; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec lhs = alg.bracket(unit(x), alg.bracket(unit(y), unit(z)));
        Vec inner = alg.bracket(alg.bracket(unit(x), unit(y)), unit(z));
        Vec other = alg.bracket(alg.bracket(unit(x), unit(z)), unit(y));
        Vec rhs(n);
        bool bad = false;
        for (int k = 0; k < n; ++k) {
          rhs[k] = inner[k] - other[k];
          if (lhs[k] != rhs[k]) bad = true;
        }
        if (bad) return LeibnizViolation{x, y, z, std::move(lhs), std::move(rhs)};
      }
  return std::nullopt;
}

/* Two-sided module over a Leibniz algebra: left[i][a] holds [e_i, f_a] and
   right[a][i] holds [f_a, e_i], both as coefficient vectors in the module
   basis f_1..f_m. */
class Representation {
public:
  Representation(int algebra_dim, int module_dim) : n_(algebra_dim), m_(module_dim) {
    if (n_ < 1 || m_ < 1) throw std::invalid_argument("representation dimensions must be positive");
    left_.assign(size_t(n_), std::vector<Vec>(size_t(m_), Vec(size_t(m_))));
    right_.assign(size_t(m_), std::vector<Vec>(size_t(n_), Vec(size_t(m_))));
  }

  int algebra_dim() const { return n_; }
  int module_dim() const { return m_; }

  void set_left(int i, int a, Vec v) { left_[check(i, n_)][check(a, m_)] = checked_vec(std::move(v)); }
  void set_right(int a, int i, Vec v) { right_[check(a, m_)][check(i, n_)] = checked_vec(std::move(v)); }

  const Vec& left_basis(int i, int a) const { return left_[i][a]; }
  const Vec& right_basis(int a, int i) const { return right_[a][i]; }

  /* [e_i, v] for a module vector v. */
  Vec left(int i, const Vec& v) const {
    Vec out(m_);
    for (int a = 0; a < m_; ++a) {
      if (v[a].is_zero()) continue;
      for (int b = 0; b < m_; ++b)
        if (!left_[i][a][b].is_zero()) out[b] += v[a] * left_[i][a][b];
    }
    return out;
  }

  /* [v, e_i] for a module vector v. */
  Vec right(const Vec& v, int i) const {
    Vec out(m_);
    for (int a = 0; a < m_; ++a) {
      if (v[a].is_zero()) continue;
      for (int b = 0; b < m_; ++b)
        if (!right_[a][i][b].is_zero()) out[b] += v[a] * right_[a][i][b];
    }
    return out;
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

private:
  static int check(int i, int bound) {
    if (i < 0 || i >= bound) throw std::invalid_argument("representation index out of range");
    return i;
  }
  Vec checked_vec(Vec v) const {
    if (int(v.size()) != m_) throw std::invalid_argument("representation value length mismatch");
    return v;
  }

  int n_, m_;
  std::vector<std::vector<Vec>> left_;   // left_[i][a] = [e_i, f_a]
  std::vector<std::vector<Vec>> right_;  // right_[a][i] = [f_a, e_i]
};

inline Representation adjoint(const LeibnizAlgebra& alg) {
  int n = alg.dim();
  Representation rep(n, n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      rep.set_left(i, a, alg.bracket_basis(i, a));
      rep.set_right(a, i, alg.bracket_basis(a, i));
    }
  return rep;
}

inline Representation zero_representation(const LeibnizAlgebra& alg, int module_dim) {
  return Representation(alg.dim(), module_dim);
}

struct RepresentationViolation {
  int identity = 0;  // 1, 2 or 3: module slot of the failing mixed identity
  int i = 0, j = 0, a = 0;
  Vec lhs, rhs;
};

/* The bracket identity with the module entry in each of the three slots:
     1: [f_a,[e_i,e_j]] = [[f_a,e_i],e_j] - [[f_a,e_j],e_i]
     2: [e_i,[f_a,e_j]] = [[e_i,f_a],e_j] - [[e_i,e_j],f_a]
     3: [e_i,[e_j,f_a]] = [[e_i,e_j],f_a] - [[e_i,f_a],e_j]
   Checked on all basis combinations. */
inline std::optional<RepresentationViolation> verify_representation(const LeibnizAlgebra& alg,
                                                                    const Representation& rep) {
  if (rep.algebra_dim() != alg.dim()) throw std::invalid_argument("representation built over a different dimension");
  int n = alg.dim(), m = rep.module_dim();
  auto unit_m = [m](int a) { Vec v(m); v[a] = Rational(1); return v; };
  auto left_by = [&](const Vec& coeffs, const Vec& v) {  // [sum coeffs_i e_i, v]
    Vec out(m);
    for (int i = 0; i < n; ++i) {
      if (coeffs[i].is_zero()) continue;
      Vec t = rep.left(i, v);
      for (int b = 0; b < m; ++b) out[b] += coeffs[i] * t[b];
    }
    return out;
  };
  auto sub = [m](Vec x, const Vec& y) {
    for (int b = 0; b < m; ++b) x[b] -= y[b];
    return x;
  };
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec fa = unit_m(a);
        {
          Vec lhs(m);
          const Vec& br = alg.bracket_basis(i, j);
          for (int k = 0; k < n; ++k)
            if (!br[k].is_zero()) {
              Vec t = rep.right(fa, k);
              for (int b = 0; b < m; ++b) lhs[b] += br[k] * t[b];
            }
          Vec rhs = sub(rep.right(rep.right(fa, i), j), rep.right(rep.right(fa, j), i));
          if (lhs != rhs) return RepresentationViolation{1, i, j, a, std::move(lhs), std::move(rhs)};
        }
        {
          Vec lhs = rep.left(i, rep.right(fa, j));
          Vec rhs = sub(rep.right(rep.left(i, fa), j), left_by(alg.bracket_basis(i, j), fa));
          if (lhs != rhs) return RepresentationViolation{2, i, j, a, std::move(lhs), std::move(rhs)};
        }
        {
          Vec lhs = rep.left(i, rep.left(j, fa));
          Vec rhs = sub(left_by(alg.bracket_basis(i, j), fa), rep.right(rep.left(i, fa), j));
          if (lhs != rhs) return RepresentationViolation{3, i, j, a, std::move(lhs), std::move(rhs)};
        }
      }
  return std::nullopt;
}

}  // namespace leibdef
