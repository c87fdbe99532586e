#pragma once

#include <random>
#include <vector>

#include "leibdef/cochain.hpp"
#include "leibdef/leibniz_algebra.hpp"
#include "leibdef/matrix.hpp"

namespace testutil {

using leibdef::LeibnizAlgebra;
using leibdef::Matrix;
using leibdef::Rational;
using leibdef::Vec;

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int num_span = 4, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_span, num_span);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Vec rand_vec(Rng& rng, int len, int num_span = 4, int den_max = 3) {
  Vec v(len);
  for (auto& x : v) x = rand_rational(rng, num_span, den_max);
  return v;
}

inline Matrix rand_matrix(Rng& rng, int rows, int cols, int num_span = 4, int den_max = 3) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_rational(rng, num_span, den_max);
  return m;
}

/* Small integer matrix guaranteed invertible: identity plus a few random
   elementary row operations. */
inline Matrix rand_invertible(Rng& rng, int n) {
  Matrix p = Matrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  int ops = 2 * n + 2;
  for (int t = 0; t < ops; ++t) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Rational c(coef(rng));
    for (int k = 0; k < n; ++k) p.at(i, k) += c * p.at(j, k);
  }
  return p;
}

// ---- fixed small algebras ------------------------------------------------

inline LeibnizAlgebra abelian(int n) { return LeibnizAlgebra(n); }

/* [e2,e2] = e1, two-dimensional nilpotent, not Lie. */
inline LeibnizAlgebra nilp2() {
  LeibnizAlgebra a(2);
  a.set_bracket(1, 1, {Rational(1), Rational(0)});
  return a;
}

/* [e1,e2] = e1 = -[e2,e1], the non-abelian two-dimensional Lie algebra. */
inline LeibnizAlgebra r2() {
  LeibnizAlgebra a(2);
  a.set_bracket(0, 1, {Rational(1), Rational(0)});
  a.set_bracket(1, 0, {Rational(-1), Rational(0)});
  return a;
}

/* Heisenberg: [e1,e2] = e3 = -[e2,e1]. */
inline LeibnizAlgebra heis3() {
  LeibnizAlgebra a(3);
  a.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  a.set_bracket(1, 0, {Rational(0), Rational(0), Rational(-1)});
  return a;
}

/* sl2 with basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric. */
inline LeibnizAlgebra sl2() {
  LeibnizAlgebra a(3);
  auto v = [](int k, int c) { Vec out(3); out[k] = Rational(c); return out; };
  a.set_bracket(0, 1, v(2, 1));
  a.set_bracket(1, 0, v(2, -1));
  a.set_bracket(2, 0, v(0, 2));
  a.set_bracket(0, 2, v(0, -2));
  a.set_bracket(2, 1, v(1, -2));
  a.set_bracket(1, 2, v(1, 2));
  return a;
}

/* [e,e] = e fails the bracket identity on (e,e,e). */
inline LeibnizAlgebra nonleibniz1() {
  LeibnizAlgebra a(1);
  a.set_bracket(0, 0, {Rational(1)});
  return a;
}

/* Transports structure constants through the invertible change of basis p:
   the new basis is f_i = sum_a p[a][i] e_a. The result satisfies the bracket
   identity iff the input does. */
inline LeibnizAlgebra base_change(const LeibnizAlgebra& alg, const Matrix& p) {
  int n = alg.dim();
  Matrix pinv_m(n, n);
  {
    // invert p by solving p x = e_k column by column
    for (int k = 0; k < n; ++k) {
      Vec e(n);
      e[k] = Rational(1);
      auto col = leibdef::solve(p, e);
      if (!col) throw std::invalid_argument("base_change: matrix not invertible");
      for (int r = 0; r < n; ++r) pinv_m.at(r, k) = (*col)[r];
    }
  }
  LeibnizAlgebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec br = alg.bracket(p.col(i), p.col(j));  // in the old basis
      out.set_bracket(i, j, pinv_m.apply(br));
    }
  return out;
}

/* Random valid algebra of dimension <= 3: a known family padded with zero
   directions, pushed through a random change of basis. */
inline LeibnizAlgebra random_leibniz(Rng& rng, int max_dim = 3) {
  std::uniform_int_distribution<int> pick(0, 5);
  LeibnizAlgebra base = abelian(1);
  switch (pick(rng)) {
    case 0: base = abelian(1 + int(rng() % std::uint64_t(max_dim))); break;
    case 1: base = nilp2(); break;
    case 2: base = r2(); break;
    case 3: base = max_dim >= 3 ? heis3() : nilp2(); break;
    case 4: base = max_dim >= 3 ? sl2() : r2(); break;
    default: base = nilp2(); break;
  }
  // pad with abelian directions up to a random dimension <= max_dim
  int extra = 0;
  if (base.dim() < max_dim) extra = int(rng() % std::uint64_t(max_dim - base.dim() + 1));
  int n = base.dim() + extra;
  LeibnizAlgebra padded(n);
  for (int i = 0; i < base.dim(); ++i)
    for (int j = 0; j < base.dim(); ++j) {
      Vec v(n);
      const Vec& src = padded.bracket_basis(i, j);
      (void)src;
      const Vec& b = base.bracket_basis(i, j);
      for (int k = 0; k < base.dim(); ++k) v[k] = b[k];
      padded.set_bracket(i, j, v);
    }
  return base_change(padded, rand_invertible(rng, n));
}

inline leibdef::Cochain rand_cochain(Rng& rng, int q, int n, int m) {
  return leibdef::Cochain::from_flat(q, n, m,
                                     rand_vec(rng, int(leibdef::pow_size(n, q)) * m));
}

}  // namespace testutil
