#pragma once

#include <stdexcept>
#include <vector>

#include "leibdef/local_algebra.hpp"
#include "leibdef/matrix.hpp"

namespace leibdef {

/* Structure constants of a finite-dimensional commutative unital algebra
   over its chosen basis, plus the augmentation. Basis element 0 is the
   unit. Deliberately brute-force material: everything downstream of this
   table enumerates full tensor powers, so dimensions stay capped. */
struct MultiplicationTable {
  int dim = 0;
  std::vector<std::vector<Vec>> prod;  // prod[i][j], length dim
  Vec eps;                             // augmentation on basis elements
};

inline constexpr int kBruteForceDimCap = 6;
inline constexpr int kBruteForceDegreeCap = 3;

inline MultiplicationTable multiplication_table(const TruncatedLocalAlgebra& a) {
  if (a.dim() > kBruteForceDimCap)
    throw std::invalid_argument("algebra too large for the brute-force table");
  MultiplicationTable t;
  std::vector<Monomial> basis = a.basis();
  t.dim = int(basis.size());
  t.eps.assign(t.dim, Rational());
  t.eps[0] = Rational(1);
  t.prod.assign(t.dim, std::vector<Vec>(t.dim));
  // coordinates of a reduced element over the surviving monomials
  auto nf_coords = [&](const LocalElement& x) {
    Vec out;
    for (int d = 0; d <= a.order(); ++d)
      for (int idx : a.nf_indices(d)) out.push_back(x.degree_coords(d)[idx]);
    return out;
  };
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      t.prod[i][j] = nf_coords(a.monomial_element(basis[i]) * a.monomial_element(basis[j]));
  return t;
}

namespace detail {

/* (p, q-p) interleavings as index permutations with inversion signs. */
struct Shuffle {
  std::vector<int> perm;  // result slot -> source slot
  int sign = 1;
};

inline std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  std::vector<int> pick(p);
  // choose the result slots occupied by the first block, in order
  auto emit = [&]() {
    Shuffle s;
    s.perm.assign(q, -1);
    std::vector<bool> used(q, false);
    for (int i = 0; i < p; ++i) {
      s.perm[pick[i]] = i;
      used[pick[i]] = true;
    }
    int next = p;
    for (int t = 0; t < q; ++t)
      if (!used[t]) s.perm[t] = next++;
    int inv = 0;
    for (int x = 0; x < q; ++x)
      for (int y = x + 1; y < q; ++y)
        if (s.perm[x] > s.perm[y]) ++inv;
    s.sign = inv % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  };
  // iterate combinations lexicographically
  for (int i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    emit();
    int i = p - 1;
    while (i >= 0 && pick[i] == q - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

inline int tuple_flat(const std::vector<int>& tuple, int dim) {
  int idx = 0;
  for (int t : tuple) idx = idx * dim + t;
  return idx;
}

inline bool tuple_next(std::vector<int>& tuple, int dim) {
  for (int i = int(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < dim) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace detail

/* Cochains C^q = Hom(A^{tensor q}, M) with M a trivial module of the given
   dimension acting through the augmentation on both sides, flattened with
   the module coordinate fastest. Degree zero is M itself. */
inline long long brute_cochain_dim(const MultiplicationTable& t, int module_dim, int q) {
  long long d = module_dim;
  for (int i = 0; i < q; ++i) d *= t.dim;
  return d;
}

/* Matrix of the Hochschild coboundary C^q -> C^{q+1}. */
inline Matrix hochschild_matrix(const MultiplicationTable& t, int module_dim, int q) {
  int n = t.dim, m = module_dim;
  long long dom = brute_cochain_dim(t, m, q);
  long long cod = brute_cochain_dim(t, m, q + 1);
  Matrix out{int(cod), int(dom)};
  std::vector<int> tuple(q + 1, 0);
  // enumerate codomain tuples (a_1 .. a_{q+1}); for each, expand the formula
  do {
    long long row_base = detail::tuple_flat(tuple, n) * (long long)m;
    auto add = [&](const std::vector<int>& src, const Rational& coef, int b) {
      long long col = detail::tuple_flat(src, n) * (long long)m + b;
      out.at(int(row_base + b), int(col)) += coef;
    };
    // eps(a_1) f(a_2..a_{q+1})
    if (!t.eps[tuple[0]].is_zero()) {
      std::vector<int> rest(tuple.begin() + 1, tuple.end());
      for (int b = 0; b < m; ++b) add(rest, t.eps[tuple[0]], b);
    }
    // interior contractions with alternating signs
    for (int i = 0; i < q; ++i) {
      Rational sign(i % 2 == 0 ? -1 : 1);
      const Vec& pr = t.prod[tuple[i]][tuple[i + 1]];
      for (int k = 0; k < n; ++k) {
        if (pr[k].is_zero()) continue;
        std::vector<int> src;
        for (int s = 0; s < i; ++s) src.push_back(tuple[s]);
        src.push_back(k);
        for (int s = i + 2; s <= q; ++s) src.push_back(tuple[s]);
        for (int b = 0; b < m; ++b) add(src, sign * pr[k], b);
      }
    }
    // (-1)^{q+1} f(a_1..a_q) eps(a_{q+1})
    if (!t.eps[tuple[q]].is_zero()) {
      Rational sign(q % 2 == 0 ? -1 : 1);
      std::vector<int> head(tuple.begin(), tuple.end() - 1);
      for (int b = 0; b < m; ++b) add(head, sign * t.eps[tuple[q]], b);
    }
  } while (detail::tuple_next(tuple, n));
  return out;
}

/* Subspace of C^q killed by every signed (p, q-p) shuffle sum. For q <= 1
   there is no condition. */
inline Subspace shuffle_vanishing_subspace(const MultiplicationTable& t, int module_dim, int q) {
  int n = t.dim, m = module_dim;
  long long dim = brute_cochain_dim(t, m, q);
  if (q <= 1) return Subspace::full(int(dim));
  std::vector<Vec> rows;
  for (int p = 1; p < q; ++p) {
    auto shufs = detail::shuffles(p, q);
    std::vector<int> tuple(q, 0);
    do {
      for (int b = 0; b < m; ++b) {
        Vec row(dim);
        for (const auto& s : shufs) {
          std::vector<int> src(q);
          for (int slot = 0; slot < q; ++slot) src[slot] = tuple[s.perm[slot]];
          row[detail::tuple_flat(src, n) * (long long)m + b] += Rational(s.sign);
        }
        rows.push_back(std::move(row));
      }
    } while (detail::tuple_next(tuple, n));
  }
  Matrix constraints = Matrix::from_rows(int(dim), rows);
  return nullspace(constraints);
}

/* dim H^q for the subcomplex of shuffle-vanishing cochains, counted as
   dim ker(delta^q restricted to V^q) minus dim delta^{q-1}(V^{q-1}).
   Exhaustive over basis tuples, hence the hard caps. */
inline int harrison_betti_bruteforce(const MultiplicationTable& t, int module_dim, int q) {
  if (t.dim > kBruteForceDimCap) throw std::invalid_argument("dimension above brute-force cap");
  if (q < 1 || q > kBruteForceDegreeCap) throw std::invalid_argument("degree outside brute-force range");
  if (module_dim < 1) throw std::invalid_argument("module must be nonzero");

  Matrix dq = hochschild_matrix(t, module_dim, q);
  Subspace vq = shuffle_vanishing_subspace(t, module_dim, q);
  // delta on the restricted level: columns are images of vq's basis
  std::vector<Vec> restricted_cols;
  for (int i = 0; i < vq.dim(); ++i) restricted_cols.push_back(dq.apply(vq.basis_vector(i)));
  int restricted_rank = Subspace::span(dq.rows(), restricted_cols).dim();
  int restricted_kernel = vq.dim() - restricted_rank;

  Matrix dl = hochschild_matrix(t, module_dim, q - 1);
  Subspace vl = shuffle_vanishing_subspace(t, module_dim, q - 1);
  std::vector<Vec> image_gens;
  for (int i = 0; i < vl.dim(); ++i) image_gens.push_back(dl.apply(vl.basis_vector(i)));
  int image_dim = Subspace::span(dl.rows(), image_gens).dim();

  return restricted_kernel - image_dim;
}

}  // namespace leibdef
