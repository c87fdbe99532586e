#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "leibdef/cochain.hpp"
#include "leibdef/local_algebra.hpp"

namespace leibdef {

/* A surviving base monomial: degree plus index into the full monomial table
   of that degree. Ordered by degree, then table position, so iteration
   follows the monomial order used everywhere else. */
struct MonKey {
  int degree = 0;
  int index = 0;
  friend auto operator<=>(const MonKey&, const MonKey&) = default;
};

/* The original bracket packaged as a 2-cochain with adjoint values. */
inline Cochain bracket_cochain(const LeibnizAlgebra& alg) {
  int n = alg.dim();
  Cochain out(2, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& v = alg.bracket_basis(i, j);
      for (int b = 0; b < n; ++b) out.at({i, j}, b) = v[b];
    }
  return out;
}

/* Deformation of a Leibniz algebra over a truncated local base: the bracket
   on the extended scalars is the original one in degree zero plus one
   2-cochain per surviving base monomial of positive degree,
     [x, y] = [x, y]_0 + sum_m m . psi_m(x, y),
   extended bilinearly over the base. Zero cochains are not stored. */
class Deformation {
public:
  Deformation(LeibnizAlgebra algebra, TruncatedLocalAlgebra base,
              std::map<MonKey, Cochain> psi)
      : algebra_(std::move(algebra)), base_(std::move(base)) {
    int n = algebra_.dim();
    for (auto& [key, coch] : psi) {
      if (key.degree < 1 || key.degree > base_.order())
        throw std::invalid_argument("deformation coefficient outside the base");
      const auto& nf = base_.nf_indices(key.degree);
      if (std::find(nf.begin(), nf.end(), key.index) == nf.end())
        throw std::invalid_argument("deformation coefficient on a non-surviving monomial");
      if (coch.degree() != 2 || coch.algebra_dim() != n || coch.module_dim() != n)
        throw std::invalid_argument("deformation coefficient has the wrong shape");
      if (!coch.is_zero()) psi_.emplace(key, std::move(coch));
    }
  }

  const LeibnizAlgebra& algebra() const { return algebra_; }
  const TruncatedLocalAlgebra& base() const { return base_; }
  const std::map<MonKey, Cochain>& psi() const { return psi_; }

  /* Coefficient at one base monomial; zero when absent. */
  Cochain coefficient(const MonKey& key) const {
    auto it = psi_.find(key);
    if (it != psi_.end()) return it->second;
    return Cochain(2, algebra_.dim(), algebra_.dim());
  }

  /* The cochain attached to one degree-one variable direction. */
  Cochain direction_cochain(int v) const {
    if (base_.order() < 1 || v < 0 || v >= base_.num_vars())
      throw std::invalid_argument("no such degree-one direction");
    std::vector<int> e(base_.num_vars(), 0);
    e[v] = 1;
    return coefficient(MonKey{1, base_.monomial_index(1, e)});
  }

  friend bool operator==(const Deformation& a, const Deformation& b) {
    return a.algebra_ == b.algebra_ && a.base_.same_presentation(b.base_) && a.psi_ == b.psi_;
  }

private:
  LeibnizAlgebra algebra_;
  TruncatedLocalAlgebra base_;
  std::map<MonKey, Cochain> psi_;
};

namespace detail {

/* Element of base tensor algebra, stored by surviving monomial. Degree zero
   uses key {0, 0}. */
using Fibered = std::map<MonKey, Vec>;

struct DeformedBracket {
  const Deformation* def;
  /* product of two surviving monomials, reduced: list of (monomial, coeff) */
  std::map<std::pair<MonKey, MonKey>, std::vector<std::pair<MonKey, Rational>>> prods;

  explicit DeformedBracket(const Deformation& d) : def(&d) {
    const auto& base = d.base();
    std::vector<MonKey> keys;
    for (int deg = 0; deg <= base.order(); ++deg)
      for (int idx : base.nf_indices(deg)) keys.push_back(MonKey{deg, idx});
    for (const MonKey& a : keys)
      for (const MonKey& b : keys) {
        LocalElement p = base.monomial_element(base.monomial_table(a.degree)[a.index]) *
                         base.monomial_element(base.monomial_table(b.degree)[b.index]);
        std::vector<std::pair<MonKey, Rational>> terms;
        for (int deg = 0; deg <= base.order(); ++deg)
          for (int idx : base.nf_indices(deg))
            if (!p.degree_coords(deg)[idx].is_zero())
              terms.push_back({MonKey{deg, idx}, p.degree_coords(deg)[idx]});
        prods[{a, b}] = std::move(terms);
      }
  }

  void accumulate(Fibered& into, const MonKey& m, const Vec& v, const Rational& c) const {
    auto [it, fresh] = into.try_emplace(m, Vec(v.size()));
    for (size_t i = 0; i < v.size(); ++i) it->second[i] += c * v[i];
  }

  /* [e_x tensor 1, w] for a fibered w */
  Fibered bracket_left(int x, const Fibered& w) const {
    Fibered out;
    const LeibnizAlgebra& L = def->algebra();
    int n = L.dim();
    for (const auto& [m, vec] : w) {
      for (int j = 0; j < n; ++j) {
        if (vec[j].is_zero()) continue;
        accumulate(out, m, L.bracket_basis(x, j), vec[j]);
        for (const auto& [key, coch] : def->psi()) {
          const auto& terms = prods.at({m, key});
          if (terms.empty()) continue;
          Vec val = coch.eval({x, j});
          for (const auto& [mk, c] : terms) accumulate(out, mk, val, c * vec[j]);
        }
      }
    }
    return out;
  }

  /* [w, e_z tensor 1] for a fibered w */
  Fibered bracket_right(const Fibered& w, int z) const {
    Fibered out;
    const LeibnizAlgebra& L = def->algebra();
    int n = L.dim();
    for (const auto& [m, vec] : w) {
      for (int j = 0; j < n; ++j) {
        if (vec[j].is_zero()) continue;
        accumulate(out, m, L.bracket_basis(j, z), vec[j]);
        for (const auto& [key, coch] : def->psi()) {
          const auto& terms = prods.at({m, key});
          if (terms.empty()) continue;
          Vec val = coch.eval({j, z});
          for (const auto& [mk, c] : terms) accumulate(out, mk, val, c * vec[j]);
        }
      }
    }
    return out;
  }

  Fibered pair(int x, int y) const {
    Fibered out;
    const LeibnizAlgebra& L = def->algebra();
    out[MonKey{0, 0}] = L.bracket_basis(x, y);
    for (const auto& [key, coch] : def->psi()) {
      Vec v = coch.eval({x, y});
      bool nz = false;
      for (const auto& c : v) nz = nz || !c.is_zero();
      if (nz) out[key] = std::move(v);
    }
    return out;
  }
};

}  // namespace detail

/* Defect of the deformed bracket against the Leibniz identity, organized by
   base monomial: each returned 3-cochain is the coefficient of one surviving
   monomial in [x,[y,z]] - [[x,y],z] + [[x,z],y]. Empty result means the
   deformation satisfies the identity over its base. */
inline std::map<MonKey, Cochain> check_deformation(const Deformation& def) {
  const LeibnizAlgebra& L = def.algebra();
  int n = L.dim();
  detail::DeformedBracket br(def);
  std::map<MonKey, Cochain> defects;
  std::vector<int> xs(3, 0);
  for (xs[0] = 0; xs[0] < n; ++xs[0])
    for (xs[1] = 0; xs[1] < n; ++xs[1])
      for (xs[2] = 0; xs[2] < n; ++xs[2]) {
        detail::Fibered j = br.bracket_left(xs[0], br.pair(xs[1], xs[2]));
        detail::Fibered a = br.bracket_right(br.pair(xs[0], xs[1]), xs[2]);
        detail::Fibered b = br.bracket_right(br.pair(xs[0], xs[2]), xs[1]);
        for (const auto& [m, vec] : a) br.accumulate(j, m, vec, Rational(-1));
        for (const auto& [m, vec] : b) br.accumulate(j, m, vec, Rational(1));
        for (const auto& [m, vec] : j) {
          for (int t = 0; t < n; ++t) {
            if (vec[t].is_zero()) continue;
            auto [it, fresh] = defects.try_emplace(m, Cochain(3, n, n));
            it->second.at(xs, t) = vec[t];
          }
        }
      }
  for (auto it = defects.begin(); it != defects.end();)
    it = it->second.is_zero() ? defects.erase(it) : std::next(it);
  return defects;
}

inline bool is_deformation(const Deformation& def) { return check_deformation(def).empty(); }

/* Universal infinitesimal deformation: base dual to the second cohomology,
   coefficients the canonical representatives. */
inline Deformation universal_infinitesimal(const LeibnizAlgebra& L) {
  CohomologyData h2 = cohomology(L, adjoint(L), 2);
  int n = h2.betti();
  TruncatedLocalAlgebra base(n, 1, {});
  std::map<MonKey, Cochain> psi;
  for (int v = 0; v < n; ++v) {
    std::vector<int> e(n, 0);
    e[v] = 1;
    psi.emplace(MonKey{1, base.monomial_index(1, e)}, h2.representatives()[v]);
  }
  return Deformation(L, std::move(base), std::move(psi));
}

/* Base change along an algebra map: apply the map to every coefficient
   monomial and regroup. */
inline Deformation push_out(const Deformation& def, const AlgebraMap& phi) {
  if (!phi.source().same_presentation(def.base()))
    throw std::invalid_argument("push_out needs a map out of the deformation base");
  const TruncatedLocalAlgebra& target = phi.target();
  int n = def.algebra().dim();
  std::map<MonKey, Cochain> psi;
  for (const auto& [key, coch] : def.psi()) {
    LocalElement image = phi.apply_monomial(def.base().monomial_table(key.degree)[key.index]);
    for (int deg = 1; deg <= target.order(); ++deg)
      for (int idx : target.nf_indices(deg)) {
        const Rational& c = image.degree_coords(deg)[idx];
        if (c.is_zero()) continue;
        auto [it, fresh] = psi.try_emplace(MonKey{deg, idx}, Cochain(2, n, n));
        Cochain scaled = coch;
        it->second += scaled.scale(c);
      }
  }
  return Deformation(def.algebra(), target, std::move(psi));
}

/* Differential of an infinitesimal-capable deformation: column v holds the
   cohomology class of the degree-one coefficient in direction v. */
inline Matrix differential(const Deformation& def) {
  CohomologyData h2 = cohomology(def.algebra(), adjoint(def.algebra()), 2);
  int cols = def.base().order() >= 1 ? def.base().num_vars() : 0;
  Matrix out{h2.betti(), cols};
  for (int v = 0; v < cols; ++v) {
    Vec cls = h2.class_of(def.direction_cochain(v));
    for (int r = 0; r < h2.betti(); ++r) out.at(r, v) = cls[r];
  }
  return out;
}

/* Two order-one deformations of the same algebra over the same base are
   equivalent exactly when corresponding directions have equal classes. */
inline bool equivalent_infinitesimal(const Deformation& a, const Deformation& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("equivalence needs one underlying algebra");
  if (!a.base().same_presentation(b.base()))
    throw std::invalid_argument("equivalence needs one base");
  if (a.base().order() != 1) throw std::invalid_argument("equivalence is for order-one bases");
  return differential(a) == differential(b);
}

/* Map into the universal base realizing a given infinitesimal deformation:
   the variable images are read off the differential. Pushing the universal
   deformation out along the result is equivalent to the input. */
inline AlgebraMap universal_map(const Deformation& lam) {
  if (lam.base().order() != 1) throw std::invalid_argument("universal_map is for order-one bases");
  Matrix d = differential(lam);
  TruncatedLocalAlgebra c1(d.rows(), 1, {});
  const TruncatedLocalAlgebra& target = lam.base();
  std::vector<LocalElement> images;
  for (int i = 0; i < d.rows(); ++i) {
    LocalElement im = target.zero_element();
    for (int v = 0; v < d.cols(); ++v) {
      LocalElement t = target.variable_element(v);
      t.scale(d.at(i, v));
      im += t;
    }
    images.push_back(std::move(im));
  }
  return AlgebraMap(std::move(c1), target, std::move(images));
}

/* Composition senses of two adjoint-valued 2-cochains inside the Leibniz
   identity: outer(x, inner(y,z)), outer(inner(x,y), z), outer(inner(x,z), y). */
namespace detail {
inline Cochain compose_inner_right(const Cochain& outer, const Cochain& inner) {
  int n = outer.algebra_dim();
  Cochain out(3, n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec w = inner.eval({y, z});
        Vec acc(n);
        for (int j = 0; j < n; ++j) {
          if (w[j].is_zero()) continue;
          Vec v = outer.eval({x, j});
          for (int b = 0; b < n; ++b) acc[b] += w[j] * v[b];
        }
        for (int b = 0; b < n; ++b) out.at({x, y, z}, b) = std::move(acc[b]);
      }
  return out;
}

inline Cochain compose_inner_left(const Cochain& outer, const Cochain& inner, bool swap_last) {
  int n = outer.algebra_dim();
  Cochain out(3, n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec w = swap_last ? inner.eval({x, z}) : inner.eval({x, y});
        int last = swap_last ? y : z;
        Vec acc(n);
        for (int j = 0; j < n; ++j) {
          if (w[j].is_zero()) continue;
          Vec v = outer.eval({j, last});
          for (int b = 0; b < n; ++b) acc[b] += w[j] * v[b];
        }
        for (int b = 0; b < n; ++b) out.at({x, y, z}, b) = std::move(acc[b]);
      }
  return out;
}
}  // namespace detail

/* Obstruction to lifting a deformation through a square-zero extension of
   its base, one class per fiber direction. The defect cochain is computed
   from the section failure of the extension paired with the deformed
   bracket's composition defects; it is always a 3-cocycle. When a class
   vanishes a correcting 2-cochain with coboundary cancelling the defect is
   produced (canonically, free coordinates zero). */
struct ObstructionClass {
  int direction = 0;
  Cochain defect;
  Vec class_coords;
  bool vanishes = false;
  std::optional<Cochain> correction;
};

inline std::vector<ObstructionClass> obstruction(const Deformation& def,
                                                 const ExtensionDatum& ext) {
  if (!ext.base.same_presentation(def.base()))
    throw std::invalid_argument("extension is over a different base");
  if (!is_deformation(def))
    throw std::invalid_argument("obstruction needs a valid deformation");
  const LeibnizAlgebra& L = def.algebra();
  int n = L.dim();

  // cochain attached to each basis monomial of the base; slot 0 is the bracket
  const TruncatedLocalAlgebra& base = def.base();
  std::vector<Cochain> c;
  c.push_back(bracket_cochain(L));
  std::vector<MonKey> keys{MonKey{0, 0}};
  for (int deg = 1; deg <= base.order(); ++deg)
    for (int idx : base.nf_indices(deg)) {
      keys.push_back(MonKey{deg, idx});
      c.push_back(def.coefficient(MonKey{deg, idx}));
    }
  int nb = int(c.size());

  CohomologyData h3 = cohomology(L, adjoint(L), 3);
  std::vector<ObstructionClass> out;
  for (int s = 0; s < ext.fiber_dim; ++s) {
    Cochain phi(3, n, n);
    for (int p1 = 0; p1 < nb; ++p1)
      for (int p2 = 0; p2 < nb; ++p2) {
        const Rational& coef = ext.f[s][p1][p2];
        if (coef.is_zero() || c[p1].is_zero() || c[p2].is_zero()) continue;
        Cochain term = detail::compose_inner_right(c[p2], c[p1]);
        term -= detail::compose_inner_left(c[p2], c[p1], false);
        term += detail::compose_inner_left(c[p2], c[p1], true);
        phi += term.scale(coef);
      }
    Vec cls = h3.class_of(phi);
    bool vanishes = true;
    for (const auto& x : cls) vanishes = vanishes && x.is_zero();
    std::optional<Cochain> correction;
    if (vanishes) {
      Cochain neg = phi;
      neg.scale(Rational(-1));
      auto rho = solve_coboundary(L, adjoint(L), neg);
      if (!rho) throw std::logic_error("vanishing class without a correction");
      correction = std::move(*rho);
    }
    out.push_back(ObstructionClass{s, std::move(phi), std::move(cls), vanishes,
                                   std::move(correction)});
  }
  return out;
}

/* Extension pulled back along a base map: same fiber, section defect
   composed with the map on both arguments. */
inline ExtensionDatum pull_back(const ExtensionDatum& ext, const AlgebraMap& phi) {
  if (!phi.target().same_presentation(ext.base))
    throw std::invalid_argument("pull_back needs a map into the extension base");
  const TruncatedLocalAlgebra& src = phi.source();
  std::vector<Monomial> src_basis = src.basis();
  std::vector<Monomial> dst_basis = ext.base.basis();
  int nb_src = int(src_basis.size()), nb_dst = int(dst_basis.size());

  // expand each mapped source basis monomial over the target basis
  std::vector<Vec> expand(nb_src, Vec(nb_dst));
  for (int i = 0; i < nb_src; ++i) {
    LocalElement im = phi.apply_monomial(src_basis[i]);
    int pos = 0;
    for (int deg = 0; deg <= ext.base.order(); ++deg)
      for (int idx : ext.base.nf_indices(deg)) expand[i][pos++] = im.degree_coords(deg)[idx];
  }

  ExtensionDatum out;
  out.base = src;
  out.fiber_dim = ext.fiber_dim;
  out.f.assign(ext.fiber_dim, std::vector<Vec>(nb_src, Vec(nb_src)));
  for (int s = 0; s < ext.fiber_dim; ++s)
    for (int i = 0; i < nb_src; ++i)
      for (int j = 0; j < nb_src; ++j) {
        Rational acc;
        for (int a = 0; a < nb_dst; ++a) {
          if (expand[i][a].is_zero()) continue;
          for (int b = 0; b < nb_dst; ++b) acc += expand[i][a] * expand[j][b] * ext.f[s][a][b];
        }
        out.f[s][i][j] = std::move(acc);
      }
  return out;
}

}  // namespace leibdef
