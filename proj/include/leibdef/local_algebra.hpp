#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibdef/matrix.hpp"

namespace leibdef {

/* Commutative monomial as an exponent vector. The ordering is graded lex
   with g1 > g2 > ...: compare total degree first, then exponent vectors
   lexicographically. Tables list each degree in descending order, so g1^d
   comes first and gn^d last. */
struct Monomial {
  std::vector<int> exp;

  int degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /* true when *this is strictly larger in graded lex */
  bool graded_lex_above(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da > db;
    return exp > o.exp;  // lexicographic on exponents, g1 first
  }
};

inline void monomials_rec(int vars, int d, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (vars == 1) {
    cur.push_back(d);
    out.push_back(Monomial{cur});
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(vars - 1, d - e, cur, out);
    cur.pop_back();
  }
}

/* All monomials of one degree, descending graded lex. */
inline std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  if (num_vars == 0) return d == 0 ? std::vector<Monomial>{Monomial{{}}} : std::vector<Monomial>{};
  std::vector<Monomial> out;
  std::vector<int> cur;
  monomials_rec(num_vars, d, cur, out);
  return out;
}

inline std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

/* Default print names: one variable reads as t, otherwise g1..gn. */
inline std::vector<std::string> variable_names(int num_vars) {
  if (num_vars == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 1; i <= num_vars; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

/* Homogeneous polynomial: coordinates over the monomial table of one degree. */
struct HomogPoly {
  int degree = 0;
  Vec coords;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;
};

inline std::string poly_string(const HomogPoly& p, const std::vector<Monomial>& table,
                               const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < p.coords.size(); ++i) {
    const Rational& c = p.coords[i];
    if (c.is_zero()) continue;
    std::string mon = monomial_string(table[i], names);
    std::string mag = (c.sign() > 0 ? c : -c).str();
    std::string term = (mag == "1" && mon != "1") ? mon : (mon == "1" ? mag : mag + "*" + mon);
    if (s.empty())
      s = (c.sign() < 0 ? "-" : "") + term;
    else
      s += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

class LocalElement;

/* K[g_1..g_n] / (I + m^{K+1}): a local algebra truncated at order K with a
   homogeneous ideal kept degree by degree in canonical echelon form. The
   stored ideal is always saturated: multiplying a degree-d ideal element by
   a variable lands in the stored degree-(d+1) piece. Copies share one
   immutable body, so elements can hold their algebra cheaply. */
class TruncatedLocalAlgebra {
public:
  TruncatedLocalAlgebra() : TruncatedLocalAlgebra(0, 0, {}) {}

  TruncatedLocalAlgebra(int num_vars, int order,
                        std::vector<HomogPoly> ideal_generators) {
    if (num_vars < 0 || order < 0) throw std::invalid_argument("bad local algebra shape");
    auto d = std::make_shared<Data>();
    d->num_vars = num_vars;
    d->order = order;
    d->tables.resize(order + 1);
    d->index.resize(order + 1);
    for (int deg = 0; deg <= order; ++deg) {
      d->tables[deg] = monomials_of_degree(num_vars, deg);
      for (size_t i = 0; i < d->tables[deg].size(); ++i)
        d->index[deg][d->tables[deg][i].exp] = int(i);
    }
    d->ideal.assign(order + 1, Subspace(0));
    std::vector<std::vector<Vec>> gens(order + 1);
    for (const HomogPoly& p : ideal_generators) {
      if (p.degree < 2 || p.degree > order) {
        if (p.degree > order) continue;  // swallowed by the truncation
        throw std::invalid_argument("ideal generators must have degree >= 2");
      }
      if (p.coords.size() != d->tables[p.degree].size())
        throw std::invalid_argument("ideal generator has wrong coordinate length");
      gens[p.degree].push_back(p.coords);
    }
    for (int deg = 2; deg <= order; ++deg) {
      // saturate: push every lower-degree ideal vector up by each variable
      if (deg > 2)
        for (int i = 0; i < d->ideal[deg - 1].dim(); ++i)
          for (int v = 0; v < num_vars; ++v)
            gens[deg].push_back(multiply_by_variable(*d, deg - 1, d->ideal[deg - 1].basis_vector(i), v));
      d->ideal[deg] = Subspace::span(int(d->tables[deg].size()), gens[deg]);
    }
    d->nf.resize(order + 1);
    for (int deg = 0; deg <= order; ++deg) {
      std::vector<bool> is_pivot(d->tables[deg].size(), false);
      if (deg >= 2)
        for (int p : d->ideal[deg].pivots()) is_pivot[p] = true;
      for (size_t i = 0; i < d->tables[deg].size(); ++i)
        if (!is_pivot[i]) d->nf[deg].push_back(int(i));
    }
    data_ = std::move(d);
  }

  int num_vars() const { return data_->num_vars; }
  int order() const { return data_->order; }

  /* Dimension over K: the number of surviving monomials. */
  int dim() const {
    int total = 0;
    for (int deg = 0; deg <= order(); ++deg) total += int(data_->nf[deg].size());
    return total;
  }

  const std::vector<Monomial>& monomial_table(int degree) const {
    if (degree < 0 || degree > order()) throw std::invalid_argument("degree outside truncation");
    return data_->tables[degree];
  }

  /* Indices into the degree table of the monomials outside the ideal. */
  const std::vector<int>& nf_indices(int degree) const {
    if (degree < 0 || degree > order()) throw std::invalid_argument("degree outside truncation");
    return data_->nf[degree];
  }

  /* Ideal piece in one degree (empty spaces below degree 2). */
  const Subspace& ideal_piece(int degree) const {
    if (degree < 2 || degree > order()) throw std::invalid_argument("no ideal piece at this degree");
    return data_->ideal[degree];
  }

  int monomial_index(int degree, const std::vector<int>& exp) const {
    auto it = data_->index[degree].find(exp);
    if (it == data_->index[degree].end()) throw std::invalid_argument("monomial not of this degree");
    return it->second;
  }

  /* Reduce degree-d coordinates modulo the ideal piece. */
  Vec reduce(int degree, Vec coords) const {
    if (degree < 2 || degree > order()) return coords;
    return data_->ideal[degree].reduce(std::move(coords));
  }

  bool same_presentation(const TruncatedLocalAlgebra& o) const {
    if (o.data_ == data_) return true;
    if (o.num_vars() != num_vars() || o.order() != order()) return false;
    for (int deg = 2; deg <= order(); ++deg)
      if (!(o.data_->ideal[deg] == data_->ideal[deg])) return false;
    return true;
  }
  friend bool operator==(const TruncatedLocalAlgebra& a, const TruncatedLocalAlgebra& b) {
    return a.same_presentation(b);
  }

  /* Monomials surviving the quotient, degree-major, graded lex inside. */
  std::vector<Monomial> basis() const {
    std::vector<Monomial> out;
    for (int deg = 0; deg <= order(); ++deg)
      for (int i : data_->nf[deg]) out.push_back(data_->tables[deg][i]);
    return out;
  }

  LocalElement zero_element() const;
  LocalElement unit_element() const;
  LocalElement variable_element(int v) const;
  LocalElement monomial_element(const Monomial& m) const;
  LocalElement element_from(int degree, Vec coords) const;

private:
  struct Data {
    int num_vars = 0, order = 0;
    std::vector<std::vector<Monomial>> tables;
    std::vector<std::map<std::vector<int>, int>> index;
    std::vector<Subspace> ideal;  // by degree, meaningful from 2
    std::vector<std::vector<int>> nf;
  };

  static Vec multiply_by_variable(const Data& d, int degree, const Vec& coords, int var) {
    Vec out(d.tables[degree + 1].size());
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      std::vector<int> e = d.tables[degree][i].exp;
      ++e[var];
      out[d.index[degree + 1].at(e)] += coords[i];
    }
    return out;
  }

  friend class LocalElement;
  std::shared_ptr<const Data> data_;
};

/* Element of a truncated local algebra, held as reduced coordinates per
   degree over the full monomial tables. */
class LocalElement {
public:
  LocalElement() = default;
  explicit LocalElement(TruncatedLocalAlgebra alg) : alg_(std::move(alg)) {
    coords_.resize(alg_.order() + 1);
    for (int d = 0; d <= alg_.order(); ++d) coords_[d].assign(alg_.monomial_table(d).size(), Rational());
  }

  const TruncatedLocalAlgebra& algebra() const { return alg_; }

  const Vec& degree_coords(int d) const { return coords_[d]; }

  void add_term(int degree, int index, const Rational& c) {
    coords_[degree][index] += c;
    dirty_ = true;
  }

  /* Canonicalize: reduce every degree modulo the ideal. */
  void normalize() {
    if (!dirty_) return;
    for (int d = 2; d <= alg_.order(); ++d) coords_[d] = alg_.reduce(d, std::move(coords_[d]));
    dirty_ = false;
  }

  Rational epsilon() const { return coords_.empty() ? Rational() : coords_[0].empty() ? Rational() : coords_[0][0]; }

  bool is_zero() const {
    for (const auto& v : coords_)
      for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
  }

  LocalElement& operator+=(const LocalElement& o) {
    require_same(o);
    for (size_t d = 0; d < coords_.size(); ++d)
      for (size_t i = 0; i < coords_[d].size(); ++i) coords_[d][i] += o.coords_[d][i];
    return *this;
  }
  LocalElement& operator-=(const LocalElement& o) {
    require_same(o);
    for (size_t d = 0; d < coords_.size(); ++d)
      for (size_t i = 0; i < coords_[d].size(); ++i) coords_[d][i] -= o.coords_[d][i];
    return *this;
  }
  LocalElement& scale(const Rational& c) {
    for (auto& v : coords_)
      for (auto& x : v) x *= c;
    return *this;
  }
  friend LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
  friend LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }

  friend LocalElement operator*(const LocalElement& a, const LocalElement& b) {
    a.require_same(b);
    const TruncatedLocalAlgebra& alg = a.alg_;
    LocalElement out(alg);
    for (int da = 0; da <= alg.order(); ++da)
      for (size_t i = 0; i < a.coords_[da].size(); ++i) {
        if (a.coords_[da][i].is_zero()) continue;
        for (int db = 0; da + db <= alg.order(); ++db)
          for (size_t j = 0; j < b.coords_[db].size(); ++j) {
            if (b.coords_[db][j].is_zero()) continue;
            std::vector<int> e = alg.monomial_table(da)[i].exp;
            const std::vector<int>& e2 = alg.monomial_table(db)[j].exp;
            for (size_t v = 0; v < e.size(); ++v) e[v] += e2[v];
            out.coords_[da + db][alg.monomial_index(da + db, e)] += a.coords_[da][i] * b.coords_[db][j];
          }
      }
    out.dirty_ = true;
    out.normalize();
    return out;
  }

  friend bool operator==(const LocalElement& a, const LocalElement& b) {
    return a.alg_.same_presentation(b.alg_) && a.coords_ == b.coords_;
  }

  std::string str(const std::vector<std::string>& names) const {
    std::string s;
    for (int d = 0; d <= alg_.order(); ++d) {
      HomogPoly p{d, coords_[d]};
      std::string part = poly_string(p, alg_.monomial_table(d), names);
      if (part == "0") continue;
      if (s.empty()) s = part;
      else if (part[0] == '-') s += " - " + part.substr(1);
      else s += " + " + part;
    }
    return s.empty() ? "0" : s;
  }

private:
  void require_same(const LocalElement& o) const {
    if (!alg_.same_presentation(o.alg_)) throw std::invalid_argument("elements of different algebras");
  }

  TruncatedLocalAlgebra alg_;
  std::vector<Vec> coords_;
  bool dirty_ = false;
};

inline LocalElement TruncatedLocalAlgebra::zero_element() const { return LocalElement(*this); }

inline LocalElement TruncatedLocalAlgebra::unit_element() const {
  LocalElement e(*this);
  e.add_term(0, 0, Rational(1));
  e.normalize();
  return e;
}

inline LocalElement TruncatedLocalAlgebra::variable_element(int v) const {
  if (v < 0 || v >= num_vars()) throw std::invalid_argument("variable index out of range");
  if (order() < 1) return zero_element();
  std::vector<int> e(num_vars(), 0);
  e[v] = 1;
  LocalElement out(*this);
  out.add_term(1, monomial_index(1, e), Rational(1));
  out.normalize();
  return out;
}

inline LocalElement TruncatedLocalAlgebra::monomial_element(const Monomial& m) const {
  int d = m.degree();
  LocalElement out(*this);
  if (d <= order()) {
    out.add_term(d, monomial_index(d, m.exp), Rational(1));
    out.normalize();
  }
  return out;
}

inline LocalElement TruncatedLocalAlgebra::element_from(int degree, Vec coords) const {
  LocalElement out(*this);
  if (degree <= order()) {
    if (coords.size() != monomial_table(degree).size())
      throw std::invalid_argument("coordinate length mismatch");
    for (size_t i = 0; i < coords.size(); ++i) out.add_term(degree, int(i), coords[i]);
    out.normalize();
  }
  return out;
}

/* dim m/m^2: the number of independent degree-one directions. */
inline int tangent_space_dim(const TruncatedLocalAlgebra& a) {
  return a.order() >= 1 ? a.num_vars() : 0;
}

/* Unital algebra map between truncated local algebras, fixed by the images
   of the variables. Construction checks that the images kill the
   augmentation (no constant terms) and that the ideal and the truncation
   tail of the source map to zero, so every constructed map is well defined. */
class AlgebraMap {
public:
  AlgebraMap(TruncatedLocalAlgebra source, TruncatedLocalAlgebra target,
             std::vector<LocalElement> variable_images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(variable_images)) {
    if (int(images_.size()) != source_.num_vars())
      throw std::invalid_argument("algebra map needs one image per variable");
    for (auto& im : images_) {
      if (!im.algebra().same_presentation(target_))
        throw std::invalid_argument("variable image lives in the wrong algebra");
      if (!im.epsilon().is_zero())
        throw std::invalid_argument("algebra map is not augmentation-compatible");
    }
    // well-definedness: the ideal pieces and the first truncated degree must die
    for (int d = 2; d <= source_.order() + 1; ++d) {
      if (d <= source_.order()) {
        const Subspace& piece = source_.ideal_piece(d);
        for (int i = 0; i < piece.dim(); ++i)
          if (!apply_poly(d, piece.basis_vector(i)).is_zero())
            throw std::invalid_argument("algebra map does not kill the source ideal");
      } else {
        for (const Monomial& m : monomials_of_degree(source_.num_vars(), d))
          if (!apply_monomial(m).is_zero())
            throw std::invalid_argument("algebra map does not kill the truncation tail");
      }
    }
  }

  const TruncatedLocalAlgebra& source() const { return source_; }
  const TruncatedLocalAlgebra& target() const { return target_; }
  const LocalElement& variable_image(int v) const { return images_[v]; }

  LocalElement apply_monomial(const Monomial& m) const {
    LocalElement acc = target_.unit_element();
    for (size_t v = 0; v < m.exp.size(); ++v)
      for (int t = 0; t < m.exp[v]; ++t) acc = acc * images_[v];
    return acc;
  }

  LocalElement apply_poly(int degree, const Vec& coords) const {
    LocalElement acc = target_.zero_element();
    const auto& table = source_.monomial_table(degree);
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      LocalElement t = apply_monomial(table[i]);
      t.scale(coords[i]);
      acc += t;
    }
    return acc;
  }

  LocalElement apply(const LocalElement& x) const {
    if (!x.algebra().same_presentation(source_))
      throw std::invalid_argument("algebra map applied to a foreign element");
    LocalElement acc = target_.zero_element();
    for (int d = 0; d <= source_.order(); ++d) {
      LocalElement t = apply_poly(d, x.degree_coords(d));
      acc += t;
    }
    return acc;
  }

private:
  TruncatedLocalAlgebra source_, target_;
  std::vector<LocalElement> images_;
};

/* Same variables, lower order: drop every degree above new_order and keep
   the ideal pieces below. */
inline TruncatedLocalAlgebra truncate(const TruncatedLocalAlgebra& a, int new_order) {
  if (new_order > a.order()) throw std::invalid_argument("cannot truncate upward");
  std::vector<HomogPoly> gens;
  for (int d = 2; d <= new_order; ++d) {
    const Subspace& piece = a.ideal_piece(d);
    for (int i = 0; i < piece.dim(); ++i) gens.push_back(HomogPoly{d, piece.basis_vector(i)});
  }
  return TruncatedLocalAlgebra(a.num_vars(), new_order, std::move(gens));
}

/* g_i -> g_i from a quotient with more relations onto one with fewer
   monomials; exists whenever target's ideal contains source's up to the
   target truncation. */
inline AlgebraMap natural_projection(const TruncatedLocalAlgebra& from, const TruncatedLocalAlgebra& to) {
  if (from.num_vars() != to.num_vars())
    throw std::invalid_argument("projection needs matching variables");
  std::vector<LocalElement> images;
  for (int v = 0; v < from.num_vars(); ++v) images.push_back(to.variable_element(v));
  return AlgebraMap(from, to, std::move(images));
}

/* Basis of I/mI, degree by degree. Degree order+1 counts the truncation
   tail as part of I, so the result spans the kernel directions of the
   universal one-dimensional extension. Vectors are reduced modulo mI and
   canonicalized, one echelon family per degree. */
struct KernelPresentation {
  std::vector<HomogPoly> basis;  // ascending degree, echelon order inside
  int dim() const { return int(basis.size()); }
};

inline Subspace ideal_piece_or_full(const TruncatedLocalAlgebra& a, int degree) {
  if (degree <= a.order()) {
    if (degree < 2) return Subspace(int(a.monomial_table(degree).size()));
    return a.ideal_piece(degree);
  }
  return Subspace::full(int(monomials_of_degree(a.num_vars(), degree).size()));
}

/* m * (ideal piece one degree down), inside the given degree. */
inline Subspace ideal_times_maximal(const TruncatedLocalAlgebra& a, int degree) {
  std::vector<Monomial> table_lo = monomials_of_degree(a.num_vars(), degree - 1);
  std::vector<Monomial> table_hi = monomials_of_degree(a.num_vars(), degree);
  std::map<std::vector<int>, int> hi_index;
  for (size_t i = 0; i < table_hi.size(); ++i) hi_index[table_hi[i].exp] = int(i);
  Subspace lower = ideal_piece_or_full(a, degree - 1);
  std::vector<Vec> gens;
  for (int i = 0; i < lower.dim(); ++i) {
    Vec b = lower.basis_vector(i);
    for (int v = 0; v < a.num_vars(); ++v) {
      Vec up(table_hi.size());
      for (size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        std::vector<int> e = table_lo[j].exp;
        ++e[v];
        up[hi_index.at(e)] += b[j];
      }
      gens.push_back(std::move(up));
    }
  }
  return Subspace::span(int(table_hi.size()), gens);
}

inline KernelPresentation harrison_h2_presented(const TruncatedLocalAlgebra& a) {
  KernelPresentation out;
  for (int d = 2; d <= a.order() + 1; ++d) {
    Subspace numer = ideal_piece_or_full(a, d);
    Subspace denom = ideal_times_maximal(a, d);
    std::vector<Vec> reduced;
    for (int i = 0; i < numer.dim(); ++i) reduced.push_back(denom.reduce(numer.basis_vector(i)));
    Subspace quo = Subspace::span(numer.ambient(), reduced);
    for (int i = 0; i < quo.dim(); ++i) out.basis.push_back(HomogPoly{d, quo.basis_vector(i)});
  }
  return out;
}

/* Square-zero extension of a truncated local algebra by a trivial module:
   multiplication (a1,k1)(a2,k2) = (a1 a2, eps(a1) k2 + eps(a2) k1 + f(a1,a2))
   with f the symmetric section defect on the monomial basis. */
struct ExtensionDatum {
  TruncatedLocalAlgebra base;
  int fiber_dim = 0;
  /* f[s][i][j]: fiber coordinate s of f on basis monomials i, j of base. */
  std::vector<std::vector<Vec>> f;
};

struct UniversalExtension {
  TruncatedLocalAlgebra total;            // K[g] / (m I + m^{K+2}), order K+1
  KernelPresentation kernel;              // identified with I/mI
  ExtensionDatum datum;                   // fiber = all kernel directions
};

inline UniversalExtension one_dim_extensions(const TruncatedLocalAlgebra& a) {
  int k = a.order();
  std::vector<HomogPoly> ideal;
  for (int d = 2; d <= k + 1; ++d) {
    Subspace piece = ideal_times_maximal(a, d);
    for (int i = 0; i < piece.dim(); ++i) ideal.push_back(HomogPoly{d, piece.basis_vector(i)});
  }
  TruncatedLocalAlgebra total(a.num_vars(), k + 1, std::move(ideal));
  KernelPresentation kernel = harrison_h2_presented(a);

  // kernel directions per degree as a subspace, for coordinate extraction
  std::map<int, Subspace> kern_by_degree;
  std::map<int, std::vector<int>> kern_positions;  // degree -> global indices
  for (size_t i = 0; i < kernel.basis.size(); ++i) {
    const HomogPoly& p = kernel.basis[i];
    auto it = kern_by_degree.find(p.degree);
    if (it == kern_by_degree.end()) {
      kern_by_degree.emplace(p.degree, Subspace::span(int(p.coords.size()), {p.coords}));
      kern_positions[p.degree] = {int(i)};
    } else {
      std::vector<Vec> rows = Subspace::rows_of(it->second.basis());
      rows.push_back(p.coords);
      it->second = Subspace::span(int(p.coords.size()), rows);
      kern_positions[p.degree].push_back(int(i));
    }
  }

  ExtensionDatum datum;
  datum.base = a;
  datum.fiber_dim = kernel.dim();
  std::vector<Monomial> basis = a.basis();
  int nb = int(basis.size());
  datum.f.assign(kernel.dim(), std::vector<Vec>(nb, Vec(nb)));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      // section defect: multiply in the extension, subtract the lift of the
      // product downstairs, read off kernel coordinates
      LocalElement up = total.monomial_element(basis[i]) * total.monomial_element(basis[j]);
      LocalElement down = a.monomial_element(basis[i]) * a.monomial_element(basis[j]);
      LocalElement lifted = total.zero_element();
      for (int d = 0; d <= a.order(); ++d) {
        const Vec& c = down.degree_coords(d);
        for (size_t t = 0; t < c.size(); ++t)
          if (!c[t].is_zero()) lifted.add_term(d, int(t), c[t]);
      }
      lifted.normalize();  // lift of a normal form stays a normal form here
      LocalElement diff = up - lifted;
      for (auto& [deg, space] : kern_by_degree) {
        if (deg > total.order()) continue;
        Vec comp = diff.degree_coords(deg);
        bool nonzero = false;
        for (auto& x : comp) nonzero = nonzero || !x.is_zero();
        if (!nonzero) continue;
        Vec coords = space.coordinates(comp);
        const auto& pos = kern_positions[deg];
        for (size_t t = 0; t < pos.size(); ++t) datum.f[pos[t]][i][j] = coords[t];
      }
    }
  return UniversalExtension{std::move(total), std::move(kernel), std::move(datum)};
}

}  // namespace leibdef
