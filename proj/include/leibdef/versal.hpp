#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leibdef/deformation.hpp"
#include "leibdef/local_algebra.hpp"

namespace leibdef {

/* Minimal homogeneous generators of the ideal: per degree, the piece modulo
   the span of everything pushed up from one degree below. Truncation tails
   never appear as generators. */
inline std::vector<HomogPoly> minimal_relation_generators(const TruncatedLocalAlgebra& a) {
  std::vector<HomogPoly> out;
  for (int d = 2; d <= a.order(); ++d) {
    Subspace numer = a.ideal_piece(d);
    Subspace denom = ideal_times_maximal(a, d);
    std::vector<Vec> reduced;
    for (int i = 0; i < numer.dim(); ++i) reduced.push_back(denom.reduce(numer.basis_vector(i)));
    Subspace quo = Subspace::span(numer.ambient(), reduced);
    for (int i = 0; i < quo.dim(); ++i) out.push_back(HomogPoly{d, quo.basis_vector(i)});
  }
  return out;
}

struct DirectionReport {
  HomogPoly direction;  // canonical kernel basis vector examined at this step
  Vec class_coords;     // its lifting defect against the canonical HL^3 basis
  bool obstructed = false;
  bool corrected = false;  // a nonzero bracket correction was applied for it
};

struct VersalStep {
  int order = 0;  // the order this step constructed
  std::vector<DirectionReport> directions;
  int relations_added = 0;
};

struct VersalResult {
  LeibnizAlgebra algebra;
  int order = 0;  // requested truncation order
  TruncatedLocalAlgebra base;
  Deformation bracket;
  std::vector<HomogPoly> relation_generators;  // canonical, ascending degree
  std::vector<VersalStep> history;
  bool stabilized = false;
};

/* Order-by-order construction of the deformation base. Seeded with the
   universal infinitesimal deformation, each step extends the base by one
   degree through its universal square-zero extension, measures the lifting
   defect in every canonical kernel direction, turns obstructed directions
   into relations and cancels the surviving ones with coboundary
   corrections to the bracket. Stops early once an order adds nothing,
   which makes every later order a verbatim repeat. */
inline VersalResult versal_truncation(const LeibnizAlgebra& L, int K) {
  if (K < 1) throw std::invalid_argument("truncation order must be at least 1");
  if (verify_leibniz(L)) throw std::invalid_argument("bracket identity fails");

  Deformation eta = universal_infinitesimal(L);
  std::vector<VersalStep> history;
  bool stabilized = false;

  for (int k = 1; k < K && !stabilized; ++k) {
    UniversalExtension ext = one_dim_extensions(eta.base());
    std::vector<ObstructionClass> obs = obstruction(eta, ext.datum);

    VersalStep step;
    step.order = k + 1;
    std::vector<HomogPoly> gens;
    for (int d = 2; d <= k + 1; ++d) {
      Subspace piece = ext.total.ideal_piece(d);
      for (int i = 0; i < piece.dim(); ++i) gens.push_back(HomogPoly{d, piece.basis_vector(i)});
    }
    std::vector<std::pair<const HomogPoly*, const Cochain*>> surviving;
    for (const ObstructionClass& oc : obs) {
      const HomogPoly& dir = ext.kernel.basis[oc.direction];
      bool corrected = false;
      if (!oc.vanishes) {
        gens.push_back(dir);
        ++step.relations_added;
      } else if (oc.correction && !oc.correction->is_zero()) {
        surviving.push_back({&dir, &*oc.correction});
        corrected = true;
      }
      step.directions.push_back(DirectionReport{dir, oc.class_coords, !oc.vanishes, corrected});
    }

    TruncatedLocalAlgebra next(eta.base().num_vars(), k + 1, gens);

    // stable once saturation alone fills the new degree, no relation moved,
    // and no correction was needed; the base presentation is then kept at
    // its current order
    bool top_saturated =
        ext.total.ideal_piece(k + 1).dim() == int(ext.total.monomial_table(k + 1).size());
    bool pieces_equal = true;
    for (int d = 2; d <= k && pieces_equal; ++d)
      pieces_equal = next.ideal_piece(d) == eta.base().ideal_piece(d);
    if (top_saturated && pieces_equal && surviving.empty()) {
      stabilized = true;
      history.push_back(std::move(step));
      break;
    }

    std::map<MonKey, Cochain> psi = eta.psi();
    for (auto& [dir, rho] : surviving)
      for (size_t m = 0; m < dir->coords.size(); ++m) {
        if (dir->coords[m].is_zero()) continue;
        Cochain scaled = *rho;
        scaled.scale(dir->coords[m]);
        MonKey key{dir->degree, int(m)};
        auto it = psi.find(key);
        if (it == psi.end())
          psi.emplace(key, std::move(scaled));
        else
          it->second += scaled;
      }
    eta = Deformation(L, std::move(next), std::move(psi));
    if (!is_deformation(eta)) throw std::logic_error("order step left an uncorrected defect");
    history.push_back(std::move(step));
  }

  std::vector<HomogPoly> relations = minimal_relation_generators(eta.base());
  TruncatedLocalAlgebra base = eta.base();
  return VersalResult{L,        K, std::move(base), std::move(eta), std::move(relations),
                      std::move(history), stabilized};
}

struct VersalVerdict {
  bool ok = true;
  std::vector<std::string> failures;
};

/* Independent re-check of a constructed result: the bracket must be
   defect-free over the stored base, its linear part must be the canonical
   cohomology representatives with identity differential, the ideal must be
   a saturation fixpoint, and the stored relation generators must match the
   ideal's minimal generators. */
inline VersalVerdict verify_versal(const VersalResult& r) {
  VersalVerdict v;
  auto fail = [&v](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };

  if (!r.bracket.base().same_presentation(r.base)) fail("bracket lives over a different base");
  if (!(r.bracket.algebra() == r.algebra)) fail("bracket deforms a different algebra");
  if (!check_deformation(r.bracket).empty()) fail("bracket leaves a defect over the base");

  CohomologyData h2 = cohomology(r.algebra, adjoint(r.algebra), 2);
  if (h2.betti() != r.base.num_vars()) {
    fail("base variable count differs from the tangent dimension");
  } else if (r.base.order() >= 1) {
    Matrix d = differential(r.bracket);
    if (!(d == Matrix::identity(h2.betti()))) fail("differential is not the identity");
    const std::vector<Cochain>& reps = h2.representatives();
    for (int i = 0; i < int(reps.size()); ++i)
      if (!(r.bracket.coefficient(MonKey{1, i}) == reps[i])) {
        fail("linear part is not the canonical representative set");
        break;
      }
  }

  std::vector<HomogPoly> gens;
  for (int d = 2; d <= r.base.order(); ++d) {
    Subspace piece = r.base.ideal_piece(d);
    for (int i = 0; i < piece.dim(); ++i) gens.push_back(HomogPoly{d, piece.basis_vector(i)});
  }
  TruncatedLocalAlgebra resat(r.base.num_vars(), r.base.order(), gens);
  if (!resat.same_presentation(r.base)) fail("ideal is not a saturation fixpoint");

  for (const HomogPoly& g : r.relation_generators)
    if (g.degree < 2) {
      fail("relation generator below degree two");
      break;
    }
  if (!(minimal_relation_generators(r.base) == r.relation_generators))
    fail("stored relation generators do not match the ideal");

  return v;
}

/* Unique comparison map onto a square-zero base: a deformation over such a
   base is induced from the constructed one along the map sending each base
   variable to the row of the deformation's differential. Returns the map
   when the induced deformation is equivalent to the given one. */
inline std::optional<AlgebraMap> compare_pushout(const VersalResult& r, const Deformation& lam) {
  if (lam.base().order() != 1)
    throw std::invalid_argument("comparison base must be square-zero");
  if (!(lam.algebra() == r.algebra))
    throw std::invalid_argument("comparison deformation is of a different algebra");
  if (!is_deformation(lam)) throw std::invalid_argument("comparison needs a valid deformation");

  Matrix d = differential(lam);
  if (d.rows() != r.base.num_vars())
    throw std::invalid_argument("result base does not match the tangent dimension");

  std::vector<LocalElement> images;
  for (int i = 0; i < r.base.num_vars(); ++i) {
    LocalElement im = lam.base().zero_element();
    for (int v = 0; v < lam.base().num_vars(); ++v)
      if (!d.at(i, v).is_zero()) im.add_term(1, v, d.at(i, v));
    im.normalize();
    images.push_back(std::move(im));
  }
  AlgebraMap phi(r.base, lam.base(), std::move(images));
  if (!equivalent_infinitesimal(push_out(r.bracket, phi), lam)) return std::nullopt;
  return phi;
}

}  // namespace leibdef
