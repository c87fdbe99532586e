// Walks the whole pipeline on two small algebras: the dim-1 abelian algebra,
// whose deformation base closes up at t^2 = 0, and the nilpotent dim-2
// algebra, whose base stays a free line at every order.

#include <iostream>

#include "leibdef/report.hpp"

using namespace leibdef;

namespace {

void walk(const char* name, int order) {
  AlgebraFile f = *catalog_algebra(name);
  const LeibnizAlgebra& L = f.algebra;
  std::cout << "== " << name << " (dim " << L.dim() << ") ==\n";

  CohomologyData h2 = cohomology(L, adjoint(L), 2);
  std::cout << "tangent directions (dim HL^2): " << h2.betti() << "\n";

  VersalResult r = versal_truncation(L, order);
  std::vector<std::string> names = variable_names(r.base.num_vars());
  std::cout << "base after order " << order << ": dimension " << r.base.dim()
            << ", order " << r.base.order() << "\n";
  if (r.relation_generators.empty()) {
    std::cout << "relations: none, the base is a free truncation\n";
  } else {
    std::cout << "relations:";
    for (const HomogPoly& p : r.relation_generators)
      std::cout << " " << poly_string(p, monomials_of_degree(r.base.num_vars(), p.degree), names);
    std::cout << "\n";
  }
  for (const VersalStep& s : r.history) {
    int obstructed = 0;
    for (const DirectionReport& d : s.directions) obstructed += d.obstructed ? 1 : 0;
    std::cout << "  order " << s.order << ": " << s.directions.size() << " direction(s), "
              << obstructed << " obstructed\n";
  }
  std::cout << "stabilized: " << (r.stabilized ? "yes" : "no") << "\n";

  VersalVerdict v = verify_versal(r);
  std::cout << "independent verification: " << (v.ok ? "clean" : "FAILED") << "\n";
  std::cout << render_text(versal_report(f, order), f) << "\n";
}

}  // namespace

int main() {
  walk("abelian1", 4);
  walk("nilp2", 3);
  return 0;
}
