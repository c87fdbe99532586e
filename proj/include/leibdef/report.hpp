#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "leibdef/algebra_io.hpp"
#include "leibdef/harrison.hpp"
#include "leibdef/versal.hpp"

namespace leibdef {

/* Reports are built as JSON first and rendered to text from that, so both
   formats describe the same computation. JSON output is canonical: object
   keys sorted, monomials in the shared graded order, no volatile fields.
   Running a command twice must produce identical bytes. */

namespace report_detail {

inline std::string basis_label(const AlgebraFile& f, int i) {
  return f.labels.empty() ? "e" + std::to_string(i + 1) : f.labels[std::size_t(i)];
}

inline nlohmann::json vec_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& c : v) out.push_back(c.str());
  return out;
}

/* Nonzero coordinates as [position, value] pairs, 1-based. Obstruction
   classes against a large cohomology basis are mostly zero. */
inline nlohmann::json sparse_vec_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(nlohmann::json::array({i + 1, v[i].str()}));
  return out;
}

/* Sparse flat entries of a cochain, 1-based, in flat (argument-major)
   order: [{args, basis, value}]. */
inline nlohmann::json cochain_json(const Cochain& c) {
  nlohmann::json out = nlohmann::json::array();
  int n = c.algebra_dim(), m = c.module_dim(), q = c.degree();
  const Vec& flat = c.flat();
  for (std::size_t t = 0; t < flat.size(); ++t) {
    if (flat[t].is_zero()) continue;
    std::size_t rest = t;
    int b = int(rest % std::size_t(m));
    rest /= std::size_t(m);
    std::vector<int> args(static_cast<std::size_t>(q));
    for (int a = q - 1; a >= 0; --a) {
      args[std::size_t(a)] = int(rest % std::size_t(n)) + 1;
      rest /= std::size_t(n);
    }
    out.push_back({{"args", args}, {"basis", b + 1}, {"value", flat[t].str()}});
  }
  return out;
}

inline std::string cochain_text(const Cochain& c, const AlgebraFile& f) {
  std::string out;
  int n = c.algebra_dim(), m = c.module_dim(), q = c.degree();
  const Vec& flat = c.flat();
  for (std::size_t t = 0; t < flat.size(); ++t) {
    if (flat[t].is_zero()) continue;
    std::size_t rest = t;
    int b = int(rest % std::size_t(m));
    rest /= std::size_t(m);
    std::vector<int> args(static_cast<std::size_t>(q));
    for (int a = q - 1; a >= 0; --a) {
      args[std::size_t(a)] = int(rest % std::size_t(n));
      rest /= std::size_t(n);
    }
    std::string lhs = "[";
    for (int a = 0; a < q; ++a) lhs += (a ? "," : "") + basis_label(f, args[std::size_t(a)]);
    lhs += "]";
    std::string coeff = flat[t].str();
    std::string term = lhs + " -> " + (coeff == "1" ? "" : coeff + "*") + basis_label(f, b);
    out += (out.empty() ? "" : ", ") + term;
  }
  return out.empty() ? "0" : out;
}

inline std::string poly_text(const HomogPoly& p, int num_vars) {
  return poly_string(p, monomials_of_degree(num_vars, p.degree), variable_names(num_vars));
}

inline nlohmann::json base_json(const TruncatedLocalAlgebra& a) {
  nlohmann::json out;
  out["dim"] = a.dim();
  out["order"] = a.order();
  out["variables"] = variable_names(a.num_vars());
  nlohmann::json rels = nlohmann::json::array();
  for (const HomogPoly& p : minimal_relation_generators(a)) rels.push_back(poly_text(p, a.num_vars()));
  out["relations"] = rels;
  return out;
}

inline nlohmann::json violation_json(const LeibnizViolation& v) {
  return {{"triple", {v.x + 1, v.y + 1, v.z + 1}},
          {"lhs", vec_json(v.lhs)},
          {"rhs", vec_json(v.rhs)}};
}

inline nlohmann::json envelope(const std::string& command, const AlgebraFile& f) {
  nlohmann::json r;
  r["command"] = command;
  r["input"] = {{"name", f.name}, {"dim", f.dim()}, {"digest", algebra_digest(f)}};
  r["ok"] = true;
  return r;
}

/* Shared guard for the commands that only make sense on an actual Leibniz
   algebra. Returns true when the report is already complete (failed). */
inline bool reject_non_leibniz(nlohmann::json& r, const AlgebraFile& f) {
  if (auto v = verify_leibniz(f.algebra)) {
    r["ok"] = false;
    r["error"] = "input violates the bracket identity";
    r["violation"] = violation_json(*v);
    return true;
  }
  return false;
}

inline nlohmann::json deformation_coefficients(const Deformation& def) {
  nlohmann::json out = nlohmann::json::array();
  const TruncatedLocalAlgebra& base = def.base();
  std::vector<std::string> names = variable_names(base.num_vars());
  for (const auto& [key, coch] : def.psi()) {
    std::string mon = monomial_string(base.monomial_table(key.degree)[std::size_t(key.index)], names);
    out.push_back({{"monomial", mon}, {"cochain", cochain_json(coch)}});
  }
  return out;
}

}  // namespace report_detail

inline nlohmann::json check_report(const AlgebraFile& f) {
  nlohmann::json r = report_detail::envelope("check", f);
  auto v = verify_leibniz(f.algebra);
  r["leibniz"] = !v.has_value();
  if (v) {
    r["ok"] = false;
    r["violation"] = report_detail::violation_json(*v);
  }
  return r;
}

inline nlohmann::json cohomology_report(const AlgebraFile& f, int degree) {
  nlohmann::json r = report_detail::envelope("cohomology", f);
  r["arguments"] = {{"degree", degree}};
  if (report_detail::reject_non_leibniz(r, f)) return r;
  CohomologyData h = cohomology(f.algebra, adjoint(f.algebra), degree);
  r["betti"] = h.betti();
  nlohmann::json reps = nlohmann::json::array();
  for (const Cochain& c : h.representatives()) reps.push_back(report_detail::cochain_json(c));
  r["representatives"] = reps;
  return r;
}

inline nlohmann::json infinitesimal_report(const AlgebraFile& f) {
  nlohmann::json r = report_detail::envelope("infinitesimal", f);
  if (report_detail::reject_non_leibniz(r, f)) return r;
  Deformation def = universal_infinitesimal(f.algebra);
  r["base"] = report_detail::base_json(def.base());
  r["coefficients"] = report_detail::deformation_coefficients(def);
  return r;
}

/* Builds the order-k truncation and reports the lifting defect of every
   canonical kernel direction of the next square-zero extension. */
inline nlohmann::json obstruct_report(const AlgebraFile& f, int order) {
  nlohmann::json r = report_detail::envelope("obstruct", f);
  r["arguments"] = {{"order", order}};
  if (report_detail::reject_non_leibniz(r, f)) return r;
  VersalResult vr = versal_truncation(f.algebra, order);
  UniversalExtension ext = one_dim_extensions(vr.base);
  std::vector<ObstructionClass> obs = obstruction(vr.bracket, ext.datum);
  r["base"] = report_detail::base_json(vr.base);
  nlohmann::json dirs = nlohmann::json::array();
  for (const ObstructionClass& oc : obs) {
    const HomogPoly& p = ext.kernel.basis[std::size_t(oc.direction)];
    dirs.push_back({{"direction", report_detail::poly_text(p, vr.base.num_vars())},
                    {"class", report_detail::sparse_vec_json(oc.class_coords)},
                    {"vanishes", oc.vanishes}});
  }
  r["directions"] = dirs;
  return r;
}

inline nlohmann::json versal_report(const AlgebraFile& f, int order) {
  nlohmann::json r = report_detail::envelope("versal", f);
  r["arguments"] = {{"order", order}};
  if (report_detail::reject_non_leibniz(r, f)) return r;
  VersalResult vr = versal_truncation(f.algebra, order);
  r["base"] = report_detail::base_json(vr.base);
  nlohmann::json rels = nlohmann::json::array();
  for (const HomogPoly& p : vr.relation_generators)
    rels.push_back(report_detail::poly_text(p, vr.base.num_vars()));
  r["relations"] = rels;
  r["coefficients"] = report_detail::deformation_coefficients(vr.bracket);
  r["stabilized"] = vr.stabilized;
  nlohmann::json hist = nlohmann::json::array();
  for (const VersalStep& s : vr.history) {
    nlohmann::json dirs = nlohmann::json::array();
    for (const DirectionReport& d : s.directions)
      dirs.push_back({{"direction", report_detail::poly_text(d.direction, vr.base.num_vars())},
                      {"class", report_detail::sparse_vec_json(d.class_coords)},
                      {"obstructed", d.obstructed},
                      {"corrected", d.corrected}});
    hist.push_back({{"order", s.order}, {"relations_added", s.relations_added}, {"directions", dirs}});
  }
  r["history"] = hist;
  VersalVerdict verdict = verify_versal(vr);
  r["verified"] = verdict.ok;
  if (!verdict.ok) {
    r["ok"] = false;
    std::string msg;
    for (const std::string& s : verdict.failures) msg += (msg.empty() ? "" : "; ") + s;
    r["error"] = msg;
  }
  return r;
}

/* Cross-checks the presented deformation cohomology of the order-k base
   against the brute-force shuffle complex. Degree 1 is compared to the
   tangent space dimension, degree 2 to the presented kernel. */
inline nlohmann::json harrison_oracle_report(const AlgebraFile& f, int order) {
  nlohmann::json r = report_detail::envelope("harrison-oracle", f);
  r["arguments"] = {{"order", order}};
  if (report_detail::reject_non_leibniz(r, f)) return r;
  VersalResult vr = versal_truncation(f.algebra, order);
  r["base"] = report_detail::base_json(vr.base);
  MultiplicationTable table{};
  try {
    table = multiplication_table(vr.base);
  } catch (const std::invalid_argument& e) {
    r["ok"] = false;
    r["error"] = e.what();
    return r;
  }
  int ref1 = tangent_space_dim(vr.base);
  int ref2 = harrison_h2_presented(vr.base).dim();
  int brute1 = harrison_betti_bruteforce(table, 1, 1);
  int brute2 = harrison_betti_bruteforce(table, 1, 2);
  r["checks"] = {{{"degree", 1}, {"bruteforce", brute1}, {"reference", ref1}, {"match", brute1 == ref1}},
                 {{"degree", 2}, {"bruteforce", brute2}, {"reference", ref2}, {"match", brute2 == ref2}}};
  if (brute1 != ref1 || brute2 != ref2) {
    r["ok"] = false;
    r["error"] = "brute-force and presented dimensions disagree";
  }
  return r;
}

inline int report_exit_code(const nlohmann::json& r) { return r.value("ok", false) ? 0 : 1; }

inline std::string render_json(const nlohmann::json& r) { return r.dump(2) + "\n"; }

/* Human-oriented rendering. Unlike JSON it may carry the elapsed time, so
   only the JSON format is byte-reproducible. */
inline std::string render_text(const nlohmann::json& r, const AlgebraFile& f,
                               std::optional<double> elapsed_ms = std::nullopt) {
  using report_detail::basis_label;
  std::ostringstream os;
  std::string cmd = r["command"].get<std::string>();
  os << "leibdef " << cmd << " " << r["input"]["name"].get<std::string>();
  if (r.contains("arguments"))
    for (const auto& [key, value] : r["arguments"].items()) os << " --" << key << " " << value;
  os << "\n";
  os << "input: dim " << r["input"]["dim"].get<int>()
     << ", digest " << r["input"]["digest"].get<std::string>() << "\n";

  if (r.contains("violation")) {
    const nlohmann::json& v = r["violation"];
    auto t = v["triple"];
    os << "Leibniz identity: FAILS at ("
       << basis_label(f, t[0].get<int>() - 1) << ", "
       << basis_label(f, t[1].get<int>() - 1) << ", "
       << basis_label(f, t[2].get<int>() - 1) << ")\n";
    os << "  [x,[y,z]]          =";
    for (const auto& c : v["lhs"]) os << " " << c.get<std::string>();
    os << "\n  [[x,y],z]-[[x,z],y] =";
    for (const auto& c : v["rhs"]) os << " " << c.get<std::string>();
    os << "\n";
  } else if (cmd == "check") {
    os << "Leibniz identity: ok\n";
  }

  auto print_base = [&os](const nlohmann::json& b) {
    os << "base: variables";
    for (const auto& v : b["variables"]) os << " " << v.get<std::string>();
    os << ", order " << b["order"].get<int>() << ", dimension " << b["dim"].get<int>() << "\n";
  };
  auto print_coefficients = [&](const nlohmann::json& coeffs) {
    os << "bracket coefficients:\n";
    for (const auto& entry : coeffs) {
      os << "  " << entry["monomial"].get<std::string>() << ":";
      for (const auto& term : entry["cochain"]) {
        os << " [";
        bool first = true;
        for (const auto& a : term["args"]) {
          os << (first ? "" : ",") << basis_label(f, a.get<int>() - 1);
          first = false;
        }
        std::string coeff = term["value"].get<std::string>();
        os << "] -> " << (coeff == "1" ? "" : coeff + "*")
           << basis_label(f, term["basis"].get<int>() - 1);
      }
      os << "\n";
    }
  };

  if (!r.contains("violation")) {
    if (cmd == "cohomology") {
      os << "betti_" << r["arguments"]["degree"].get<int>() << " = " << r["betti"].get<int>() << "\n";
      int i = 0;
      for (const auto& rep : r["representatives"]) {
        os << "  representative " << ++i << ":";
        for (const auto& term : rep) {
          os << " [";
          bool first = true;
          for (const auto& a : term["args"]) {
            os << (first ? "" : ",") << basis_label(f, a.get<int>() - 1);
            first = false;
          }
          std::string coeff = term["value"].get<std::string>();
          os << "] -> " << (coeff == "1" ? "" : coeff + "*")
             << basis_label(f, term["basis"].get<int>() - 1);
        }
        os << "\n";
      }
    } else if (cmd == "infinitesimal") {
      print_base(r["base"]);
      print_coefficients(r["coefficients"]);
    } else if (cmd == "obstruct") {
      print_base(r["base"]);
      os << "directions:\n";
      for (const auto& d : r["directions"]) {
        os << "  " << d["direction"].get<std::string>() << ": "
           << (d["vanishes"].get<bool>() ? "unobstructed" : "obstructed, class (");
        if (!d["vanishes"].get<bool>()) {
          bool first = true;
          for (const auto& c : d["class"]) {
            os << (first ? "" : ", ") << c[0].get<int>() << ": " << c[1].get<std::string>();
            first = false;
          }
          os << ")";
        }
        os << "\n";
      }
    } else if (cmd == "versal") {
      print_base(r["base"]);
      os << "relations:";
      if (r["relations"].empty()) os << " none";
      for (const auto& rel : r["relations"]) os << " " << rel.get<std::string>();
      os << "\n";
      print_coefficients(r["coefficients"]);
      os << "stabilized: " << (r["stabilized"].get<bool>() ? "yes" : "no") << "\n";
      for (const auto& s : r["history"]) {
        os << "  order " << s["order"].get<int>() << ": " << s["relations_added"].get<int>()
           << " relation(s) added\n";
      }
    } else if (cmd == "harrison-oracle") {
      print_base(r["base"]);
      if (r.contains("checks"))
        for (const auto& c : r["checks"])
          os << "  degree " << c["degree"].get<int>() << ": brute force " << c["bruteforce"].get<int>()
             << ", reference " << c["reference"].get<int>()
             << (c["match"].get<bool>() ? " (match)" : " (MISMATCH)") << "\n";
    }
  }

  if (r.contains("error")) os << "error: " << r["error"].get<std::string>() << "\n";
  os << "status: " << (r["ok"].get<bool>() ? "ok" : "failed") << "\n";
  if (elapsed_ms) os << "elapsed: " << *elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace leibdef
