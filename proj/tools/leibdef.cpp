// Command-line driver: resolves an algebra from a file or the catalog, runs
// one computation, and prints the report as canonical JSON or as text.
//
// Exit codes: 0 on success, 1 when a mathematical check fails (broken
// bracket identity, oracle mismatch), 2 on usage or parse errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "leibdef/report.hpp"

namespace {

struct Options {
  std::string command;
  std::string operand;
  int degree = 2;
  int order = 1;
  std::string format = "text";
  std::string out_path;
};

int emit(const std::string& rendered, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "leibdef: cannot write " << out_path << "\n";
    return 2;
  }
  out << rendered;
  return 0;
}

int run(const Options& opt) {
  leibdef::AlgebraFile f = leibdef::resolve_algebra(opt.operand);
  auto start = std::chrono::steady_clock::now();
  nlohmann::json report;
  if (opt.command == "check") report = leibdef::check_report(f);
  else if (opt.command == "cohomology") report = leibdef::cohomology_report(f, opt.degree);
  else if (opt.command == "infinitesimal") report = leibdef::infinitesimal_report(f);
  else if (opt.command == "obstruct") report = leibdef::obstruct_report(f, opt.order);
  else if (opt.command == "versal") report = leibdef::versal_report(f, opt.order);
  else report = leibdef::harrison_oracle_report(f, opt.order);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string rendered = opt.format == "json" ? leibdef::render_json(report)
                                              : leibdef::render_text(report, f, ms);
  if (int rc = emit(rendered, opt.out_path)) return rc;
  return leibdef::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact deformation calculus for Leibniz algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("algebra", opt.operand, "algebra file, or a catalog name")->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "write the report to this file instead of stdout");
  };

  add_common(app.add_subcommand("check", "verify the bracket identity"));
  CLI::App* coh = app.add_subcommand("cohomology", "cohomology with adjoint coefficients");
  add_common(coh);
  coh->add_option("--degree", opt.degree, "cochain degree")->check(CLI::Range(0, 3))->capture_default_str();
  add_common(app.add_subcommand("infinitesimal", "universal first-order deformation"));
  CLI::App* obs = app.add_subcommand("obstruct", "lifting defects one order up");
  add_common(obs);
  obs->add_option("--order", opt.order, "truncation order to lift from (default 1)")->check(CLI::Range(1, 6));
  CLI::App* ver = app.add_subcommand("versal", "deformation base truncated at an order");
  add_common(ver);
  ver->add_option("--order", opt.order, "truncation order (default 3)")->check(CLI::Range(1, 6));
  CLI::App* oracle = app.add_subcommand("harrison-oracle", "brute-force cross-check of the base cohomology");
  add_common(oracle);
  oracle->add_option("--order", opt.order, "base truncation order (default 1)")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  CLI::App* picked = app.get_subcommands().front();
  opt.command = picked->get_name();
  bool takes_order = opt.command == "obstruct" || opt.command == "versal" || opt.command == "harrison-oracle";
  if (takes_order && picked->count("--order") == 0) opt.order = opt.command == "versal" ? 3 : 1;

  try {
    return run(opt);
  } catch (const leibdef::AlgebraIoError& e) {
    std::cerr << "leibdef: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "leibdef: " << e.what() << "\n";
    return 1;
  }
}
