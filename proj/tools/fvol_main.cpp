#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "fvol/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"F-volume, F-threshold and Hilbert-Kunz estimates for ideals over F_p"};
  std::string spec_path;
  fvol::RunOptions opt;
  std::string order = "grevlex";
  std::string json_path, csv_path, svg_path, ideal;
  int dim = 0;
  std::uint64_t e = 0, e1 = 1, e2 = 1;

  app.add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  app.add_option("command", opt.command,
                 "vset | volume | threshold | hk | fedder | check | verify-cover | staircase")
      ->required();
  app.add_option("name", opt.check_name, "Checker name for the check command");
  auto* json_opt = app.add_option("--json", json_path, "Also write JSON output to this path");
  auto* csv_opt = app.add_option("--csv", csv_path, "Also write CSV output to this path");
  auto* svg_opt = app.add_option("--svg", svg_path, "Write the SVG staircase to this path");
  app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  auto* dim_opt = app.add_option("--dim", dim, "Dimension override for hk");
  auto* e_opt = app.add_option("--e", e, "Single level instead of the spec's range");
  auto* e1_opt = app.add_option("--e1", e1, "Coarse level for verify-cover and remark47_bound");
  auto* e2_opt = app.add_option("--e2", e2, "Refinement for verify-cover and remark47_bound");
  auto* ideal_opt = app.add_option("--ideal", ideal, "Ideal containing J, for containment_monotone");
  app.add_option("--part", opt.parts, "Ideal in the intersection, for union_decomposition");

  CLI11_PARSE(app, argc, argv);

  if (*json_opt) opt.json_path = json_path;
  if (*csv_opt) opt.csv_path = csv_path;
  if (*svg_opt) opt.svg_path = svg_path;
  if (*dim_opt) opt.dim = dim;
  if (*e_opt) opt.e = e;
  if (*e1_opt) opt.e1 = e1;
  if (*e2_opt) opt.e2 = e2;
  if (*ideal_opt) opt.ideal = ideal;

  std::string text;
  if (spec_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read " << spec_path << "\n";
      return fvol::exit_code::usage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  auto kind = order == "lex" ? fvol::OrderKind::Lex : fvol::OrderKind::Grevlex;
  fvol::RunResult result = fvol::run_text(text, opt, kind);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
