#include <CLI11.hpp>

#include <iostream>

#include "tordyn/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tordyn: dynamical degrees, primitivity and Salem tests for torus automorphisms"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string matrix, ring = "z", tol;
  auto* analyze = app.add_subcommand("analyze", "Degree profile, certificate and classification of one matrix");
  analyze->add_option("--matrix", matrix, "Row-major nested brackets, e.g. [[0,1],[1,1]]")->required();
  analyze->add_option("--ring", ring, "z | zi | zw");
  analyze->add_option("--tol", tol, "Enclosure tolerance (rational or decimal)");

  std::string family = "pa", range;
  auto* scan = app.add_subcommand("scan", "Verify the family P_a over a range of a");
  scan->add_option("--family", family, "Family name");
  scan->add_option("--range", range, "A..B")->required();

  std::string poly;
  auto* classify = app.add_subcommand("classify", "Salem / Pisot classification of a polynomial");
  classify->add_option("--poly", poly, "x^3-3*x+1 or [1,-3,0,1]")->required();

  int degree_bound = tordyn::kDefaultMembershipBound;
  bool corrupt = false;
  auto* symbolic = app.add_subcommand("verify-symbolic", "Exact checks on the quotient threefold");
  symbolic->add_option("--degree-bound", degree_bound, "Membership check degree");
  symbolic->add_flag("--corrupt-generators", corrupt, "Negative control")->group("");

  std::string g, h, product_tol;
  auto* product = app.add_subcommand("product-check", "Degrees of diag(G, H) against the product formula");
  product->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  product->add_option("--g", g, "Matrix G")->required();
  product->add_option("--h", h, "Matrix H")->required();
  product->add_option("--ring", ring, "z | zi | zw");
  product->add_option("--tol", product_tol, "Agreement tolerance");

  for (auto* sub : {analyze, scan, classify, symbolic, product}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tordyn::kExitInvalidInput;
  }

  tordyn::CommandResult r;
  if (*analyze) {
    r = tordyn::cmd_analyze(matrix, ring, tol);
  } else if (*scan) {
    try {
      const auto [lo, hi] = tordyn::parse_scan_range(range);
      r = tordyn::cmd_scan(family, lo, hi);
    } catch (const tordyn::InvalidInput& e) {
      r = tordyn::detail::error_result(tordyn::kExitInvalidInput, e.what());
    }
  } else if (*classify) {
    r = tordyn::cmd_classify(poly);
  } else if (*symbolic) {
    r = tordyn::cmd_verify_symbolic(degree_bound, corrupt);
  } else if (*product) {
    r = tordyn::cmd_product_check(g, h, ring, product_tol);
  }

  if (format == "table") {
    std::cout << r.table;
  } else {
    std::cout << r.json.dump(2) << "\n";
  }
  if (!r.message.empty()) std::cerr << r.message << "\n";
  return r.exit_code;
}
