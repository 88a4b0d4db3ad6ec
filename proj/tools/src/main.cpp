#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lieweyl_cli/command.hpp"

using lieweyl::cli::CommandConfig;
using lieweyl::cli::OutputFormat;

namespace {

void add_algebra(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--algebra", cfg.algebra,
                  "JSON file or builtin: su2, heisenberg, abelian:<n>, kappa:<a1,...,an>")
      ->capture_default_str();
}

void add_cutoff(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--cutoff", cfg.cutoff, "series cutoff D (total d-degree kept)");
}

void add_degree(CLI::App* sub, CommandConfig& cfg, const std::string& what) {
  sub->add_option("--degree", cfg.degree, what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in enveloping and Weyl algebras: realizations, coproducts, star products"};
  app.require_subcommand(1);
  app.footer("Environment: LIEWEYL_OUT_DIR sets the default --out-dir.\nExit status: 0 all checks pass, 1 a check failed, 2 bad input.");
  CommandConfig cfg;
  std::string format = "text";
  std::string out_dir;
  bool unbounded = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--out-dir", out_dir, "also write the report to <dir>/<command>.txt")->envname("LIEWEYL_OUT_DIR");
    sub->add_flag("--unbounded", unbounded, "lift the default bounds (n <= 4, D <= 6, P <= 5)");
  };

  auto* verify = app.add_subcommand("verify", "Jacobi, phi equation, theta-xi round trip, coderivation, commuting partials");
  add_algebra(verify, cfg);
  add_cutoff(verify, cfg);
  add_degree(verify, cfg, "monomial degree for the round-trip and partial checks (default 4)");
  common(verify);

  auto* coproduct = app.add_subcommand("coproduct", "Deformed Leibniz rule by the tree and adjoint routes");
  add_algebra(coproduct, cfg);
  add_degree(coproduct, cfg, "total degree P kept in the coproduct (default 4)");
  coproduct->add_option("--mu", cfg.mu, "component 1..n (default: all)");
  common(coproduct);

  auto* star = app.add_subcommand("star", "Star product of polynomials by several routes");
  star->set_help_flag("--help", "Print this help message and exit");
  add_algebra(star, cfg);
  star->add_option("--f", cfg.f, "left factor, e.g. \"x1^2 - 1/2*x3\"");
  star->add_option("--g", cfg.g, "right factor");
  star->add_option("--h", cfg.h, "third factor; enables the associativity check");
  star->add_option("--route", cfg.route, "pbw, coproduct, exp or all")
      ->check(CLI::IsMember({"pbw", "coproduct", "exp", "all"}))
      ->capture_default_str();
  star->add_option("--k", cfg.k, "exp route: comma-separated rational vector k");
  star->add_option("--q", cfg.q, "exp route: comma-separated rational vector q");
  add_degree(star, cfg, "exp route: order P (default 4)");
  common(star);

  auto* trees = app.add_subcommand("trees", "Count, list and filter bicolored trees");
  trees->add_option("--w", cfg.w, "white nodes")->capture_default_str();
  trees->add_option("--b", cfg.b, "black leaves")->capture_default_str();
  trees->add_flag("--count", cfg.count, "print the count (default)");
  trees->add_flag("--list", cfg.list, "list canonical strings");
  trees->add_flag("--planar", cfg.planar, "planar trees instead of numbered ones");
  trees->add_flag("--contributing", cfg.contributing, "planar trees passing the contribution filter");
  trees->add_flag("--ascii", cfg.ascii, "draw listed trees");
  trees->add_flag("--table", cfg.table, "count table for w + b <= degree");
  add_degree(trees, cfg, "table size (default 5)");
  common(trees);

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff series: Dynkin terms, bigraded pieces, cross-checks");
  add_algebra(hausdorff, cfg);
  add_degree(hausdorff, cfg, "order P (default 4)");
  common(hausdorff);

  auto* chi = app.add_subcommand("chi", "The chi series and its commutator identity");
  add_algebra(chi, cfg);
  add_cutoff(chi, cfg);
  add_degree(chi, cfg, "maximal degree of test monomials f (default 2)");
  chi->add_option("--mu", cfg.mu, "index 1..n (with --nu)");
  chi->add_option("--nu", cfg.nu, "index 1..n (with --mu)");
  common(chi);

  auto* check_all = app.add_subcommand("check-all", "Run the full acceptance suite with timings");
  common(check_all);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
  cfg.unbounded = unbounded;
  auto result = lieweyl::cli::run_command(cfg);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.output;

  if (!out_dir.empty() && result.exit_code != 2) {
    std::filesystem::create_directories(out_dir);
    std::ofstream file(std::filesystem::path(out_dir) / (cfg.command + ".txt"));
    file << result.output;
    if (!file) {
      std::cerr << "error (io): cannot write to " << out_dir << '\n';
      return 2;
    }
  }
  return result.exit_code;
}
