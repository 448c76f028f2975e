// eplab command-line front end.  Every invocation prints one JSON document
// on stdout; exit codes are 0 (ok), 1 (fuzz violations), 2 (usage/parse).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "eplab/commands.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EPLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "eplab: ignoring invalid EPLAB_SEED '" << env << "'\n";
    }
  }
  return 1;
}

int emit(const eplab::CommandResult& r) {
  std::cout << eplab::to_json(r.envelope).dump(2) << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eplab;

  CLI::App app{"eplab: EP / posinormal matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  ToleranceConfig tol;
  app.add_option("--tol-rank-mult", tol.rank_multiplier, "rank threshold multiplier")->capture_default_str();
  app.add_option("--tol-subspace", tol.subspace_tol, "subspace inclusion tolerance")->capture_default_str();
  app.add_option("--tol-psd", tol.psd_tol, "PSD test tolerance")->capture_default_str();

  std::string path_a, path_b;

  auto* classify_cmd = app.add_subcommand("classify", "classify one matrix");
  classify_cmd->add_option("matrix", path_a, "CMAT file")->required();

  auto* product_cmd = app.add_subcommand("product", "product decision procedures for AB");
  product_cmd->add_option("a", path_a, "CMAT file for A")->required();
  product_cmd->add_option("b", path_b, "CMAT file for B")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "block decomposition of (A, B) along N(A)");
  decompose_cmd->add_option("a", path_a, "CMAT file for A")->required();
  decompose_cmd->add_option("b", path_b, "CMAT file for B")->required();

  std::string suite_name;
  std::size_t trials = 1000;
  std::string dims = "2-8";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run a seeded theorem-verification suite");
  fuzz_cmd->add_option("suite", suite_name, "suite name")->required();
  fuzz_cmd->add_option("--trials", trials, "number of trials")->capture_default_str();
  fuzz_cmd->add_option("--dims", dims, "dimension range lo-hi")->capture_default_str();
  fuzz_cmd->add_option("--seed", seed, "master seed (default: $EPLAB_SEED or 1)");
  fuzz_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::string family, sizes;
  std::optional<std::string> out;
  auto* truncate_cmd = app.add_subcommand("truncate", "finite-section sweep; optional CSV output");
  truncate_cmd->add_option("family", family, "te | prop52 | weighted_shift")->required();
  truncate_cmd->add_option("sizes", sizes, "sizes, e.g. 0-20 or 2,4,8")->required();
  truncate_cmd->add_option("--out", out, "CSV output path");

  std::optional<std::string> catalog_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "list or emit exact example matrices");
  catalog_cmd->add_option("name", catalog_name, "entry to emit");
  catalog_cmd->add_option("--out", out, "directory for emitted CMAT files");

  std::string command = "eplab";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return emit(error_result(command, InputError(e.what())));
  }

  try {
    if (*classify_cmd) {
      command = "classify";
      return emit(cmd_classify(path_a, tol));
    }
    if (*product_cmd) {
      command = "product";
      return emit(cmd_product(path_a, path_b, tol));
    }
    if (*decompose_cmd) {
      command = "decompose";
      return emit(cmd_decompose(path_a, path_b, tol));
    }
    if (*fuzz_cmd) {
      command = "fuzz";
      FuzzConfig cfg;
      cfg.suite = parse_suite(suite_name);
      cfg.trials = trials;
      std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dim_range(dims);
      cfg.seed = seed.value_or(default_seed());
      cfg.jobs = jobs;
      cfg.tol = tol;
      return emit(cmd_fuzz(cfg));
    }
    if (*truncate_cmd) {
      command = "truncate";
      std::optional<std::filesystem::path> out_path;
      if (out) out_path = *out;
      return emit(cmd_truncate(family, parse_index_list(sizes), out_path, tol));
    }
    if (*catalog_cmd) {
      command = "catalog";
      std::optional<std::filesystem::path> out_dir;
      if (out) out_dir = *out;
      return emit(cmd_catalog(catalog_name, out_dir));
    }
  } catch (const std::exception& e) {
    std::cerr << "eplab " << command << ": " << e.what() << '\n';
    return emit(error_result(command, e));
  }
  return kExitUsage;
}
