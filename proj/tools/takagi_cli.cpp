#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "takagi/report.hpp"
#include "takagi/version.hpp"

namespace {

// 0: success.  1: a verification-style run found a failing check.
// 2: unusable invocation (bad flags, bad literals, impossible configs).
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string meta_value(const takagi::Table& t, const std::string& key) {
  for (const auto& [k, v] : t.meta)
    if (k == key) return v;
  return "";
}

int emit(const takagi::RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "svg") {
    std::cerr << "error: unknown format '" << cfg.format << "'\n";
    return kUsage;
  }

  if (cfg.format == "svg") {
    const std::string svg = takagi::run_command_svg(cfg);
    if (cfg.output_path.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open '" << cfg.output_path << "'\n";
        return kUsage;
      }
      out << svg;
      std::cout << "wrote " << cfg.output_path << "\n";
    }
    return kOk;
  }

  const takagi::Table table = takagi::run_command_table(cfg);

  if (cfg.command == "verify") {
    for (const auto& row : table.rows)
      std::cout << (row[2] == "yes" ? "[PASS] " : "[FAIL] ") << row[0] << "/" << row[1]
                << (row[3].empty() ? "" : ": " + row[3]) << "\n";
  }

  const std::string rendered =
      cfg.format == "json" ? takagi::to_json(table) : takagi::to_csv(table);
  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << cfg.output_path << "'\n";
      return kUsage;
    }
    out << rendered;
    std::cout << "wrote " << cfg.output_path << "\n";
    std::cout << table.summary << "\n";
  } else if (cfg.command == "verify") {
    // The check log above is the product; the table only goes to files.
    std::cout << table.summary << "\n";
  } else {
    // Tables stream to stdout so the summary moves aside to stderr.
    std::cout << rendered;
    std::cerr << table.summary << "\n";
  }

  if (cfg.command == "verify" && meta_value(table, "failed") != "0") return kCheckFailed;
  if (cfg.command == "measure" &&
      meta_value(table, "selfsimilar_passed") != meta_value(table, "selfsimilar_checks"))
    return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  takagi::RunConfig cfg;

  CLI::App app{"Exact-arithmetic laboratory for a self-affine function: "
               "evaluation, level sets, the nonnegative-digit set, its "
               "singular measure, and dimension estimates"};
  app.set_version_flag("--version", takagi::kVersion);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format: csv | json | svg")
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output_path, "write the table/plot to this file");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")
      ->capture_default_str();

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate the function and its singular companion at a point");
  eval->add_option("--x", cfg.x_literal, "binary expansion literal, e.g. 0.0110 or 0.(01)")
      ->required();
  eval->add_option("--depth", cfg.depth, "plot depth when --format svg");

  CLI::App* levelset =
      app.add_subcommand("levelset", "outer cover of a level set by dyadic intervals");
  levelset->add_option("--y", cfg.y_literal, "rational level, e.g. 5/8")->required();
  levelset->add_option("--depth", cfg.depth, "subdivision depth, at most 64")
      ->capture_default_str();

  CLI::App* localset = app.add_subcommand(
      "localset", "enumerate the local level set through a point");
  localset->add_option("--x", cfg.x_literal, "binary expansion literal")->required();
  localset->add_option("--blocks", cfg.block_limit, "number of leading blocks to flip")
      ->capture_default_str();

  CLI::App* omega = app.add_subcommand(
      "omega", "the nonnegative-digit set: removed intervals, breakpoint words, sums");
  omega->add_option("--what", cfg.what, "intervals | breakpoints | sums");
  omega->add_option("--max-len", cfg.max_len, "largest breakpoint-word length")
      ->capture_default_str();
  omega->add_option("--m-max", cfg.m_max, "largest half-length for breakpoint listing")
      ->capture_default_str();

  CLI::App* measure = app.add_subcommand(
      "measure", "cell masses of the singular measure and spot checks");
  measure->add_option("--m-max", cfg.m_max, "deepest cell level")->capture_default_str();
  measure->add_option("--checks", cfg.checks, "random self-similarity checks")
      ->capture_default_str();

  CLI::App* dim = app.add_subcommand(
      "dim", "flat subsets: alphabets, box counts, spectrum, distortion");
  dim->add_option("--what", cfg.what, "boxes | alphabet | spectrum | bilip");
  dim->add_option("--r", cfg.r, "half word length of the first-return alphabet")
      ->capture_default_str();
  dim->add_option("--k-max", cfg.k_max, "number of scales (or blocks for bilip)")
      ->capture_default_str();
  dim->add_option("--r-max", cfg.r_max, "largest r in the spectrum table")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run the exact invariant checks");
  verify->add_option("--suite", cfg.suite,
                     "arith | takagi | levels | omega | measure | dim | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (CLI::App* sub : {eval, levelset, localset, omega, measure, dim, verify})
    if (sub->parsed()) cfg.command = sub->get_name();

  try {
    return emit(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}
