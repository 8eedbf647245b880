#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace takagi {

/// Everything a run needs to be reproduced: command, inputs, format, seed.
/// Serialized into every output header so files are self-describing.
struct RunConfig {
  std::string command;
  std::string x_literal;  // expansion literal, eval/localset
  std::string y_literal;  // rational literal, levelset
  int depth = 12;         // cover / plot depth, hard-capped at 64
  int r = 3;
  int r_max = 16;
  int m_max = 8;
  int max_len = 12;
  int k_max = 4;
  int block_limit = 6;
  int checks = 25;
  std::string what;        // subcommand-specific selector
  std::string suite = "all";
  std::string format = "csv";  // csv | json | svg
  std::string output_path;
  std::uint64_t seed = 1;

  /// The key=value pairs that actually affect the given command, in a
  /// fixed order; used verbatim in CSV headers and JSON config objects.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Row-oriented result set, the common shape every subcommand reduces to
/// before serialization.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string summary;  // one human line, printed to stdout
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Builds the result table for cfg.command.  Pure: same config, same
/// table, byte for byte.  Throws std::invalid_argument for unusable
/// configurations (unknown command, malformed literals, depth > 64).
Table run_command_table(const RunConfig& cfg);

/// SVG rendering of the commands that have a picture (eval's graph,
/// levelset's cover, measure's staircase, dim's spectrum).
std::string run_command_svg(const RunConfig& cfg);

}  // namespace takagi
