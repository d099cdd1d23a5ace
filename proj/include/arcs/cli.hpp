#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Parsed command line. Only the fields relevant to `subcommand` are read.
struct RunConfig {
  std::string subcommand;  // plane, census, supersat-check, density-check, kw-verify, bound-table, sample-lower, theorem-check
  std::vector<std::uint32_t> q;
  std::string epsilon = "1/2";  // exact rational "A/B"
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;              // empty: standard output
  std::string format = "jsonl"; // jsonl | csv
  std::string cache_dir;        // empty: no cache

  std::optional<std::uint32_t> m_max;
  std::uint64_t node_budget = 0;  // 0: library default
  std::optional<std::uint64_t> trials;
  bool exhaustive = false;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> x;

  std::uint32_t n = 12;
  std::uint64_t instances = 100;
  std::optional<std::string> beta;
  std::optional<std::uint64_t> f;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> big_r;

  std::vector<std::uint64_t> m_list;
  std::optional<std::uint64_t> m;
  std::optional<std::string> c_constant;
};

/// Parses argv-style arguments (without the program name). Throws
/// std::invalid_argument with a usage message on malformed input; returns
/// nullopt when help was requested (text written to `help`).
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& help);

/// Executes one subcommand. Records go to config.out (or `out`), the human
/// summary to `err`. Returns kExitOk, kExitVerificationFailed when an
/// asserted invariant failed, or kExitUsage on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract applied to parse errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcs::cli
