#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "ngeta/eta.hpp"

namespace ngeta {

enum class OutputFormat { json, tsv, graph6 };

struct CliConfig {
  std::string command;  // eta | profile | ng | gen | search | check | conjecture
  std::string target;   // family/class spec, law name, or order
  std::string input;    // graph6 source path; empty or "-" means standard input
  std::string class_spec;
  std::optional<int> order;
  std::string method = "scan";  // eta only: scan | extension | tree
  OutputFormat format = OutputFormat::json;
  bool format_given = false;
  int scan_limit = kDefaultScanLimit;
  int workers = 1;
  std::size_t max_counterexamples = 100;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Executes one parsed command. Reports go to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv and runs it.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ngeta
