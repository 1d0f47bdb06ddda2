#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace circuit::cli {

inline constexpr const char* kToolName = "circuitcode";

enum class Format { Text, Json, Csv };

/// Everything a run depends on; echoed into JSON output for reproducibility.
struct RunConfig {
  std::string subcommand;
  std::string action;
  std::string input;
  std::string output;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<int> s;
  std::optional<int> c;
  std::optional<long long> offset;
  std::optional<int> index;
  std::string base_table;
  std::uint64_t budget = 10'000'000;
  bool reverify = true;
  Format format = Format::Text;
  int jobs = 1;
  std::vector<std::string> excluded_rules;
};

/// Exit codes: 0 success, 1 domain failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circuit::cli
