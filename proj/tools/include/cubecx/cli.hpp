#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cubecx::cli {

// Exit statuses: verdict-driven, never timing-driven.
enum Status : int { ok = 0, negative = 1, inconclusive = 2, input_error = 3 };

struct PipelineConfig {
  std::vector<std::string> inputs;
  std::optional<std::string> fixture;
  std::size_t n = 2;
  std::size_t cap_independent_sets = 1'000'000;
  std::size_t cap_colourings = 1'000'000;
  std::size_t cap_group_order = 10'000;
  std::optional<std::string> output;  // artifact path
  std::optional<std::string> dot;     // DOT export path
  bool json = false;
};

// argv without the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubecx::cli
