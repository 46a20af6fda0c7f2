#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kac::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
  ok = 0,
  internal_error = 1,
  usage_error = 2,
  spec_error = 3,
  labeling_error = 4,
  budget_refused = 5,
  consistency_error = 6,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kac::cli
