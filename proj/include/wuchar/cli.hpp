#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wuchar {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCap = 3,
  kIndeterminate = 4,
  kMismatch = 5,
};

/// Runs the tool on argv (argv[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// A stored reference table and a recomputation of it.
struct PaperTable {
  std::string name;
  std::string title;
  /// Writes the recomputed values and returns true when they equal the stored ones.
  std::function<bool(std::ostream&)> check;
};

const std::vector<PaperTable>& paper_tables();

}  // namespace wuchar
