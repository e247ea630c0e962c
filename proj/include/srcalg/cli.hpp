#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace srcalg::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kBadInput = 1,       // malformed input, bad flags, parse failures
  kFolnerNotFound = 2,
  kSearchNotFound = 3,  // no set system within --ymax
  kCheckFailed = 4,     // a re-verification did not hold
};

struct RunConfig {
  std::string command;
  std::string in_path;
  std::string out_path;  // empty: standard output
  std::uint64_t seed = 0;
  unsigned budget = 64;  // Folner candidates, or samples for `ideal`
  unsigned radius = 1;
  std::size_t ymax = 12;
  std::uint64_t field = 2;
  unsigned field_degree = 1;
  std::size_t s_size = 2;
  std::string log = "natural";
  std::string coeff = "Q";
  std::string b;  // comma-separated words for theta
  long bound = 10;
  unsigned degree = 2;
  bool verbose = false;
};

/// Runs one invocation; `args` excludes the program name. The JSON result
/// goes to `out` unless --out names a file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srcalg::cli
