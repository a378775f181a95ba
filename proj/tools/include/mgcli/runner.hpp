#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mgcli/script.hpp"

namespace mgcli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2, kResourceAbort = 3 };

struct RunOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  /// "degrevlex", "lex" or "weight:w1,w2,...".
  std::string order = "degrevlex";
  bool json = false;
  std::optional<std::size_t> max_basis;
  /// Leave timings out of JSON records, for byte-level comparisons.
  bool omit_timings = false;
};

/// Throws std::invalid_argument for a malformed order flag.
mg::TermOrder parse_order_flag(const std::string& text, const mg::BlockRing& ring);

/// Executes the script statement by statement, writing one report per
/// command to `out` and diagnostics to `err`. Returns an ExitCode.
int run(const SessionScript& script, const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace mgcli
