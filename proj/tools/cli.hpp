#pragma once

#include <iosfwd>

#include "mld/mld.hpp"

namespace mld::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kDisagreement = 2,
  kGenericity = 3,
  kUnsupported = 4,
};

/// 0 when the requested methods agree, 2 on disagreement or an internal
/// inconsistency, otherwise 3 or 4 by the failure that left no count.
int exit_code(const MldReport& report);

/// Entry point of the `mld` tool. Reports go to --output or `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mld::cli
