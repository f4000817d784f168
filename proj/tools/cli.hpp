#pragma once

#include <ostream>
#include <span>
#include <string>

namespace dirichlet::cli {

/// Runs one subcommand. `args` excludes the program name. The serialized
/// table goes to `out` (or the --out file), diagnostics to `err`.
///
/// Returns 0 on success, 1 when a library routine raises one of the
/// dirichlet errors (reported as "<ErrorName>: message"), and 2 on a
/// malformed command line ("UsageError: message").
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dirichlet::cli
