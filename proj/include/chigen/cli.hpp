#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chigen {

/// Runs the command-line tool on `args` (program name excluded) and
/// returns the process exit code: 0 ok, 1 verification or internal
/// failure, 2 parse/spec error, 3 cap exceeded.
///
/// A leading argument that is not a known command is treated as a spec
/// for the `chigen` command, so `chigen A4 --json` works unprefixed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace chigen
