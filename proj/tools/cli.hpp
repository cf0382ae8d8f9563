#pragma once

#include <iosfwd>

namespace escalier::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 math error or a failed
/// verify-gb, 2 usage or file errors. `in` feeds the oracle line protocol.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace escalier::cli
