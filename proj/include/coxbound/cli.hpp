#pragma once

#include <iosfwd>

namespace coxbound {

/// Exit codes: 0 success, 1 input or usage error, 2 classify verdict OutOfScope,
/// 3 k5 routing failure, 4 k5 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxbound
