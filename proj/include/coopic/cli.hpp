#pragma once

#include <iosfwd>

namespace coopic {

/// Dispatches one CLI invocation. Exit codes: 0 success or positive verdict,
/// 1 negative verdict, 2 input/usage error, 3 internal invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coopic
