#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htt::cli {

/// Dispatches one invocation. Exit code 0 means a verdict was computed
/// (negative verdicts included), 1 an input problem, 2 a resource cap or an
/// Unknown outcome.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace htt::cli
