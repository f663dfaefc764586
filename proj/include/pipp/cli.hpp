#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pipp {

/// Exit codes: 0 ok, 1 suite entry failed or unexpected error,
/// 2 bad configuration / invocation / CSV schema, 3 solver failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pipp
