#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpk::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one command. args excludes the program name. Documents are read
/// from the file argument, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace tpk::cli
