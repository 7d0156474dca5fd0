#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncx::cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Runs the command line `args` (without the program name). Reads "-"
/// inputs from `in`. Returns 0 on pass, 1 on a verification failure and 2
/// on usage or format errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncx::cli
