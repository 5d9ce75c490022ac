#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace renyivar::cli {

enum ExitCode : int { kPass = 0, kCertificationFailed = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name, e.g.
/// {"solve", "problem.json", "--csv"}. The certificate goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g rendering used for every floating-point field.
std::string format_double(double x);

}  // namespace renyivar::cli
