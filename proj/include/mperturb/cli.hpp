#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mperturb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;

inline constexpr const char* kReportSchema = "mperturb-report/1";

// Runs one command line (without the program name). The report goes to out,
// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mperturb::cli
