#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace admzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one command line (without the program name). Data goes to `out` (or --out FILE),
// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re,im" or a bare real. Throws InputError on malformed text.
std::complex<double> parse_complex(std::string_view text);

// Shortest text that reads back to the same double ("%.17g").
std::string format_double(double v);

}  // namespace admzeta::cli
