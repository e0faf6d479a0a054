#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fratio/gamma.hpp"

namespace fratio::cli {

/// Exit codes: 0 success, 2 parse or validation failure, 3 internal
/// consistency failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Parses the compact "nu:gamma;nu:gamma" form. Whitespace is ignored;
/// duplicate nu, zero gamma and malformed entries are errors.
GammaVector parse_gamma(const std::string& text);

/// Canonical compact rendering, sorted by nu.
std::string format_gamma(const GammaVector& g);

/// Runs one CLI invocation. args excludes the program name. All normal
/// output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fratio::cli
