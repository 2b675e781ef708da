#pragma once

// Command-line surface: info, verify and report.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "macd/theorems.hpp"

namespace macd {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInvalid = 2 };

/// Suites touching the given kind (for --kind filtering of the default set).
bool suite_involves(const std::string& id, GroupKind kind);

/// "A^9 C^3" style rendering of a normal form; "1" for the identity.
std::string word(const Element& g);

/// The machine-readable report. All numbers are decimal strings.
std::string reports_to_json(const GroupParams& params, const std::string& kind,
                            const std::vector<TheoremReport>& reports, bool deterministic);

/// Budget from MACD_BUDGET when set and parseable, else the default.
std::uint64_t default_budget();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macd
