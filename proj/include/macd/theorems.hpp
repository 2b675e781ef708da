#pragma once

// Verification suites: one report per theorem, presentation or identity.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macd/autgroup.hpp"
#include "macd/report.hpp"

namespace macd {

enum class Mode { Closure, Brute };

struct VerifyOptions {
  Mode mode = Mode::Closure;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::uint64_t beta = 0;  // second parameter for ele; 0 picks one
};

/// Lazily built groups, series and automorphism sets for one (p, m, alpha).
class Workspace {
 public:
  Workspace(const GroupParams& params, VerifyOptions options = {});

  const GroupParams& params() const noexcept { return params_; }
  const VerifyOptions& options() const noexcept { return options_; }

  const GroupPtr& group(GroupKind kind);
  const CentralSeries& series(GroupKind kind);
  /// Generators whose closure is the full automorphism group.
  std::vector<Morphism> aut_generators(GroupKind kind);
  /// Full Aut by the configured mode; throws BudgetExceeded.
  const AutSet& aut(GroupKind kind);
  const AutSet& aut_closure(GroupKind kind);
  const AutSet& aut_brute(GroupKind kind);
  const AutSet& inner_auts(GroupKind kind);

 private:
  static std::size_t slot(GroupKind kind) { return static_cast<std::size_t>(kind); }

  GroupParams params_;
  VerifyOptions options_;
  GroupPtr groups_[3];
  std::unique_ptr<CentralSeries> series_[3];
  std::unique_ptr<AutSet> closure_[3], brute_[3], inner_[3];
};

/// Closed-form |Aut(G)|.
std::uint64_t expected_aut_order(const GroupParams& params, GroupKind kind);

const std::vector<std::string>& theorem_ids();
const std::vector<std::string>& presentation_ids();
const std::vector<std::string>& identity_ids();
/// Theorems and presentations; what `verify --all` runs.
std::vector<std::string> default_check_ids();
bool is_known_check(const std::string& id);

TheoremReport verify_theorem(const std::string& id, Workspace& ws);
TheoremReport verify_presentation(const std::string& id, Workspace& ws);
TheoremReport verify_identity(const std::string& id, Workspace& ws);
/// Dispatches on the id; throws std::invalid_argument for unknown ids.
TheoremReport run_check(const std::string& id, Workspace& ws);

}  // namespace macd
