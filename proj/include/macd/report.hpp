#pragma once

// Result records shared by the verification suites and the CLI.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "macd/pcgroup.hpp"

namespace macd {

enum class Status { Pass, Fail, Skipped };

/// Observed value of a check that was not run because of the work budget.
inline constexpr const char* kSkippedObserved = "skipped-over-budget";

std::string_view to_string(Status status);

struct Check {
  std::string id;
  std::string expected;
  std::string observed;
  Status status = Status::Pass;
  double runtime_ms = 0;
  std::string note;
  bool informational = false;  // recorded, never affects the status
};

/// One theorem or presentation suite. The headline check carries the
/// theorem id; sub-checks are named "<id>.<name>".
class TheoremReport {
 public:
  TheoremReport(std::string id, const GroupParams& params);

  const std::string& id() const noexcept { return id_; }
  const GroupParams& params() const noexcept { return params_; }

  /// Compares expected and observed as strings.
  void check(const std::string& name, const std::string& expected, const std::string& observed,
             const std::string& note = "");
  void check(const std::string& name, std::uint64_t expected, std::uint64_t observed,
             const std::string& note = "");
  void check_true(const std::string& name, bool observed, const std::string& note = "");
  void skip(const std::string& name, const std::string& expected, const std::string& reason);
  /// Recorded for information only; never affects the status.
  void info(const std::string& name, const std::string& observed, const std::string& note = "");

  void set_headline(const std::string& expected, const std::string& observed);
  void skip_headline(const std::string& expected, const std::string& reason);

  /// Fail if any check failed, otherwise Skipped if any was skipped.
  Status status() const;
  /// Headline first, then sub-checks; the headline status is the aggregate.
  std::vector<Check> flatten() const;
  const std::vector<Check>& sub_checks() const noexcept { return checks_; }
  double runtime_ms() const;
  /// Stops the clock; called once all checks are recorded.
  void finish() { lap(); }

 private:
  double lap();

  std::string id_;
  GroupParams params_;
  std::string expected_ = "", observed_ = "";
  bool headline_set_ = false;
  bool headline_skipped_ = false;
  std::string headline_note_;
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_, last_;
};

}  // namespace macd
