#include "macd/report.hpp"

namespace macd {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

TheoremReport::TheoremReport(std::string id, const GroupParams& params)
    : id_(std::move(id)), params_(params), start_(std::chrono::steady_clock::now()), last_(start_) {}

double TheoremReport::lap() {
  const auto now = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
  last_ = now;
  return ms;
}

void TheoremReport::check(const std::string& name, const std::string& expected,
                          const std::string& observed, const std::string& note) {
  checks_.push_back({id_ + "." + name, expected, observed,
                     expected == observed ? Status::Pass : Status::Fail, lap(), note});
}

void TheoremReport::check(const std::string& name, std::uint64_t expected, std::uint64_t observed,
                          const std::string& note) {
  check(name, std::to_string(expected), std::to_string(observed), note);
}

void TheoremReport::check_true(const std::string& name, bool observed, const std::string& note) {
  check(name, "true", observed ? "true" : "false", note);
}

void TheoremReport::skip(const std::string& name, const std::string& expected,
                         const std::string& reason) {
  checks_.push_back({id_ + "." + name, expected, kSkippedObserved, Status::Skipped, lap(), reason});
}

void TheoremReport::info(const std::string& name, const std::string& observed,
                         const std::string& note) {
  checks_.push_back({id_ + "." + name, "", observed, Status::Pass, lap(), note, true});
}

void TheoremReport::set_headline(const std::string& expected, const std::string& observed) {
  expected_ = expected;
  observed_ = observed;
  headline_set_ = true;
  headline_skipped_ = false;
}

void TheoremReport::skip_headline(const std::string& expected, const std::string& reason) {
  expected_ = expected;
  observed_ = kSkippedObserved;
  headline_set_ = true;
  headline_skipped_ = true;
  headline_note_ = reason;
}

Status TheoremReport::status() const {
  bool skipped = headline_skipped_;
  if (headline_set_ && !headline_skipped_ && expected_ != observed_) return Status::Fail;
  for (std::size_t n = 0; n < checks_.size(); ++n) {
    if (checks_[n].informational) continue;
    if (checks_[n].status == Status::Fail) return Status::Fail;
    if (checks_[n].status == Status::Skipped) skipped = true;
  }
  return skipped ? Status::Skipped : Status::Pass;
}

double TheoremReport::runtime_ms() const {
  return std::chrono::duration<double, std::milli>(last_ - start_).count();
}

std::vector<Check> TheoremReport::flatten() const {
  std::vector<Check> out;
  out.push_back({id_, expected_, observed_, status(), runtime_ms(), headline_note_});
  out.insert(out.end(), checks_.begin(), checks_.end());
  return out;
}

}  // namespace macd
