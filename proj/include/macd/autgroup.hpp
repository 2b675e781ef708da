#pragma once

// Automorphism groups as explicit sets of generator-image keys.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macd/morphisms.hpp"
#include "macd/report.hpp"
#include "macd/structure.hpp"

namespace macd {

/// Work items (candidate pairs, or automorphisms times generators) allowed
/// for one enumeration.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t needed, std::uint64_t budget);
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_, budget_;
};

class AutSet {
 public:
  AutSet(GroupPtr group, std::vector<std::uint64_t> keys);  // sorts, drops duplicates

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::uint64_t size() const noexcept { return keys_.size(); }
  const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
  bool contains_key(std::uint64_t key) const;
  bool contains(const Morphism& f) const { return contains_key(f.key()); }
  Morphism at(std::size_t n) const { return Morphism::from_key(group_, keys_[n]); }
  std::vector<Morphism> morphisms() const;

  friend bool operator==(const AutSet& a, const AutSet& b) {
    return a.group_->id() == b.group_->id() && a.keys_ == b.keys_;
  }

 private:
  GroupPtr group_;
  std::vector<std::uint64_t> keys_;
};

/// Breadth-first closure under composition with the generators.
AutSet closure_auts(const GroupPtr& group, const std::vector<Morphism>& generators,
                    std::uint64_t budget = kDefaultBudget);

struct ScanOptions {
  bool order_prefilter = true;
  bool frattini_prefilter = true;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct ScanResult {
  AutSet auts;
  bool complete = false;
  std::uint64_t pairs = 0;  // candidate pairs in the scan range
};

/// Every pair (x, y) of G x G satisfying the relations and generating G.
ScanResult brute_force_auts(const GroupPtr& group, const ScanOptions& options = {});

/// {f : aut_level(f) <= i} for i = 0 .. class.
std::vector<std::uint64_t> filtration(const AutSet& auts, const CentralSeries& series);
/// Members of level at most i.
AutSet level_subset(const AutSet& auts, const CentralSeries& series, unsigned i);

/// Keys of compose(x, y) over X x Y.
AutSet product_set(const std::vector<Morphism>& xs, const std::vector<Morphism>& ys);
/// {inner(g) : g in G}.
AutSet inner_set(const GroupPtr& group);

/// Quotient Aut(K) / Aut_2(K) through the action on K / Z_2(K).
void dihedral_check(const AutSet& auts, TheoremReport& report);
/// Aut(K) = Aut_2(K) S <mu> with unique factors g f_r mu^j.
void unique_factorization_check(const AutSet& auts, const CentralSeries& series,
                                TheoremReport& report);

}  // namespace macd
