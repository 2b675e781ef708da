#pragma once

// Subgroups given by an explicit element set: centers, the upper central
// series, centralizers, closures, and the projections J -> H -> K.

#include <cstdint>
#include <utility>
#include <vector>

#include "macd/pcgroup.hpp"

namespace macd {

class SubgroupSet {
 public:
  /// `members` is indexed by Group::index and must describe a subgroup.
  SubgroupSet(GroupPtr group, std::vector<bool> members, std::vector<Element> generators);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::uint64_t order() const noexcept { return indices_.size(); }
  bool contains(const Element& g) const;
  bool contains_index(std::uint64_t idx) const { return idx < members_.size() && members_[idx]; }
  const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }
  std::vector<Element> elements() const;
  const std::vector<Element>& generators() const noexcept { return generators_; }

  bool is_abelian() const;
  /// Elementwise subgroup closure test; exhaustive.
  bool is_closed() const;
  bool is_subset_of(const SubgroupSet& other) const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.group_->id() == b.group_->id() && a.indices_ == b.indices_;
  }

 private:
  GroupPtr group_;
  std::vector<bool> members_;
  std::vector<std::uint64_t> indices_;
  std::vector<Element> generators_;
};

/// Upper central series Z_0 = 1 < Z_1 < ... < Z_c = G.
class CentralSeries {
 public:
  CentralSeries(GroupPtr group, std::vector<std::uint8_t> levels, unsigned nilpotency_class);

  const Group& group() const noexcept { return *group_; }
  unsigned nilpotency_class() const noexcept { return class_; }
  const SubgroupSet& term(unsigned i) const;  // i > class gives G
  const std::vector<SubgroupSet>& terms() const noexcept { return terms_; }
  /// Least i with g in Z_i.
  unsigned level(const Element& g) const;
  unsigned level_of_index(std::uint64_t idx) const { return levels_[idx]; }

 private:
  GroupPtr group_;
  std::vector<std::uint8_t> levels_;
  unsigned class_;
  std::vector<SubgroupSet> terms_;
};

SubgroupSet center(const GroupPtr& group);
CentralSeries upper_central_series(const GroupPtr& group);
SubgroupSet centralizer(const GroupPtr& group, const Element& g);
SubgroupSet closure(const GroupPtr& group, const std::vector<Element>& generators);

/// (i mod p, j mod p): the image in G / Phi(G) = (Z/p)^2.
std::pair<std::uint64_t, std::uint64_t> frattini_image(const Group& group, const Element& g);

/// Canonical projection J -> H or H -> K (or J -> K); A, B map to the
/// corresponding generators.
Element project(const Element& g, const Group& from, const Group& to);

/// g in Z_i(G), decided by induction on commutators with the generators
/// without enumerating G.
bool in_center_term(const Group& group, const Element& g, unsigned i);

/// Least i with g in Z_i(G), without enumeration.
unsigned center_level(const Group& group, const Element& g);

/// Nilpotency class of each family: 5 for J, 4 for H, 3 for K.
unsigned expected_class(GroupKind kind);

/// Generating sets of Z_1 .. Z_(c-1) in closed form, outermost term excluded.
std::vector<std::vector<Element>> known_series_generators(const Group& group);

}  // namespace macd
