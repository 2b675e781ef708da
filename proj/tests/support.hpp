#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <random>

#include "macd/pcgroup.hpp"

namespace macd {

// readable parameter names in test output
inline void PrintTo(GroupKind kind, std::ostream* os) { *os << to_string(kind); }

}  // namespace macd

namespace macd::testing {

inline const std::array<GroupParams, 4> kReference{{{3, 1, 4}, {5, 1, 6}, {3, 2, 10}, {7, 1, 8}}};
inline constexpr GroupParams P1{3, 1, 4};
inline constexpr GroupParams P2{5, 1, 6};
inline constexpr GroupParams P3{3, 2, 10};
inline constexpr GroupParams P4{7, 1, 8};
inline constexpr std::array<GroupKind, 3> kKinds{GroupKind::J, GroupKind::H, GroupKind::K};

// hand-rolled generators for the property tests
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Element element(const Group& G) { return G.unindex(below(G.order())); }
  /// random normal form built directly from exponents, bypassing unindex
  Element exponents(const Group& G) {
    return G.element(between(-1000, 1000), between(-1000, 1000), between(-1000, 1000));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace macd::testing
