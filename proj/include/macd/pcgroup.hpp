#pragma once

// Normal-form arithmetic for the groups J, H and K.
//
// Every element is stored as A^i B^j C^k with C = [A, B]. Conventions:
// [x, y] = x^-1 y^-1 x y, x^y = y^-1 x y, and products compose left to right.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace macd {

enum class GroupKind { J, H, K };

std::string_view to_string(GroupKind kind);
GroupKind parse_kind(std::string_view name);  // throws std::invalid_argument

/// Raised for parameter tuples outside the admissible family.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupParams {
  std::uint64_t p = 3;
  unsigned m = 1;
  std::uint64_t alpha = 4;

  std::uint64_t pm() const;   // p^m
  std::uint64_t ell() const;  // (alpha - 1) / p^m
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Throws InvalidParameter unless (p, m, alpha) is admissible.
void validate(const GroupParams& params);

/// Alpha from the shorthand alpha = 1 + ell * p^m.
GroupParams params_from_ell(std::uint64_t p, unsigned m, std::uint64_t ell);

struct Element {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint32_t group = 0;  // id of the owning Group

  friend bool operator==(const Element&, const Element&) = default;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Builds and checks one group; throws InvalidParameter or std::logic_error.
GroupPtr make_group(const GroupParams& params, GroupKind kind);

class Group {
 public:
  Group(const GroupParams& params, GroupKind kind);
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const GroupParams& params() const noexcept { return params_; }
  GroupKind kind() const noexcept { return kind_; }
  std::uint32_t id() const noexcept { return id_; }
  std::string name() const;  // e.g. "J(3,1,4)"

  std::uint64_t p() const noexcept { return params_.p; }
  unsigned m() const noexcept { return params_.m; }
  std::uint64_t pm() const noexcept { return pm_; }

  std::uint64_t order() const noexcept { return order_; }
  // Exponent ranges of the normal form.
  std::uint64_t mod_a() const noexcept { return mod_a_; }
  std::uint64_t mod_b() const noexcept { return mod_b_; }
  std::uint64_t mod_c() const noexcept { return mod_c_; }
  // Element orders of A, B and C.
  std::uint64_t order_a() const noexcept { return mod_a_; }
  std::uint64_t order_b() const noexcept { return order_b_; }
  std::uint64_t order_c() const noexcept { return mod_c_; }

  Element identity() const noexcept { return {0, 0, 0, id_}; }
  Element a() const;
  Element b() const;
  Element c() const;

  /// A^i B^j C^k for arbitrary integers, reduced to normal form.
  Element element(std::int64_t i, std::int64_t j, std::int64_t k) const;
  bool is_normal(const Element& g) const noexcept;
  bool contains(const Element& g) const noexcept;

  Element multiply(const Element& g, const Element& h) const;
  /// Reference product by literal one-letter-at-a-time rewriting.
  Element multiply_naive(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  Element power(const Element& g, std::int64_t n) const;
  Element conjugate(const Element& g, const Element& h) const;   // g^h
  Element commutator(const Element& g, const Element& h) const;  // [g, h]
  std::uint64_t element_order(const Element& g) const;
  bool is_identity(const Element& g) const noexcept;

  std::uint64_t index(const Element& g) const;
  Element unindex(std::uint64_t idx) const;
  std::vector<Element> elements() const;

  /// Number of steps x -> alpha (x - 1) mod |A| needs to reach 0 from n.
  std::uint64_t crossing(std::uint64_t n) const;

  /// Re-checks the defining relations; false means the arithmetic is broken.
  bool relations_hold() const;

 private:
  void check(const Element& g) const;
  Element fold(std::uint64_t i, std::uint64_t j_mod_order_b, std::uint64_t k) const;
  std::uint64_t alpha_b_pow(std::uint64_t e) const;      // alpha^e mod ord(B), e mod |C|
  std::uint64_t alpha_b_inv_pow(std::uint64_t e) const;  // alpha^-e mod ord(B)
  std::uint64_t alpha_a_inv_pow(std::uint64_t e) const;  // alpha^-e mod |A|

  GroupParams params_;
  GroupKind kind_;
  std::uint32_t id_;
  std::uint64_t pm_;
  std::uint64_t mod_a_, mod_b_, mod_c_, order_b_, order_;
  std::uint64_t alpha_a_, alpha_a_inv_, alpha_b_, alpha_b_inv_;
  // crossing() by logarithm when the table is not stored
  std::uint64_t log_modulus_, log_base_;
  std::vector<std::uint64_t> cross_;
  // 2^L crossings from n: landing point, C exponent, and beta -> mul beta + add
  struct Jump {
    std::uint64_t next, gamma, mul, add;
  };
  std::vector<std::vector<Jump>> jumps_;
  std::vector<std::uint64_t> pow_b_, pow_b_inv_, pow_a_inv_;
};

}  // namespace macd
