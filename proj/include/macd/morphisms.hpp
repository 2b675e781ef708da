#pragma once

// Endomorphisms of J, H and K given by the images of the two generators.
// Composition runs left to right: compose(f, g) applies f first.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "macd/pcgroup.hpp"
#include "macd/structure.hpp"

namespace macd {

class Morphism {
 public:
  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Element& image_a() const noexcept { return img_a_; }
  const Element& image_b() const noexcept { return img_b_; }
  const Element& image_c() const noexcept { return img_c_; }

  /// index(imgA) * |G| + index(imgB); throws std::overflow_error if |G| >= 2^32.
  std::uint64_t key() const;

  friend bool operator==(const Morphism& x, const Morphism& y) {
    return x.group_->id() == y.group_->id() && x.img_a_ == y.img_a_ && x.img_b_ == y.img_b_;
  }

  /// For images already known to satisfy the relations (compositions of
  /// validated maps, keys read back from an automorphism set).
  static Morphism trusted(GroupPtr group, const Element& x, const Element& y);
  static Morphism from_key(GroupPtr group, std::uint64_t key);

 private:
  Morphism(GroupPtr group, const Element& x, const Element& y);

  GroupPtr group_;
  Element img_a_, img_b_, img_c_;
};

struct RelationFailure {
  std::string relation;
  Element observed;
  Element expected;
};

/// First defining relation of the presentation of `kind` with parameter
/// `alpha` that fails for x, y in `target`.
std::optional<RelationFailure> check_relations(const Group& target, const Element& x,
                                               const Element& y, GroupKind kind,
                                               std::uint64_t alpha);

/// Checks every defining relation of the group's kind on (x, y).
std::variant<Morphism, RelationFailure> hom_from_images(const GroupPtr& group, const Element& x,
                                                        const Element& y);
/// As hom_from_images but throws std::invalid_argument naming the relation.
Morphism require_hom(const GroupPtr& group, const Element& x, const Element& y,
                     const std::string& what);

Morphism identity_morphism(const GroupPtr& group);
Element evaluate(const Morphism& f, const Element& g);

/// Image of every element, indexed by Group::index.
class MorphismTable {
 public:
  explicit MorphismTable(const Morphism& f);
  std::uint64_t operator[](std::uint64_t idx) const { return images_[idx]; }
  Element apply(const Element& g) const;
  std::size_t size() const noexcept { return images_.size(); }
  bool is_bijective() const;

 private:
  GroupPtr group_;
  std::vector<std::uint64_t> images_;
};

/// Frattini determinant test (Burnside basis theorem).
bool is_automorphism(const Morphism& f);
/// Closure-based generation test; slow, used to cross-check the above.
bool generates(const GroupPtr& group, const Element& x, const Element& y);

Morphism compose(const Morphism& f, const Morphism& g);
Morphism invert(const Morphism& f);
Morphism power(const Morphism& f, std::int64_t n);
Morphism conjugate(const Morphism& f, const Morphism& w);    // w^-1 f w
Morphism commutator(const Morphism& f, const Morphism& g);   // f^-1 g^-1 f g
std::uint64_t morphism_order(const Morphism& f);

Morphism inner(const GroupPtr& group, const Element& g);

/// Least i with imgA A^-1 and imgB B^-1 in Z_i.
unsigned aut_level(const Morphism& f);
unsigned aut_level(const Morphism& f, const CentralSeries& series);

/// The map induced on a quotient by the canonical projection.
Morphism induced(const Morphism& f, const GroupPtr& target);

/// Action on K / Z_2(K) = (Z/p^m)^2, rows are the images of a and b.
struct QuotientMatrix {
  std::array<std::uint64_t, 4> e{};  // row-major
  std::uint64_t modulus = 1;

  QuotientMatrix operator*(const QuotientMatrix& o) const;
  std::uint64_t det() const;
  bool is_identity() const;
  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};

QuotientMatrix quotient_matrix(const Morphism& f);

// Explicit automorphisms. Each validates its preconditions and the images.

/// a -> a u, b -> b v with u, v in Z(K).
Morphism omega(const GroupPtr& k, const Element& u, const Element& v);
/// a -> a u, b -> b v with u, v in Z_2(K).
Morphism gamma(const GroupPtr& k, const Element& u, const Element& v);
/// a -> a^r, b -> b^s with r s = 1 mod p^2m.
Morphism f_aut(const GroupPtr& k, std::uint64_t r);
/// A <-> B; works for every kind.
Morphism swap(const GroupPtr& group);
/// A -> A x, B -> B y with x, y in Z_2(H).
Morphism pi_aut(const GroupPtr& h, const Element& x, const Element& y);
/// A -> A x, B -> B y with x, y in Z_2(J).
Morphism psi_aut(const GroupPtr& j, const Element& x, const Element& y);
/// d = 0 for p != 3 and 3^(m-1) ell for p = 3, reduced mod p^m.
std::uint64_t delta_constant(const GroupParams& params);
Morphism delta_aut(const GroupPtr& j);
/// A -> A A^(i p^m) B^(j p^m), B -> B B^((-i - j(2-d)) p^m) A^(j p^m).
Morphism upsilon(const GroupPtr& j, std::uint64_t i, std::uint64_t jj);

/// Smallest primitive root modulo p^e.
std::uint64_t primitive_root(std::uint64_t p, unsigned e);

}  // namespace macd
