#pragma once

// Exact arithmetic in Z/p^e and p-adic helpers shared by every other module.

#include <cstdint>
#include <limits>
#include <ostream>

namespace macd {

/// Marker returned by vp(0): compares greater than every finite valuation.
inline constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

/// Moduli at or above this bound are rejected by group construction.
inline constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 40;

inline constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t n) {
  // a, b < n < 2^63
  std::uint64_t s = a + b;
  return s >= n ? s - n : s;
}

inline constexpr std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t n) {
  return a >= b ? a - b : a + (n - b);
}

/// Reduces a signed integer into [0, n).
inline constexpr std::uint64_t reduce_signed(std::int64_t a, std::uint64_t n) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % n;
  std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % n;  // avoids -INT64_MIN
  return n - 1 - r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// Inverse of a modulo n; throws std::domain_error when gcd(a, n) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n);

/// 1 + q + ... + q^(count-1) mod n, by doubling; never divides by q - 1.
std::uint64_t geom_sum_mod(std::uint64_t q, std::uint64_t count, std::uint64_t n);

/// An element of Z/modulus. The modulus is a prime power p^e in every use
/// inside this library; the type itself only requires modulus >= 1.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  static Residue from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

Residue mod_pow(Residue base, std::uint64_t exp);
Residue mod_inv(Residue a);
Residue geom_sum(Residue q, std::uint64_t n);

/// Exact p-adic valuation of n; kInfiniteValuation when n == 0.
unsigned vp(std::int64_t n, std::uint64_t p);

/// Deterministic primality test by trial division (p is small at desk scale).
bool is_prime(std::uint64_t n);

/// base^exp as an integer, or 0 if the result would reach `cap`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t cap = std::numeric_limits<std::uint64_t>::max());

/// Discrete logarithm in the cyclic group 1 + p^k Z_p modulo `n`: the least
/// t in [0, order) with q^t == y (mod n), where q generates a subgroup of
/// p-power order `order`. Pohlig-Hellman digit by digit; throws
/// std::domain_error if y is not a power of q.
std::uint64_t plog_mod(std::uint64_t q, std::uint64_t y, std::uint64_t p,
                       std::uint64_t order, std::uint64_t n);

}  // namespace macd
