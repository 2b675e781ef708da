#include "macd/residue.hpp"

#include <stdexcept>
#include <string>

namespace macd {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t result = 1;
  base %= n;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::domain_error("inv_mod: zero modulus");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) {
    if (n == 1) return 0;
    throw std::domain_error("inv_mod: " + std::to_string(a) + " is not a unit modulo " +
                            std::to_string(n));
  }
  return reduce_signed(t, n);
}

std::uint64_t geom_sum_mod(std::uint64_t q, std::uint64_t count, std::uint64_t n) {
  if (n == 1) return 0;
  q %= n;
  // invariant: sum = sigma(q, done), power = q^done
  std::uint64_t sum = 0, power = 1;
  for (int bit = 63; bit >= 0; --bit) {
    // done -> 2 * done
    sum = mul_mod(sum, add_mod(1, power, n) % n, n);
    power = mul_mod(power, power, n);
    if ((count >> bit) & 1) {
      // done -> done + 1
      sum = add_mod(1 % n, mul_mod(q, sum, n), n);
      power = mul_mod(power, q, n);
    }
  }
  return sum;
}

Residue::Residue(std::uint64_t value, std::uint64_t modulus)
    : value_(0), modulus_(modulus) {
  if (modulus == 0 || modulus >= (std::uint64_t{1} << 62))
    throw std::invalid_argument("Residue: modulus out of range");
  value_ = value % modulus;
}

Residue Residue::from_signed(std::int64_t value, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("Residue: modulus out of range");
  return Residue(reduce_signed(value, modulus), modulus);
}

static void require_same(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("Residue: mismatched moduli");
}

Residue Residue::operator+(const Residue& o) const {
  require_same(*this, o);
  return Residue(add_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same(*this, o);
  return Residue(sub_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same(*this, o);
  return Residue(mul_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-() const {
  return Residue(sub_mod(0, value_, modulus_), modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " mod " << r.modulus();
}

Residue mod_pow(Residue base, std::uint64_t exp) {
  return Residue(pow_mod(base.value(), exp, base.modulus()), base.modulus());
}

Residue mod_inv(Residue a) {
  return Residue(inv_mod(a.value(), a.modulus()), a.modulus());
}

Residue geom_sum(Residue q, std::uint64_t n) {
  return Residue(geom_sum_mod(q.value(), n, q.modulus()), q.modulus());
}

unsigned vp(std::int64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("vp: base must be at least 2");
  if (n == 0) return kInfiniteValuation;
  std::uint64_t u = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  unsigned v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned e = 0; e < exp; ++e) {
    if (base != 0 && r > (cap - 1) / base) return 0;
    r *= base;
  }
  return r < cap ? r : 0;
}

std::uint64_t plog_mod(std::uint64_t q, std::uint64_t y, std::uint64_t p,
                       std::uint64_t order, std::uint64_t n) {
  q %= n;
  y %= n;
  if (order == 1) {
    if (y != 1 % n) throw std::domain_error("plog_mod: no logarithm");
    return 0;
  }
  const std::uint64_t q_inv = inv_mod(q, n);
  const std::uint64_t gamma = pow_mod(q, order / p, n);  // order p
  std::uint64_t t = 0, weight = 1;
  std::uint64_t rest = y;  // y * q^(-t)
  for (std::uint64_t k = order; k > 1; k /= p) {
    const std::uint64_t h = pow_mod(rest, k / p, n);
    std::uint64_t d = 0, g = 1;
    while (g != h) {
      if (++d == p) throw std::domain_error("plog_mod: no logarithm");
      g = mul_mod(g, gamma, n);
    }
    t += d * weight;
    rest = mul_mod(rest, pow_mod(q_inv, d * weight, n), n);
    weight *= p;
  }
  if (rest != 1 % n) throw std::domain_error("plog_mod: no logarithm");
  return t;
}

}  // namespace macd
