#include "macd/pcgroup.hpp"

#include <atomic>
#include <ostream>
#include <sstream>

#include "macd/residue.hpp"

namespace macd {

namespace {

std::atomic<std::uint32_t> next_group_id{1};

// Tables are stored only below this many entries; larger groups fall back
// to modular exponentiation and logarithms.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
constexpr std::uint64_t kJumpLimit = std::uint64_t{1} << 20;  // entries over all levels

constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 63;

unsigned order_exponent(GroupKind kind) {
  switch (kind) {
    case GroupKind::J: return 7;
    case GroupKind::H: return 6;
    case GroupKind::K: return 5;
  }
  return 7;
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::J: return "J";
    case GroupKind::H: return "H";
    case GroupKind::K: return "K";
  }
  return "?";
}

GroupKind parse_kind(std::string_view name) {
  if (name == "J" || name == "j") return GroupKind::J;
  if (name == "H" || name == "h") return GroupKind::H;
  if (name == "K" || name == "k") return GroupKind::K;
  throw std::invalid_argument("unknown group kind '" + std::string(name) + "'");
}

std::uint64_t GroupParams::pm() const { return checked_pow(p, m); }

std::uint64_t GroupParams::ell() const { return (alpha - 1) / pm(); }

void validate(const GroupParams& params) {
  const auto p = params.p;
  if (!is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidParameter("p must be odd");
  if (params.m < 1) throw InvalidParameter("m must be at least 1");
  if (checked_pow(p, 3 * params.m, kModulusCap) == 0)
    throw InvalidParameter("p^(3m) exceeds the modulus cap 2^40");
  if (params.alpha <= 1) throw InvalidParameter("alpha must be greater than 1");
  if (params.alpha >= (std::uint64_t{1} << 62)) throw InvalidParameter("alpha is too large");
  const unsigned v = vp(static_cast<std::int64_t>(params.alpha - 1), p);
  if (v != params.m)
    throw InvalidParameter("v_p(alpha - 1) = " + std::to_string(v) + " but must equal m = " +
                           std::to_string(params.m));
  if (p == 3 && params.m == 1 && params.ell() % 3 != 1)
    throw InvalidParameter("p = 3, m = 1 requires (alpha - 1)/3 = 1 mod 3");
}

GroupParams params_from_ell(std::uint64_t p, unsigned m, std::uint64_t ell) {
  const std::uint64_t pm = checked_pow(p, m, kModulusCap);
  if (pm == 0) throw InvalidParameter("p^m exceeds the modulus cap");
  if (ell >= (std::uint64_t{1} << 62) / pm) throw InvalidParameter("ell is too large");
  return GroupParams{p, m, 1 + ell * pm};
}

std::ostream& operator<<(std::ostream& os, const Element& e) {
  return os << '(' << e.i << ',' << e.j << ',' << e.k << ')';
}

GroupPtr make_group(const GroupParams& params, GroupKind kind) {
  return std::make_shared<const Group>(params, kind);
}

Group::Group(const GroupParams& params, GroupKind kind)
    : params_(params), kind_(kind), id_(next_group_id.fetch_add(1)) {
  validate(params);
  const auto p = params.p;
  const auto m = params.m;
  if (checked_pow(p, order_exponent(kind) * m, kOrderCap) == 0)
    throw InvalidParameter("group order p^" + std::to_string(order_exponent(kind) * m) +
                           " exceeds 2^63");
  pm_ = checked_pow(p, m);
  const std::uint64_t p2m = pm_ * pm_;
  switch (kind) {
    case GroupKind::J:
      mod_a_ = p2m * pm_;
      mod_b_ = p2m;
      mod_c_ = p2m;
      order_b_ = p2m * pm_;
      break;
    case GroupKind::H:
      mod_a_ = mod_b_ = mod_c_ = order_b_ = p2m;
      break;
    case GroupKind::K:
      mod_a_ = mod_b_ = order_b_ = p2m;
      mod_c_ = pm_;
      break;
  }
  order_ = mod_a_ * mod_b_ * mod_c_;
  alpha_a_ = params.alpha % mod_a_;
  alpha_a_inv_ = inv_mod(alpha_a_, mod_a_);
  alpha_b_ = params.alpha % order_b_;
  alpha_b_inv_ = inv_mod(alpha_b_, order_b_);

  log_modulus_ = pm_ * mod_a_;
  log_base_ = inv_mod(params.alpha % log_modulus_, log_modulus_);

  if (mod_a_ <= kTableLimit) {
    // crossing is the inverse of t -> 1 + q + ... + q^(t-1), q = alpha^-1
    cross_.assign(mod_a_, mod_a_);
    std::uint64_t x = 0;
    for (std::uint64_t t = 0; t < mod_a_; ++t) {
      if (cross_[x] != mod_a_) throw std::logic_error("crossing map is not a single cycle");
      cross_[x] = t;
      x = add_mod(mul_mod(x, alpha_a_inv_, mod_a_), 1 % mod_a_, mod_a_);
    }
  }
  if (mod_c_ <= kTableLimit) {
    pow_b_.resize(mod_c_);
    pow_b_inv_.resize(mod_c_);
    pow_a_inv_.resize(mod_c_);
    std::uint64_t x = 1, y = 1, z = 1;
    for (std::uint64_t e = 0; e < mod_c_; ++e) {
      pow_b_[e] = x;
      pow_b_inv_[e] = y;
      pow_a_inv_[e] = z;
      x = mul_mod(x, alpha_b_, order_b_);
      y = mul_mod(y, alpha_b_inv_, order_b_);
      z = mul_mod(z, alpha_a_inv_, mod_a_);
    }
  }
  unsigned levels = 0;
  while ((std::uint64_t{1} << levels) < mod_b_) ++levels;
  if (!cross_.empty() && !pow_b_inv_.empty() && mod_a_ * levels <= kJumpLimit) {
    jumps_.assign(levels, std::vector<Jump>(mod_a_));
    for (std::uint64_t n = 0; n < mod_a_ && levels > 0; ++n) {
      const std::uint64_t next = cross_[n], nc = next % mod_c_;
      jumps_[0][n] = {next, sub_mod(0, nc, mod_c_), pow_b_inv_[nc], 1 % order_b_};
    }
    for (unsigned L = 1; L < levels; ++L)
      for (std::uint64_t n = 0; n < mod_a_; ++n) {
        const Jump& s1 = jumps_[L - 1][n];
        const Jump& s2 = jumps_[L - 1][s1.next];
        jumps_[L][n] = {s2.next, add_mod(s1.gamma, s2.gamma, mod_c_),
                        mul_mod(s2.mul, s1.mul, order_b_),
                        add_mod(mul_mod(s2.mul, s1.add, order_b_), s2.add, order_b_)};
      }
  }
  if (!relations_hold()) throw std::logic_error("defining relations fail for " + name());
}

std::string Group::name() const {
  std::ostringstream os;
  os << to_string(kind_) << '(' << params_.p << ',' << params_.m << ',' << params_.alpha << ')';
  return os.str();
}

Element Group::a() const { return {1 % mod_a_, 0, 0, id_}; }
Element Group::b() const { return element(0, 1, 0); }
Element Group::c() const { return {0, 0, 1 % mod_c_, id_}; }

Element Group::element(std::int64_t i, std::int64_t j, std::int64_t k) const {
  return fold(reduce_signed(i, mod_a_), reduce_signed(j, order_b_), reduce_signed(k, mod_c_));
}

bool Group::is_normal(const Element& g) const noexcept {
  return g.i < mod_a_ && g.j < mod_b_ && g.k < mod_c_;
}

bool Group::contains(const Element& g) const noexcept { return g.group == id_ && is_normal(g); }

bool Group::is_identity(const Element& g) const noexcept {
  return g.i == 0 && g.j == 0 && g.k == 0;
}

void Group::check(const Element& g) const {
  if (g.group != id_) throw std::invalid_argument("element does not belong to " + name());
  if (!is_normal(g)) throw std::invalid_argument("element exponents out of range");
}

Element Group::fold(std::uint64_t i, std::uint64_t j, std::uint64_t k) const {
  if (j >= mod_b_) {
    // only in J: B^(p^2m) = A^(-p^2m)
    const std::uint64_t q = j / mod_b_;
    i = sub_mod(i, mul_mod(q, mod_b_, mod_a_), mod_a_);
    j %= mod_b_;
  }
  return {i, j, k, id_};
}

std::uint64_t Group::alpha_b_pow(std::uint64_t e) const {
  return pow_b_.empty() ? pow_mod(alpha_b_, e, order_b_) : pow_b_[e];
}

std::uint64_t Group::alpha_b_inv_pow(std::uint64_t e) const {
  return pow_b_inv_.empty() ? pow_mod(alpha_b_inv_, e, order_b_) : pow_b_inv_[e];
}

std::uint64_t Group::alpha_a_inv_pow(std::uint64_t e) const {
  return pow_a_inv_.empty() ? pow_mod(alpha_a_inv_, e, mod_a_) : pow_a_inv_[e];
}

std::uint64_t Group::crossing(std::uint64_t n) const {
  if (n >= mod_a_) throw std::out_of_range("crossing: argument out of range");
  if (!cross_.empty()) return cross_[n];
  // q^t = 1 + (q - 1) n modulo p^m |A|, where q = alpha^-1
  const std::uint64_t qm1 = sub_mod(log_base_, 1, log_modulus_);
  const std::uint64_t y = add_mod(1, mul_mod(qm1, n, log_modulus_), log_modulus_);
  return plog_mod(log_base_, y, params_.p, mod_a_, log_modulus_);
}

Element Group::multiply(const Element& g, const Element& h) const {
  check(g);
  check(h);
  // C^k A^x = A^(x alpha^-k) C^k
  std::uint64_t n = mul_mod(h.i, alpha_a_inv_pow(g.k), mod_a_);
  // B^j A^n = A^(n_j) X_j ... X_1 with X_t = B C^(-n_t) and n_t = crossing(n_(t-1))
  std::uint64_t beta = 0, gamma = 0;
  if (!jumps_.empty()) {
    for (unsigned L = 0; (g.j >> L) != 0; ++L) {
      if (((g.j >> L) & 1) == 0) continue;
      const Jump& s = jumps_[L][n];
      beta = add_mod(mul_mod(s.mul, beta, order_b_), s.add, order_b_);
      gamma = add_mod(gamma, s.gamma, mod_c_);
      n = s.next;
    }
  } else {
    for (std::uint64_t t = 0; t < g.j; ++t) {
      n = crossing(n);
      const std::uint64_t nc = n % mod_c_;
      beta = add_mod(1 % order_b_, mul_mod(beta, alpha_b_inv_pow(nc), order_b_), order_b_);
      gamma = sub_mod(gamma, nc, mod_c_);
    }
  }
  const std::uint64_t i = add_mod(g.i, n, mod_a_);
  const std::uint64_t cexp = add_mod(gamma, g.k, mod_c_);
  // C^cexp B^y = B^(y alpha^cexp) C^cexp
  beta = add_mod(beta, mul_mod(h.j, alpha_b_pow(cexp), order_b_), order_b_);
  return fold(i, beta, add_mod(cexp, h.k, mod_c_));
}

Element Group::multiply_naive(const Element& g, const Element& h) const {
  check(g);
  check(h);
  // move A^x left through C^k one C at a time: C A^x = A^(x alpha^-1) C
  std::uint64_t n = h.i;
  for (std::uint64_t c = 0; c < g.k; ++c) n = mul_mod(n, alpha_a_inv_, mod_a_);
  // move A^n left through B^j one B at a time. Each B A^x = A B C^-1 A^(x-1)
  // = A B A^((x-1) alpha) C^-1, so one A escapes and one C^-1 is left behind.
  std::uint64_t beta = 0, gamma = 0;  // the word B^beta C^gamma built so far
  for (std::uint64_t t = 0; t < g.j; ++t) {
    std::uint64_t steps = 0;
    for (std::uint64_t x = n; x != 0; ++steps) {
      if (steps > mod_a_) throw std::logic_error("naive collection did not terminate");
      x = mul_mod(alpha_a_, sub_mod(x, 1, mod_a_), mod_a_);
    }
    n = steps;
    // B C^-n B^beta C^gamma: push each C^-1 across B^beta (C^-1 B = B^(alpha^-1) C^-1)
    std::uint64_t moved = beta;
    for (std::uint64_t c = 0; c < n % mod_c_; ++c) moved = mul_mod(moved, alpha_b_inv_, order_b_);
    beta = add_mod(1 % order_b_, moved, order_b_);
    gamma = sub_mod(gamma, n % mod_c_, mod_c_);
  }
  const std::uint64_t i = add_mod(g.i, n, mod_a_);
  const std::uint64_t cexp = add_mod(gamma, g.k, mod_c_);
  // append the B letters of h one at a time: C^cexp B = B^(alpha^cexp) C^cexp
  std::uint64_t step = 1 % order_b_;
  for (std::uint64_t c = 0; c < cexp; ++c) step = mul_mod(step, alpha_b_, order_b_);
  for (std::uint64_t y = 0; y < h.j; ++y) beta = add_mod(beta, step, order_b_);
  return fold(i, beta, add_mod(cexp, h.k, mod_c_));
}

Element Group::inverse(const Element& g) const {
  check(g);
  const Element ck{0, 0, sub_mod(0, g.k, mod_c_), id_};
  const Element bj = fold(0, sub_mod(0, g.j, order_b_), 0);
  const Element ai{sub_mod(0, g.i, mod_a_), 0, 0, id_};
  return multiply(multiply(ck, bj), ai);
}

Element Group::power(const Element& g, std::int64_t n) const {
  check(g);
  Element base = g;
  std::uint64_t e;
  if (n < 0) {
    base = inverse(g);
    e = static_cast<std::uint64_t>(-(n + 1)) + 1;
  } else {
    e = static_cast<std::uint64_t>(n);
  }
  Element result = identity();
  while (e != 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

Element Group::conjugate(const Element& g, const Element& h) const {
  return multiply(multiply(inverse(h), g), h);
}

Element Group::commutator(const Element& g, const Element& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

std::uint64_t Group::element_order(const Element& g) const {
  check(g);
  std::uint64_t order = 1;
  Element x = g;
  while (!is_identity(x)) {
    x = power(x, static_cast<std::int64_t>(params_.p));
    order *= params_.p;
  }
  return order;
}

std::uint64_t Group::index(const Element& g) const {
  check(g);
  return (g.i * mod_b_ + g.j) * mod_c_ + g.k;
}

Element Group::unindex(std::uint64_t idx) const {
  if (idx >= order_) throw std::out_of_range("unindex: index out of range");
  const std::uint64_t k = idx % mod_c_;
  idx /= mod_c_;
  return {idx / mod_b_, idx % mod_b_, k, id_};
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < mod_a_; ++i)
    for (std::uint64_t j = 0; j < mod_b_; ++j)
      for (std::uint64_t k = 0; k < mod_c_; ++k) out.push_back({i, j, k, id_});
  return out;
}

bool Group::relations_hold() const {
  const Element A = a(), B = b();
  const auto alpha = static_cast<std::int64_t>(params_.alpha);
  const auto p = static_cast<std::int64_t>(params_.p);
  if (commutator(A, B) != c()) return false;
  if (conjugate(A, commutator(A, B)) != power(A, alpha)) return false;
  if (conjugate(B, commutator(B, A)) != power(B, alpha)) return false;
  const auto oa = static_cast<std::int64_t>(order_a());
  const auto ob = static_cast<std::int64_t>(order_b());
  const auto oc = static_cast<std::int64_t>(order_c());
  if (!is_identity(power(A, oa)) || is_identity(power(A, oa / p))) return false;
  if (!is_identity(power(B, ob)) || is_identity(power(B, ob / p))) return false;
  if (!is_identity(power(c(), oc)) || is_identity(power(c(), oc / p))) return false;
  if (kind_ == GroupKind::J) {
    const auto e = static_cast<std::int64_t>(mod_b_);
    if (!is_identity(multiply(power(A, e), power(B, e)))) return false;
  }
  return true;
}

}  // namespace macd
