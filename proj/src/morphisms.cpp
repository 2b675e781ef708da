#include "macd/morphisms.hpp"

#include <stdexcept>

#include "macd/residue.hpp"

namespace macd {

namespace {

std::string describe(const Element& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")";
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_same_group(const Morphism& f, const Morphism& g) {
  if (f.group().id() != g.group().id())
    throw std::invalid_argument("morphisms act on different groups");
}

void require_kind(const GroupPtr& group, GroupKind kind, const char* what) {
  if (group->kind() != kind)
    throw std::invalid_argument(std::string(what) + " needs the group " +
                                std::string(to_string(kind)));
}

Morphism translate(const GroupPtr& group, const Element& u, const Element& v, unsigned level,
                   const char* what) {
  if (!in_center_term(*group, u, level) || !in_center_term(*group, v, level))
    throw std::invalid_argument(std::string(what) + ": arguments must lie in Z_" +
                                std::to_string(level));
  const Group& G = *group;
  return require_hom(group, G.multiply(G.a(), u), G.multiply(G.b(), v), what);
}

}  // namespace

Morphism::Morphism(GroupPtr group, const Element& x, const Element& y)
    : group_(std::move(group)), img_a_(x), img_b_(y), img_c_(group_->commutator(x, y)) {}

Morphism Morphism::trusted(GroupPtr group, const Element& x, const Element& y) {
  if (!group->contains(x) || !group->contains(y))
    throw std::invalid_argument("Morphism: images are not elements of the group");
  return Morphism(std::move(group), x, y);
}

Morphism Morphism::from_key(GroupPtr group, std::uint64_t key) {
  const std::uint64_t n = group->order();
  const Element x = group->unindex(key / n);
  const Element y = group->unindex(key % n);
  return Morphism(std::move(group), x, y);
}

std::uint64_t Morphism::key() const {
  const std::uint64_t n = group_->order();
  if (n >= (std::uint64_t{1} << 32)) throw std::overflow_error("Morphism::key: group too large");
  return group_->index(img_a_) * n + group_->index(img_b_);
}

std::optional<RelationFailure> check_relations(const Group& G, const Element& x, const Element& y,
                                               GroupKind kind, std::uint64_t alpha_value) {
  if (!G.contains(x) || !G.contains(y))
    throw std::invalid_argument("check_relations: images are not elements of " + G.name());
  const auto alpha = static_cast<std::int64_t>(alpha_value);
  const Element cxy = G.commutator(x, y);
  {
    const Element lhs = G.conjugate(x, cxy), rhs = G.power(x, alpha);
    if (lhs != rhs) return RelationFailure{"a^[a,b] = a^alpha", lhs, rhs};
  }
  {
    const Element lhs = G.conjugate(y, G.inverse(cxy)), rhs = G.power(y, alpha);
    if (lhs != rhs) return RelationFailure{"b^[b,a] = b^alpha", lhs, rhs};
  }
  const std::uint64_t pm = G.pm();
  const auto torsion = static_cast<std::int64_t>(kind == GroupKind::J ? pm * pm * pm : pm * pm);
  {
    const Element lhs = G.power(x, torsion);
    if (!G.is_identity(lhs))
      return RelationFailure{"a^" + std::to_string(torsion) + " = 1", lhs, G.identity()};
  }
  {
    const Element lhs = G.power(y, torsion);
    if (!G.is_identity(lhs))
      return RelationFailure{"b^" + std::to_string(torsion) + " = 1", lhs, G.identity()};
  }
  if (kind == GroupKind::K) {
    const Element lhs = G.power(cxy, static_cast<std::int64_t>(pm));
    if (!G.is_identity(lhs))
      return RelationFailure{"[a,b]^" + std::to_string(pm) + " = 1", lhs, G.identity()};
  }
  return std::nullopt;
}

std::variant<Morphism, RelationFailure> hom_from_images(const GroupPtr& group, const Element& x,
                                                        const Element& y) {
  if (auto fail = check_relations(*group, x, y, group->kind(), group->params().alpha))
    return *fail;
  return Morphism::trusted(group, x, y);
}

Morphism require_hom(const GroupPtr& group, const Element& x, const Element& y,
                     const std::string& what) {
  auto r = hom_from_images(group, x, y);
  if (auto* fail = std::get_if<RelationFailure>(&r))
    throw std::invalid_argument(what + ": relation " + fail->relation + " fails, got " +
                                describe(fail->observed) + " expected " + describe(fail->expected));
  return std::get<Morphism>(std::move(r));
}

Morphism identity_morphism(const GroupPtr& group) {
  return Morphism::trusted(group, group->a(), group->b());
}

Element evaluate(const Morphism& f, const Element& g) {
  const Group& G = f.group();
  if (!G.contains(g)) throw std::invalid_argument("evaluate: foreign element");
  Element r = G.power(f.image_a(), static_cast<std::int64_t>(g.i));
  r = G.multiply(r, G.power(f.image_b(), static_cast<std::int64_t>(g.j)));
  return G.multiply(r, G.power(f.image_c(), static_cast<std::int64_t>(g.k)));
}

MorphismTable::MorphismTable(const Morphism& f) : group_(f.group_ptr()) {
  const Group& G = *group_;
  images_.resize(G.order());
  std::vector<Element> pc(G.mod_c());
  pc[0] = G.identity();
  for (std::uint64_t k = 1; k < G.mod_c(); ++k) pc[k] = G.multiply(pc[k - 1], f.image_c());
  Element ai = G.identity();
  std::uint64_t idx = 0;
  for (std::uint64_t i = 0; i < G.mod_a(); ++i) {
    Element aibj = ai;
    for (std::uint64_t j = 0; j < G.mod_b(); ++j) {
      for (std::uint64_t k = 0; k < G.mod_c(); ++k) images_[idx++] = G.index(G.multiply(aibj, pc[k]));
      aibj = G.multiply(aibj, f.image_b());
    }
    ai = G.multiply(ai, f.image_a());
  }
}

Element MorphismTable::apply(const Element& g) const {
  return group_->unindex(images_[group_->index(g)]);
}

bool MorphismTable::is_bijective() const {
  std::vector<bool> seen(images_.size());
  for (auto v : images_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_automorphism(const Morphism& f) {
  const Group& G = f.group();
  const auto [xi, xj] = frattini_image(G, f.image_a());
  const auto [yi, yj] = frattini_image(G, f.image_b());
  const std::uint64_t p = G.p();
  return (xi * yj + p * p - (xj * yi) % (p * p)) % p != 0;
}

bool generates(const GroupPtr& group, const Element& x, const Element& y) {
  return closure(group, {x, y}).order() == group->order();
}

Morphism compose(const Morphism& f, const Morphism& g) {
  require_same_group(f, g);
  return Morphism::trusted(f.group_ptr(), evaluate(g, f.image_a()), evaluate(g, f.image_b()));
}

Morphism invert(const Morphism& f) {
  if (!is_automorphism(f)) throw std::invalid_argument("invert: not an automorphism");
  const Group& G = f.group();
  const MorphismTable table(f);
  const std::uint64_t ia = G.index(G.a()), ib = G.index(G.b());
  std::optional<Element> pa, pb;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] == ia) pa = G.unindex(idx);
    if (table[idx] == ib) pb = G.unindex(idx);
  }
  if (!pa || !pb) throw std::logic_error("invert: generator has no preimage");
  return Morphism::trusted(f.group_ptr(), *pa, *pb);
}

Morphism power(const Morphism& f, std::int64_t n) {
  Morphism base = n < 0 ? invert(f) : f;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Morphism result = identity_morphism(f.group_ptr());
  while (e != 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

Morphism conjugate(const Morphism& f, const Morphism& w) {
  return compose(compose(invert(w), f), w);
}

Morphism commutator(const Morphism& f, const Morphism& g) {
  return compose(compose(invert(f), invert(g)), compose(f, g));
}

std::uint64_t morphism_order(const Morphism& f) {
  const Morphism id = identity_morphism(f.group_ptr());
  Morphism x = f;
  std::uint64_t n = 1;
  while (!(x == id)) {
    x = compose(x, f);
    if (++n > f.group().order() * f.group().order())
      throw std::logic_error("morphism_order: not an automorphism");
  }
  return n;
}

Morphism inner(const GroupPtr& group, const Element& g) {
  const Group& G = *group;
  return Morphism::trusted(group, G.conjugate(G.a(), g), G.conjugate(G.b(), g));
}

unsigned aut_level(const Morphism& f) {
  const Group& G = f.group();
  const Element da = G.multiply(f.image_a(), G.inverse(G.a()));
  const Element db = G.multiply(f.image_b(), G.inverse(G.b()));
  return std::max(center_level(G, da), center_level(G, db));
}

unsigned aut_level(const Morphism& f, const CentralSeries& series) {
  const Group& G = f.group();
  if (series.group().id() != G.id()) throw std::invalid_argument("aut_level: series of another group");
  const Element da = G.multiply(f.image_a(), G.inverse(G.a()));
  const Element db = G.multiply(f.image_b(), G.inverse(G.b()));
  return std::max(series.level(da), series.level(db));
}

Morphism induced(const Morphism& f, const GroupPtr& target) {
  const Group& G = f.group();
  return require_hom(target, project(f.image_a(), G, *target), project(f.image_b(), G, *target),
                     "induced");
}

QuotientMatrix QuotientMatrix::operator*(const QuotientMatrix& o) const {
  if (modulus != o.modulus) throw std::invalid_argument("QuotientMatrix: mismatched moduli");
  QuotientMatrix r;
  r.modulus = modulus;
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 2; ++col)
      r.e[row * 2 + col] = (mul_mod(e[row * 2], o.e[col], modulus) +
                            mul_mod(e[row * 2 + 1], o.e[2 + col], modulus)) % modulus;
  return r;
}

std::uint64_t QuotientMatrix::det() const {
  return sub_mod(mul_mod(e[0], e[3], modulus), mul_mod(e[1], e[2], modulus), modulus);
}

bool QuotientMatrix::is_identity() const {
  const std::uint64_t one = 1 % modulus;
  return e[0] == one && e[1] == 0 && e[2] == 0 && e[3] == one;
}

QuotientMatrix quotient_matrix(const Morphism& f) {
  const Group& G = f.group();
  if (G.kind() != GroupKind::K) throw std::invalid_argument("quotient_matrix: needs the group K");
  const std::uint64_t n = G.pm();
  QuotientMatrix q;
  q.modulus = n;
  q.e = {f.image_a().i % n, f.image_a().j % n, f.image_b().i % n, f.image_b().j % n};
  return q;
}

Morphism omega(const GroupPtr& k, const Element& u, const Element& v) {
  require_kind(k, GroupKind::K, "omega");
  return translate(k, u, v, 1, "omega");
}

Morphism gamma(const GroupPtr& k, const Element& u, const Element& v) {
  require_kind(k, GroupKind::K, "gamma");
  return translate(k, u, v, 2, "gamma");
}

Morphism f_aut(const GroupPtr& k, std::uint64_t r) {
  require_kind(k, GroupKind::K, "f_aut");
  const Group& G = *k;
  const std::uint64_t n = G.pm() * G.pm();
  if (r % G.p() == 0) throw std::invalid_argument("f_aut: r must be prime to p");
  const std::uint64_t s = inv_mod(r % n, n);
  return require_hom(k, G.power(G.a(), static_cast<std::int64_t>(r % n)),
                     G.power(G.b(), static_cast<std::int64_t>(s)), "f_aut");
}

Morphism swap(const GroupPtr& group) { return require_hom(group, group->b(), group->a(), "swap"); }

Morphism pi_aut(const GroupPtr& h, const Element& x, const Element& y) {
  require_kind(h, GroupKind::H, "pi_aut");
  return translate(h, x, y, 2, "pi_aut");
}

Morphism psi_aut(const GroupPtr& j, const Element& x, const Element& y) {
  require_kind(j, GroupKind::J, "psi_aut");
  return translate(j, x, y, 2, "psi_aut");
}

std::uint64_t delta_constant(const GroupParams& params) {
  const std::uint64_t pm = params.pm();
  if (params.p != 3) return 0;
  return mul_mod(checked_pow(3, params.m - 1), params.ell() % pm, pm);
}

Morphism delta_aut(const GroupPtr& j) { return upsilon(j, 0, 1); }

Morphism upsilon(const GroupPtr& j, std::uint64_t i, std::uint64_t jj) {
  require_kind(j, GroupKind::J, "upsilon");
  const Group& G = *j;
  const std::uint64_t pm = G.pm();
  i %= pm;
  jj %= pm;
  const std::uint64_t d = delta_constant(G.params());
  // l = -i - j (2 - d) mod p^m
  const std::uint64_t two_minus_d = sub_mod(2 % pm, d, pm);
  const std::uint64_t l = sub_mod(sub_mod(0, i, pm), mul_mod(jj, two_minus_d, pm), pm);
  const auto P = static_cast<std::int64_t>(pm);
  const Element x = G.multiply(G.a(), G.element(static_cast<std::int64_t>(i) * P,
                                                static_cast<std::int64_t>(jj) * P, 0));
  const Element y = G.multiply(G.multiply(G.b(), G.power(G.b(), static_cast<std::int64_t>(l) * P)),
                               G.power(G.a(), static_cast<std::int64_t>(jj) * P));
  return require_hom(j, x, y, "upsilon");
}

std::uint64_t primitive_root(std::uint64_t p, unsigned e) {
  const std::uint64_t n = checked_pow(p, e);
  const std::uint64_t phi = n / p * (p - 1);
  auto factors = prime_factors(p - 1);
  if (e > 1) factors.push_back(p);
  for (std::uint64_t g = 2; g < n; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, phi / q, n) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

}  // namespace macd
