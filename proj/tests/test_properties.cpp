#include <gtest/gtest.h>

#include "macd/autgroup.hpp"
#include "macd/residue.hpp"
#include "macd/theorems.hpp"
#include "support.hpp"

using namespace macd;
using namespace macd::testing;

namespace {

constexpr int kTrials = 2000;

// random admissible (p, m, alpha): ell coprime to p keeps v_p(alpha - 1) = m,
// and (3, 1) also wants ell = 1 mod 3
GroupParams random_params(Gen& gen) {
  static const std::uint64_t primes[] = {3, 5, 7, 11, 13};
  const std::uint64_t p = primes[gen.below(5)];
  const unsigned m = p <= 5 ? 1 + static_cast<unsigned>(gen.below(2)) : 1;
  std::uint64_t ell = 1 + gen.below(4 * p * p);
  if (ell % p == 0) ++ell;
  if (p == 3 && m == 1) ell = 3 * (ell / 3) + 1;
  return params_from_ell(p, m, ell);
}

std::vector<GroupPtr> random_groups(std::uint64_t seed, int count) {
  Gen gen(seed);
  std::vector<GroupPtr> out;
  for (int n = 0; n < count; ++n) {
    const GroupParams P = random_params(gen);
    out.push_back(make_group(P, kKinds[gen.below(3)]));
  }
  return out;
}

}  // namespace

TEST(Properties, RandomParametersConstruct) {
  for (const auto& G : random_groups(1, 40)) {
    const std::uint64_t p = G->p(), m = G->m();
    const unsigned e = G->kind() == GroupKind::J ? 7 : G->kind() == GroupKind::H ? 6 : 5;
    EXPECT_EQ(G->order(), checked_pow(p, e * m, ~std::uint64_t{0})) << G->name();
    EXPECT_TRUE(G->relations_hold()) << G->name();
  }
}

TEST(Properties, GroupAxioms) {
  Gen gen(2);
  for (const auto& G : random_groups(3, 30)) {
    const Element e = G->identity();
    for (int t = 0; t < kTrials / 10; ++t) {
      const Element x = gen.exponents(*G), y = gen.exponents(*G), z = gen.exponents(*G);
      ASSERT_EQ(G->multiply(G->multiply(x, y), z), G->multiply(x, G->multiply(y, z))) << G->name();
      ASSERT_EQ(G->multiply(x, e), x);
      ASSERT_EQ(G->multiply(e, x), x);
      ASSERT_TRUE(G->is_identity(G->multiply(x, G->inverse(x))));
      ASSERT_EQ(G->multiply(x, y), G->multiply_naive(x, y)) << G->name() << ' ' << x << ' ' << y;
    }
  }
}

TEST(Properties, PowerLaws) {
  Gen gen(4);
  for (const auto& G : random_groups(5, 20)) {
    for (int t = 0; t < kTrials / 20; ++t) {
      const Element x = gen.exponents(*G);
      const std::int64_t a = gen.between(-500, 500), b = gen.between(-50, 50);
      ASSERT_EQ(G->power(x, a + b), G->multiply(G->power(x, a), G->power(x, b)));
      ASSERT_EQ(G->power(G->power(x, a), b), G->power(x, a * b));
      const std::uint64_t o = G->element_order(x);
      ASSERT_EQ(G->order() % o, 0u);
      ASSERT_TRUE(G->is_identity(G->power(x, static_cast<std::int64_t>(o))));
      if (o > 1) {
        ASSERT_FALSE(G->is_identity(G->power(x, static_cast<std::int64_t>(o / G->p()))));
      }
    }
  }
}

TEST(Properties, CommutatorIdentities) {
  Gen gen(6);
  for (const auto& G : random_groups(7, 20)) {
    const auto& g = *G;
    for (int t = 0; t < kTrials / 20; ++t) {
      const Element x = gen.exponents(g), y = gen.exponents(g), z = gen.exponents(g);
      // [xy, z] = [x, z]^y [y, z]
      ASSERT_EQ(g.commutator(g.multiply(x, y), z),
                g.multiply(g.conjugate(g.commutator(x, z), y), g.commutator(y, z)));
      // Hall-Witt
      const Element hw = g.multiply(
          g.multiply(g.conjugate(g.commutator(g.commutator(x, g.inverse(y)), z), y),
                     g.conjugate(g.commutator(g.commutator(y, g.inverse(z)), x), z)),
          g.conjugate(g.commutator(g.commutator(z, g.inverse(x)), y), x));
      ASSERT_TRUE(g.is_identity(hw)) << G->name();
      ASSERT_EQ(g.conjugate(g.multiply(x, y), z),
                g.multiply(g.conjugate(x, z), g.conjugate(y, z)));
    }
  }
}

TEST(Properties, IndexRoundTrip) {
  Gen gen(8);
  for (const auto& G : random_groups(9, 30))
    for (int t = 0; t < kTrials / 20; ++t) {
      const std::uint64_t n = gen.below(G->order());
      ASSERT_EQ(G->index(G->unindex(n)), n);
      const Element x = gen.exponents(*G);
      ASSERT_EQ(G->unindex(G->index(x)), x);
    }
}

TEST(Properties, ResidueArithmetic) {
  Gen gen(10);
  for (int t = 0; t < kTrials; ++t) {
    const std::uint64_t n = 2 + gen.below(1'000'000'000'000);
    const std::uint64_t a = gen.below(n), b = gen.below(n), c = gen.below(n);
    ASSERT_EQ(mul_mod(a, add_mod(b, c, n), n), add_mod(mul_mod(a, b, n), mul_mod(a, c, n), n));
    ASSERT_EQ(add_mod(sub_mod(a, b, n), b, n), a);
    const std::uint64_t e = gen.below(1000), f = gen.below(1000);
    ASSERT_EQ(pow_mod(a, e + f, n), mul_mod(pow_mod(a, e, n), pow_mod(a, f, n), n));
  }
}

class MorphismProperties : public ::testing::TestWithParam<GroupKind> {};

TEST_P(MorphismProperties, CompositionLaws) {
  Workspace ws(P1);
  const GroupPtr& G = ws.group(GetParam());
  const CentralSeries& S = ws.series(GetParam());
  const AutSet& auts = ws.aut_closure(GetParam());
  Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    const Morphism f = auts.at(gen.below(auts.size()));
    const Morphism g = auts.at(gen.below(auts.size()));
    const Morphism h = auts.at(gen.below(auts.size()));
    ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    ASSERT_EQ(compose(f, invert(f)), identity_morphism(G));
    ASSERT_LE(aut_level(compose(f, g), S), std::max(aut_level(f, S), aut_level(g, S)));
    ASSERT_EQ(aut_level(conjugate(f, g), S), aut_level(f, S));
    const Element x = gen.element(*G), y = gen.element(*G);
    ASSERT_EQ(evaluate(compose(f, g), x), evaluate(g, evaluate(f, x)));
    ASSERT_EQ(evaluate(f, G->multiply(x, y)), G->multiply(evaluate(f, x), evaluate(f, y)));
    ASSERT_EQ(compose(inner(G, x), inner(G, y)), inner(G, G->multiply(x, y)));
    // f^-1 inner(x) f = inner(f(x))
    ASSERT_EQ(conjugate(inner(G, x), f), inner(G, evaluate(f, x)));
    ASSERT_EQ(Morphism::from_key(G, f.key()), f);
    const std::int64_t n = gen.between(-20, 20);
    ASSERT_EQ(compose(power(f, n), power(f, 1)), power(f, n + 1));
  }
}

INSTANTIATE_TEST_SUITE_P(P1, MorphismProperties,
                         ::testing::Values(GroupKind::J, GroupKind::H, GroupKind::K),
                         [](const auto& info) { return std::string(to_string(info.param)); });
