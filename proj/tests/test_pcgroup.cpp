#include <gtest/gtest.h>

#include <chrono>

#include "macd/pcgroup.hpp"
#include "macd/residue.hpp"
#include "support.hpp"
#include "todd_coxeter.hpp"

using namespace macd;
using namespace macd::testing;

namespace {

std::uint64_t expected_order(const GroupParams& P, GroupKind kind) {
  const unsigned e = kind == GroupKind::J ? 7 : kind == GroupKind::H ? 6 : 5;
  return checked_pow(P.p, e * P.m);
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_NO_THROW(validate({3, 1, 4}));
  EXPECT_NO_THROW(validate({5, 1, 6}));
  EXPECT_NO_THROW(validate({3, 2, 10}));
  EXPECT_THROW(validate({3, 1, 7}), InvalidParameter);   // ell = 2, not 1 mod 3
  EXPECT_THROW(validate({2, 1, 3}), InvalidParameter);   // p = 2
  EXPECT_THROW(validate({9, 1, 10}), InvalidParameter);  // not prime
  EXPECT_THROW(validate({5, 1, 26}), InvalidParameter);  // v_5(25) = 2
  EXPECT_THROW(validate({5, 0, 2}), InvalidParameter);
  EXPECT_THROW(validate({3, 1, 1}), InvalidParameter);
  EXPECT_THROW(validate({3, 9, 1 + 19683}), InvalidParameter);  // 3^27 > 2^40
  EXPECT_THROW(make_group({3, 1, 7}, GroupKind::K), InvalidParameter);
}

TEST(Params, Ell) {
  EXPECT_EQ(params_from_ell(5, 1, 1).alpha, 6u);
  EXPECT_EQ(params_from_ell(3, 2, 1).alpha, 10u);
  EXPECT_EQ((GroupParams{7, 1, 8}).ell(), 1u);
  EXPECT_THROW(validate(params_from_ell(5, 1, 5)), InvalidParameter);
}

TEST(Group, OrdersAndGenerators) {
  for (const auto& P : kReference)
    for (auto kind : kKinds) {
      const auto t0 = std::chrono::steady_clock::now();
      const GroupPtr G = make_group(P, kind);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      EXPECT_LT(s, 1.0) << G->name();
      const std::uint64_t pm = P.pm();
      EXPECT_EQ(G->order(), expected_order(P, kind)) << G->name();
      const std::uint64_t oa = kind == GroupKind::J ? pm * pm * pm : pm * pm;
      const std::uint64_t oc = kind == GroupKind::K ? pm : pm * pm;
      EXPECT_EQ(G->element_order(G->a()), oa) << G->name();
      EXPECT_EQ(G->element_order(G->b()), oa) << G->name();
      EXPECT_EQ(G->element_order(G->c()), oc) << G->name();
      EXPECT_TRUE(G->relations_hold());
      EXPECT_EQ(G->commutator(G->a(), G->b()), G->c());
    }
}

TEST(Group, WorkedProducts) {
  const GroupPtr J = make_group(P1, GroupKind::J);
  EXPECT_EQ(J->multiply(J->b(), J->a()), J->element(1, 1, 8));
  // B^9 folds into A^-9
  EXPECT_EQ(J->power(J->b(), 9), J->element(18, 0, 0));
  EXPECT_EQ(J->name(), "J(3,1,4)");

  const GroupPtr K = make_group(P1, GroupKind::K);
  EXPECT_EQ(K->conjugate(K->b(), K->a()), K->element(0, 1, 2));
  EXPECT_EQ(K->order(), 243u);
  EXPECT_EQ(make_group(P1, GroupKind::H)->order(), 729u);
}

TEST(Group, IndexRoundTrip) {
  const GroupPtr H = make_group(P1, GroupKind::H);
  for (std::uint64_t idx = 0; idx < H->order(); ++idx) {
    const Element g = H->unindex(idx);
    ASSERT_TRUE(H->is_normal(g));
    ASSERT_EQ(H->index(g), idx);
  }
  EXPECT_EQ(H->elements().size(), 729u);
}

TEST(Group, ForeignElementRejected) {
  const GroupPtr K1 = make_group(P1, GroupKind::K);
  const GroupPtr K2 = make_group(P1, GroupKind::K);
  EXPECT_NE(K1->id(), K2->id());
  EXPECT_FALSE(K1->contains(K2->a()));
  EXPECT_THROW(K1->multiply(K1->a(), K2->a()), std::invalid_argument);
}

TEST(Group, FastEqualsNaiveExhaustiveK) {
  const GroupPtr K = make_group(P1, GroupKind::K);
  const auto all = K->elements();
  std::uint64_t bad = 0, pairs = 0;
  for (const auto& g : all)
    for (const auto& h : all) {
      ++pairs;
      bad += K->multiply(g, h) != K->multiply_naive(g, h);
    }
  EXPECT_EQ(pairs, 59049u);
  EXPECT_EQ(bad, 0u);
}

TEST(Group, FastEqualsNaiveSampled) {
  Gen gen(11);
  for (const auto& P : kReference)
    for (auto kind : kKinds) {
      const GroupPtr G = make_group(P, kind);
      std::uint64_t bad = 0;
      for (int t = 0; t < 10000; ++t) {
        const Element g = gen.element(*G), h = gen.element(*G);
        bad += G->multiply(g, h) != G->multiply_naive(g, h);
      }
      EXPECT_EQ(bad, 0u) << G->name();
    }
}

TEST(Group, AssociativityExhaustiveK) {
  const GroupPtr K = make_group(P1, GroupKind::K);
  const auto all = K->elements();
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t bad = 0, triples = 0;
  for (const auto& x : all)
    for (const auto& y : all) {
      const Element xy = K->multiply(x, y);
      for (const auto& z : all) {
        ++triples;
        bad += K->multiply(xy, z) != K->multiply(x, K->multiply(y, z));
      }
    }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(triples, 243u * 243u * 243u);
  EXPECT_EQ(bad, 0u);
  EXPECT_LT(s, 60.0);
}

TEST(Group, AssociativitySampled) {
  Gen gen(12);
  for (const auto& P : kReference)
    for (auto kind : kKinds) {
      const GroupPtr G = make_group(P, kind);
      std::uint64_t bad = 0;
      for (int t = 0; t < 100000; ++t) {
        const Element x = gen.element(*G), y = gen.element(*G), z = gen.element(*G);
        bad += G->multiply(G->multiply(x, y), z) != G->multiply(x, G->multiply(y, z));
      }
      EXPECT_EQ(bad, 0u) << G->name();
    }
}

TEST(Group, InversePowerOrder) {
  Gen gen(13);
  for (const auto& P : kReference)
    for (auto kind : kKinds) {
      const GroupPtr G = make_group(P, kind);
      for (int t = 0; t < 300; ++t) {
        const Element g = gen.element(*G);
        EXPECT_TRUE(G->is_identity(G->multiply(g, G->inverse(g))));
        EXPECT_TRUE(G->is_identity(G->multiply(G->inverse(g), g)));
        const std::uint64_t n = G->element_order(g);
        EXPECT_TRUE(G->is_identity(G->power(g, static_cast<std::int64_t>(n))));
        EXPECT_EQ(G->order() % n, 0u);
        EXPECT_EQ(G->power(g, -3), G->inverse(G->power(g, 3)));
      }
    }
}

// Large |A| takes the logarithm path for crossing(); check it against the
// defining iteration x -> alpha (x - 1) directly.
TEST(Group, CrossingByLogarithm) {
  const GroupParams P{3, 5, 1 + 243};
  const GroupPtr J = make_group(P, GroupKind::J);
  ASSERT_GT(J->mod_a(), std::uint64_t{1} << 22);
  Gen gen(14);
  for (int t = 0; t < 3; ++t) {
    const std::uint64_t n = gen.below(J->mod_a());
    std::uint64_t steps = 0;
    for (std::uint64_t x = n; x != 0; ++steps) x = mul_mod(P.alpha % J->mod_a(), sub_mod(x, 1, J->mod_a()), J->mod_a());
    EXPECT_EQ(J->crossing(n), steps);
  }
  for (int t = 0; t < 3; ++t) {
    const Element g = J->element(gen.between(0, 1000), gen.between(0, 2), gen.between(0, 1000));
    const Element h = J->element(gen.between(0, 1000000), gen.between(0, 1000), gen.between(0, 1000));
    EXPECT_EQ(J->multiply(g, h), J->multiply_naive(g, h));
  }
  EXPECT_TRUE(J->relations_hold());
}

// The coset table of the presentation is the regular representation; the
// engine's normal forms must label it bijectively and multiply compatibly.
class PresentationOracle : public ::testing::TestWithParam<GroupKind> {};

TEST_P(PresentationOracle, MatchesCosetEnumeration) {
  const GroupKind kind = GetParam();
  const GroupPtr G = make_group(P1, kind);
  const std::uint64_t pm = G->pm();
  const std::uint64_t tab = kind == GroupKind::J ? pm * pm * pm : pm * pm;
  const std::uint64_t tc = kind == GroupKind::K ? pm : 0;
  CosetTable T(4'000'000);
  T.enumerate(macdonald_relators(P1.alpha, tab, tc));
  ASSERT_EQ(T.size(), G->order());

  const Word A{0}, B{2}, C{1, 3, 0, 2};
  auto word_of = [&](const Element& g) {
    return concat({power_word(A, g.i), power_word(B, g.j), power_word(C, g.k)});
  };
  std::vector<std::size_t> label(G->order());
  std::vector<bool> hit(G->order());
  for (std::uint64_t idx = 0; idx < G->order(); ++idx) {
    label[idx] = T.act_word(0, word_of(G->unindex(idx)));
    ASSERT_FALSE(hit[label[idx]]) << "normal forms collide";
    hit[label[idx]] = true;
  }
  Gen gen(15);
  for (int t = 0; t < 20000; ++t) {
    const Element g = gen.element(*G), h = gen.element(*G);
    ASSERT_EQ(label[G->index(G->multiply(g, h))], T.act_word(label[G->index(g)], word_of(h)));
  }
}

INSTANTIATE_TEST_SUITE_P(P1, PresentationOracle,
                         ::testing::Values(GroupKind::K, GroupKind::H, GroupKind::J),
                         [](const auto& info) { return std::string(to_string(info.param)); });
