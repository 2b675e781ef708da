#include <gtest/gtest.h>

#include "macd/autgroup.hpp"
#include "macd/theorems.hpp"
#include "support.hpp"

using namespace macd;
using namespace macd::testing;

namespace {

ScanResult scan(const GroupPtr& G, bool filters, unsigned workers = 1) {
  ScanOptions opt;
  opt.order_prefilter = opt.frattini_prefilter = filters;
  opt.workers = workers;
  return brute_force_auts(G, opt);
}

std::vector<std::uint64_t> counts(const AutSet& s, const GroupPtr& G) {
  return filtration(s, upper_central_series(G));
}

}  // namespace

TEST(BruteForce, KAtP1WithAndWithoutFilters) {
  const GroupPtr K = make_group(P1, GroupKind::K);
  const ScanResult fast = scan(K, true);
  const ScanResult slow = scan(K, false);
  ASSERT_TRUE(fast.complete);
  ASSERT_TRUE(slow.complete);
  EXPECT_EQ(fast.auts.size(), 2916u);
  EXPECT_EQ(fast.auts, slow.auts);
  EXPECT_EQ(slow.pairs, 59049u);
  EXPECT_TRUE(fast.auts.contains(identity_morphism(K)));
}

TEST(BruteForce, HAtP1) {
  const GroupPtr H = make_group(P1, GroupKind::H);
  const ScanResult r = scan(H, true);
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.auts.size(), 13122u);
  EXPECT_TRUE(r.auts.contains(identity_morphism(H)));
}

TEST(BruteForce, DeterministicAcrossWorkers) {
  const GroupPtr H = make_group(P1, GroupKind::H);
  EXPECT_EQ(scan(H, true, 1).auts.keys(), scan(H, true, 3).auts.keys());
}

TEST(BruteForce, BudgetMarksPartial) {
  const GroupPtr K = make_group(P1, GroupKind::K);
  ScanOptions opt;
  opt.budget = 1000;
  const ScanResult r = brute_force_auts(K, opt);
  EXPECT_FALSE(r.complete);
  EXPECT_THROW(closure_auts(K, {swap(K)}, 10), BudgetExceeded);
}

TEST(Closure, EqualsBruteForce) {
  for (const auto& [P, kind] : {std::pair{P1, GroupKind::K}, std::pair{P1, GroupKind::H},
                                std::pair{P2, GroupKind::K}}) {
    Workspace ws(P);
    const GroupPtr G = ws.group(kind);
    const ScanResult r = scan(G, true);
    ASSERT_TRUE(r.complete) << G->name();
    EXPECT_EQ(ws.aut_closure(kind), r.auts) << G->name();
  }
}

TEST(Closure, JAtP1) {
  Workspace ws(P1);
  const AutSet& a = ws.aut_closure(GroupKind::J);
  EXPECT_EQ(a.size(), 13122u);
  const auto c = counts(a, ws.group(GroupKind::J));
  EXPECT_EQ(c[2], 81u);
  EXPECT_EQ(c[3], 729u);
  EXPECT_EQ(c[4], 6561u);
  EXPECT_EQ(c[5], 13122u);
}

TEST(Filtration, KAndH) {
  Workspace ws(P1);
  EXPECT_EQ(counts(ws.aut_closure(GroupKind::K), ws.group(GroupKind::K)),
            (std::vector<std::uint64_t>{1, 81, 729, 2916}));
  EXPECT_EQ(counts(ws.aut_closure(GroupKind::H), ws.group(GroupKind::H)),
            (std::vector<std::uint64_t>{1, 9, 729, 6561, 13122}));
}

TEST(AutSets, ClosedUnderComposeAndInvert) {
  Workspace ws(P1);
  Gen gen(5);
  for (auto kind : kKinds) {
    const AutSet& a = ws.aut_closure(kind);
    const AutSet sub = level_subset(a, ws.series(kind), 2);
    EXPECT_EQ(a.size() % sub.size(), 0u);
    for (int t = 0; t < 300; ++t) {
      const Morphism f = a.at(gen.below(a.size())), g = a.at(gen.below(a.size()));
      ASSERT_TRUE(a.contains(compose(f, g)));
      ASSERT_TRUE(a.contains(invert(f)));
      const Morphism x = sub.at(gen.below(sub.size())), y = sub.at(gen.below(sub.size()));
      ASSERT_TRUE(sub.contains(compose(x, y)));
      ASSERT_TRUE(sub.contains(invert(x)));
    }
  }
}

TEST(AutSets, InnerInsideSecondToLastLevel) {
  Workspace ws(P1);
  for (auto kind : kKinds) {
    const unsigned c = ws.series(kind).nilpotency_class();
    const AutSet& inn = ws.inner_auts(kind);
    EXPECT_EQ(level_subset(inn, ws.series(kind), c - 1), inn);
    EXPECT_EQ(inn.size() * center(ws.group(kind)).order(), ws.group(kind)->order());
  }
}

TEST(AutSets, DeterminantPlusMinusOne) {
  Workspace ws(P1);
  for (const auto& f : ws.aut_closure(GroupKind::K).morphisms()) {
    const std::uint64_t d = quotient_matrix(f).det();
    ASSERT_TRUE(d == 1 || d == 2) << d;
  }
}

TEST(AutSets, ProductSetPaths) {
  Workspace ws(P1);
  const GroupPtr K = ws.group(GroupKind::K);
  const auto inn = ws.inner_auts(GroupKind::K).morphisms();
  const std::vector<Morphism> few{identity_morphism(K), swap(K)};
  // table path (few ys) and compose path must agree
  const AutSet via_tables = product_set(inn, few);
  std::vector<std::uint64_t> keys;
  for (const auto& x : inn)
    for (const auto& y : few) keys.push_back(compose(x, y).key());
  EXPECT_EQ(via_tables, AutSet(K, keys));
  EXPECT_EQ(via_tables.size(), 2 * inn.size());
}

TEST(Dihedral, KleinFourAtP1) {
  Workspace ws(P1);
  TheoremReport r("dihedral", P1);
  dihedral_check(ws.aut_closure(GroupKind::K), r);
  r.finish();
  EXPECT_EQ(r.status(), Status::Pass);
  bool klein = false;
  for (const auto& c : r.sub_checks()) {
    if (c.id == "dihedral.quotient.order") EXPECT_EQ(c.observed, "4");
    if (c.id == "dihedral.quotient.klein_four") klein = c.status == Status::Pass;
  }
  EXPECT_TRUE(klein);
}

TEST(Dihedral, OrderEightAtP2) {
  Workspace ws(P2);
  TheoremReport r("dihedral", P2);
  dihedral_check(ws.aut_closure(GroupKind::K), r);
  r.finish();
  EXPECT_EQ(r.status(), Status::Pass);
  for (const auto& c : r.sub_checks())
    if (c.id == "dihedral.quotient.order") EXPECT_EQ(c.observed, "8");
}

TEST(Factorization, UniqueAtP1) {
  Workspace ws(P1);
  TheoremReport r("fact", P1);
  unique_factorization_check(ws.aut_closure(GroupKind::K), ws.series(GroupKind::K), r);
  r.finish();
  EXPECT_EQ(r.status(), Status::Pass);
}
