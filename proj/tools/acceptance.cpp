// Acceptance run: one [PASS] or [FAIL] line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "macd/autgroup.hpp"
#include "macd/residue.hpp"
#include "macd/structure.hpp"
#include "macd/theorems.hpp"

using namespace macd;

namespace {

const std::vector<GroupParams> kRef{{3, 1, 4}, {5, 1, 6}, {3, 2, 10}, {7, 1, 8}};
const GroupParams P1{3, 1, 4}, P2{5, 1, 6}, P3{3, 2, 10};
const GroupKind kKinds[] = {GroupKind::J, GroupKind::H, GroupKind::K};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// collects the failures of one criterion
struct Criterion {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

unsigned order_exponent(GroupKind kind) {
  return kind == GroupKind::J ? 7 : kind == GroupKind::H ? 6 : 5;
}

std::vector<std::string> failing_checks(const TheoremReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.sub_checks())
    if (c.status == Status::Fail) out.push_back(c.id);
  if (out.empty() && r.status() == Status::Fail) out.push_back(r.id());
  return out;
}

std::string headline(const TheoremReport& r) { return r.flatten().front().observed; }

std::string sub_observed(const TheoremReport& r, const std::string& id) {
  for (const auto& c : r.sub_checks())
    if (c.id == id) return c.observed;
  return "";
}

std::string name(const GroupParams& P) {
  std::ostringstream os;
  os << '(' << P.p << ',' << P.m << ',' << P.alpha << ')';
  return os.str();
}

void series_matches(const GroupPtr& G, Criterion& c) {
  const CentralSeries s = upper_central_series(G);
  c.require(s.nilpotency_class() == expected_class(G->kind()), G->name() + " class");
  const auto gens = known_series_generators(*G);
  for (unsigned i = 1; i < s.nilpotency_class() && i <= gens.size(); ++i)
    c.require(closure(G, gens[i - 1]) == s.term(i), G->name() + " Z_" + std::to_string(i));
}

void suite_passes(const std::string& id, Workspace& ws, Criterion& c) {
  const TheoremReport r = run_check(id, ws);
  if (r.status() == Status::Pass) return;
  std::string what = id + " at " + name(ws.params()) + ":";
  if (r.status() == Status::Skipped) {
    what += " skipped";
  } else {
    what += " observed " + headline(r) + " expected " + r.flatten().front().expected;
    for (const auto& f : failing_checks(r))
      if (f != id) what += ", " + f;
  }
  c.problems.push_back(what);
}

// 1
Criterion construction() {
  Criterion c;
  for (const auto& P : kRef)
    for (auto kind : kKinds) {
      const auto t = Clock::now();
      const GroupPtr G = make_group(P, kind);
      const double s = seconds_since(t);
      c.require(G->order() == checked_pow(P.p, order_exponent(kind) * P.m, ~std::uint64_t{0}),
                G->name() + " order");
      c.require(G->element_order(G->a()) == G->order_a(), G->name() + " |A|");
      c.require(G->element_order(G->b()) == G->order_b(), G->name() + " |B|");
      c.require(G->element_order(G->c()) == G->order_c(), G->name() + " |C|");
      c.require(G->relations_hold(), G->name() + " relations");
      c.require(s < 1.0, G->name() + " construction time");
    }
  return c;
}

// 2
Criterion arithmetic() {
  Criterion c;
  std::mt19937_64 rng(20240613);
  const GroupPtr K1 = make_group(P1, GroupKind::K);
  const auto elems = K1->elements();
  std::uint64_t bad = 0;
  for (const auto& x : elems)
    for (const auto& y : elems) bad += K1->multiply(x, y) != K1->multiply_naive(x, y);
  c.require(bad == 0, "K(3,1,4) exhaustive fast = naive");

  const auto t = Clock::now();
  std::vector<std::uint32_t> table(elems.size() * elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      table[i * elems.size() + j] = static_cast<std::uint32_t>(K1->index(K1->multiply(elems[i], elems[j])));
  const std::size_t n = elems.size();
  bad = 0;
  for (std::size_t x = 0; x < n; ++x) bad += K1->index(elems[x]) != x;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = table[x * n + y];
      for (std::size_t z = 0; z < n; ++z) bad += table[xy * n + z] != table[x * n + table[y * n + z]];
    }
  const double s = seconds_since(t);
  c.require(bad == 0, "K(3,1,4) exhaustive associativity");
  c.require(s < 60.0, "K(3,1,4) associativity time");
  c.notes.push_back("243^3 triples in " + std::to_string(s).substr(0, 4) + " s");

  for (const auto& P : kRef)
    for (auto kind : kKinds) {
      const GroupPtr G = make_group(P, kind);
      auto pick = [&] { return G->unindex(rng() % G->order()); };
      bool ok = true;
      if (!(P == P1 && kind == GroupKind::K)) {
        for (int i = 0; i < 10000 && ok; ++i) {
          const Element x = pick(), y = pick();
          ok = G->multiply(x, y) == G->multiply_naive(x, y);
        }
        c.require(ok, G->name() + " sampled fast = naive");
        for (int i = 0; i < 100000 && ok; ++i) {
          const Element x = pick(), y = pick(), z = pick();
          ok = G->multiply(G->multiply(x, y), z) == G->multiply(x, G->multiply(y, z));
        }
        c.require(ok, G->name() + " sampled associativity");
      }
    }
  return c;
}

// 3
Criterion series() {
  Criterion c;
  for (const auto& P : kRef) {
    series_matches(make_group(P, GroupKind::K), c);
    series_matches(make_group(P, GroupKind::H), c);
    if (P == P3) continue;
    const GroupPtr J = make_group(P, GroupKind::J);
    series_matches(J, c);
    c.require(upper_central_series(J).term(3).is_abelian(), J->name() + " Z_3 abelian");
    const GroupPtr H = make_group(P, GroupKind::H);
    c.require(upper_central_series(H).term(2).is_abelian(), H->name() + " Z_2 abelian");
  }
  return c;
}

// 4
Criterion formulas() {
  Criterion c;
  Workspace w1(P1), w2(P2);
  for (const std::string id : {"basw", "coli12"}) {
    suite_passes(id, w1, c);
    suite_passes(id, w2, c);
  }
  for (const std::string id : {"commie2", "commie3", "commie4", "commie5", "commie6", "coz3"})
    suite_passes(id, w1, c);
  return c;
}

// 5
Criterion aut_k() {
  Criterion c;
  VerifyOptions opt;
  opt.mode = Mode::Brute;
  Workspace w1(P1, opt);
  const AutSet& brute = w1.aut_brute(GroupKind::K);
  c.require(brute.size() == 2916, "brute force at P1 gives " + std::to_string(brute.size()));
  c.require(brute == w1.aut_closure(GroupKind::K), "brute force differs from closure at P1");
  c.require(filtration(brute, w1.series(GroupKind::K)) == std::vector<std::uint64_t>{1, 81, 729, 2916},
            "filtration at P1");
  suite_passes("autk6", w1, c);
  TheoremReport d("dihedral", P1);
  dihedral_check(brute, d);
  c.require(d.status() == Status::Pass && sub_observed(d, "dihedral.quotient.klein_four") == "true",
            "Klein-four quotient at P1");
  TheoremReport f("factorization", P1);
  unique_factorization_check(brute, w1.series(GroupKind::K), f);
  c.require(f.status() == Status::Pass, "unique factorization at P1");

  const auto t = Clock::now();
  Workspace w2(P2, opt);
  const AutSet& b2 = w2.aut_brute(GroupKind::K);
  TheoremReport d2("dihedral", P2);
  dihedral_check(b2, d2);
  const double s = seconds_since(t);
  c.require(b2.size() == 125000, "brute force at P2 gives " + std::to_string(b2.size()));
  c.require(sub_observed(d2, "dihedral.quotient.order") == "8" && d2.status() == Status::Pass,
            "dihedral quotient of order 8 at P2");
  c.require(s < 600.0, "P2 runtime");
  c.notes.push_back("P2 brute force in " + std::to_string(s).substr(0, 5) + " s");
  return c;
}

// 6
Criterion aut_h() {
  Criterion c;
  const auto t = Clock::now();
  VerifyOptions opt;
  opt.mode = Mode::Brute;
  Workspace ws(P1, opt);
  const AutSet& brute = ws.aut_brute(GroupKind::H);
  c.require(brute.size() == 13122, "brute force gives " + std::to_string(brute.size()));
  const auto f = filtration(brute, ws.series(GroupKind::H));
  c.require(f.size() > 3 && f[1] == 9 && f[2] == 729 && f[3] == 6561, "filtration");
  suite_passes("tet", ws, c);
  suite_passes("auth6", ws, c);
  c.require(seconds_since(t) < 120.0, "runtime");
  return c;
}

// 7
Criterion aut_j() {
  Criterion c;
  Workspace ws(P1);
  const AutSet& a = ws.aut_closure(GroupKind::J);
  c.require(a.size() == 13122, "closure order " + std::to_string(a.size()));
  const auto f = filtration(a, ws.series(GroupKind::J));
  c.require(f.size() > 4 && f[2] == 81 && f[3] == 729 && f[4] == 6561, "filtration");
  const TheoremReport full = run_check("autjfull", ws);
  c.require(sub_observed(full, "autjfull.aut4_equals_inner_aut3") == "true", "Aut_4 = Inn Aut_3");
  c.require(full.status() == Status::Pass, "autjfull suite");

  const auto t = Clock::now();
  VerifyOptions opt;
  opt.mode = Mode::Brute;
  Workspace wb(P1, opt);
  const AutSet& brute = wb.aut_brute(GroupKind::J);
  const double s = seconds_since(t);
  c.require(brute == wb.aut_closure(GroupKind::J), "exhaustive scan finds automorphisms outside the closure");
  c.require(s < 1800.0, "scan runtime");
  c.notes.push_back("exhaustive scan in " + std::to_string(s).substr(0, 4) + " s");
  return c;
}

// 8
Criterion sylow() {
  Criterion c;
  Workspace ws(P1);
  const struct {
    const char* id;
    const char* order;
    const char* index;
  } rows[] = {{"sylowK", "729", "4"}, {"sylowH", "6561", "2"}, {"sylowJ", "6561", "2"}};
  for (const auto& row : rows) {
    const TheoremReport r = verify_presentation(row.id, ws);
    c.require(headline(r) == row.order, std::string(row.id) + " order " + headline(r));
    c.require(sub_observed(r, std::string(row.id) + ".index") == row.index,
              std::string(row.id) + " index");
    if (r.status() != Status::Pass) {
      std::string what = std::string(row.id) + ":";
      for (const auto& f : failing_checks(r)) what += " " + f;
      c.problems.push_back(what);
    }
  }
  return c;
}

// 9
Criterion ele() {
  Criterion c;
  VerifyOptions opt;
  opt.beta = 11;
  Workspace ws(P2, opt);
  const TheoremReport r = run_check("ele", ws);
  c.require(r.status() == Status::Pass, "ele at p = 5");
  c.require(sub_observed(r, "ele.ell") == "2", "exponent 2 for e -> b^2");
  c.require(sub_observed(r, "ele.bijective") == "true", "bijectivity");
  return c;
}

template <class F>
void constructs(Criterion& c, const std::string& what, F make) {
  try {
    const Morphism f = make();
    c.require(is_automorphism(f), what + " is not an automorphism");
  } catch (const std::exception& e) {
    c.problems.push_back(what + ": " + e.what());
  }
}

// 10
Criterion reduced_p3() {
  Criterion c;
  Workspace ws(P3);
  for (auto kind : {GroupKind::K, GroupKind::H}) {
    const GroupPtr& G = ws.group(kind);
    c.require(G->relations_hold(), G->name() + " relations");
    series_matches(G, c);
  }
  const GroupPtr& K = ws.group(GroupKind::K);
  const GroupPtr& H = ws.group(GroupKind::H);
  const GroupPtr& J = ws.group(GroupKind::J);
  const auto zk = known_series_generators(*K);
  const auto zh = known_series_generators(*H);
  const auto zj = known_series_generators(*J);
  const Element ek = K->identity(), eh = H->identity(), ej = J->identity();
  for (const auto& g : zk[0]) {
    constructs(c, "omega(u)", [&] { return omega(K, g, ek); });
    constructs(c, "omega(v)", [&] { return omega(K, ek, g); });
  }
  for (const auto& g : zk[1]) {
    constructs(c, "gamma(u)", [&] { return gamma(K, g, ek); });
    constructs(c, "gamma(v)", [&] { return gamma(K, ek, g); });
  }
  for (std::uint64_t r : {primitive_root(3, 4), std::uint64_t{10}, std::uint64_t{80}})
    constructs(c, "f_" + std::to_string(r), [&] { return f_aut(K, r); });
  for (const auto& g : zh[1]) {
    constructs(c, "pi(x)", [&] { return pi_aut(H, g, eh); });
    constructs(c, "pi(y)", [&] { return pi_aut(H, eh, g); });
  }
  for (const auto& g : zj[1]) {
    constructs(c, "psi(x)", [&] { return psi_aut(J, g, ej); });
    constructs(c, "psi(y)", [&] { return psi_aut(J, ej, g); });
  }
  constructs(c, "delta", [&] { return delta_aut(J); });
  for (std::uint64_t i : {0, 1, 2})
    for (std::uint64_t j : {0, 1, 2})
      constructs(c, "upsilon", [&] { return upsilon(J, i, j); });
  for (const auto& G : {K, H, J}) {
    constructs(c, "swap", [&] { return swap(G); });
    constructs(c, "inner", [&] { return inner(G, G->a()); });
  }

  const TheoremReport sk = run_check("sylowK", ws);
  c.require(headline(sk) == "1594323", "sylowK closure order " + headline(sk));
  for (const auto& f : failing_checks(sk)) c.notes.push_back(f + " fails (reported)");

  for (const std::string id : {"autk6", "auth6", "autjfull"}) {
    const TheoremReport r = run_check(id, ws);
    c.require(r.status() == Status::Skipped && headline(r) == kSkippedObserved,
              id + " not reported as skipped-over-budget");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"construction", construction}, {"arithmetic", arithmetic}, {"central series", series},
      {"formula suites", formulas},    {"Aut(K)", aut_k},         {"Aut(H)", aut_h},
      {"Aut(J)", aut_j},               {"Sylow presentations", sylow},
      {"isomorphism ele", ele},        {"P3 reduced suite", reduced_p3}};
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto t = Clock::now();
    Criterion c;
    try {
      c = criteria[n].second();
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.problems.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << n + 1 << ' ' << criteria[n].first << " ("
              << static_cast<long>(seconds_since(t) * 1000) << " ms)";
    std::string sep = " -- ";
    for (const auto& p : c.problems) std::cout << std::exchange(sep, "; ") << p;
    for (const auto& p : c.notes) std::cout << std::exchange(sep, "; ") << p;
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failed << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
