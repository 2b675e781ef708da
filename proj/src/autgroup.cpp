#include "macd/autgroup.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_set>

#include "macd/residue.hpp"

namespace macd {

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t needed,
                               std::uint64_t budget)
    : std::runtime_error(what + " needs more than " + std::to_string(budget) +
                         " work items (at least " + std::to_string(needed) + ")"),
      needed_(needed),
      budget_(budget) {}

AutSet::AutSet(GroupPtr group, std::vector<std::uint64_t> keys)
    : group_(std::move(group)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool AutSet::contains_key(std::uint64_t key) const {
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

std::vector<Morphism> AutSet::morphisms() const {
  std::vector<Morphism> out;
  out.reserve(keys_.size());
  for (auto k : keys_) out.push_back(Morphism::from_key(group_, k));
  return out;
}

AutSet closure_auts(const GroupPtr& group, const std::vector<Morphism>& generators,
                    std::uint64_t budget) {
  const Group& G = *group;
  const std::uint64_t n = G.order();
  const std::uint64_t ngens = generators.size();
  std::uint64_t work = ngens * n;
  if (work > budget) throw BudgetExceeded("closure of " + G.name(), work, budget);
  for (const auto& f : generators)
    if (f.group().id() != G.id()) throw std::invalid_argument("closure_auts: foreign generator");

  std::vector<MorphismTable> tables;
  tables.reserve(ngens);
  for (const auto& f : generators) tables.emplace_back(f);

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> queue;
  const std::uint64_t ia = G.index(G.a()), ib = G.index(G.b());
  seen.insert(ia * n + ib);
  queue.emplace_back(ia, ib);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    work += ngens;
    if (work > budget) throw BudgetExceeded("closure of " + G.name(), work, budget);
    const auto [xa, xb] = queue[head];
    for (const auto& t : tables) {
      const std::uint64_t ya = t[xa], yb = t[xb];
      if (seen.insert(ya * n + yb).second) queue.emplace_back(ya, yb);
    }
  }
  return AutSet(group, std::vector<std::uint64_t>(seen.begin(), seen.end()));
}

ScanResult brute_force_auts(const GroupPtr& group, const ScanOptions& options) {
  const Group& G = *group;
  const std::uint64_t n = G.order();
  if (n >= (std::uint64_t{1} << 32) || n * n > options.budget)
    return {AutSet(group, {}), false, n < (std::uint64_t{1} << 32) ? n * n : ~std::uint64_t{0}};

  std::vector<std::uint64_t> xs, ys;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const Element g = G.unindex(idx);
    std::uint64_t ord = 0;
    if (options.order_prefilter) ord = G.element_order(g);
    if (!options.order_prefilter || ord == G.order_a()) xs.push_back(idx);
    if (!options.order_prefilter || ord == G.order_b()) ys.push_back(idx);
  }

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<std::uint64_t>> found(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t p = G.p();
    for (std::size_t xi = w; xi < xs.size(); xi += workers) {
      const Element x = G.unindex(xs[xi]);
      for (auto yidx : ys) {
        const Element y = G.unindex(yidx);
        if (options.frattini_prefilter && (x.i % p * (y.j % p) + p * p - x.j % p * (y.i % p)) % p == 0)
          continue;
        auto r = hom_from_images(group, x, y);
        if (auto* f = std::get_if<Morphism>(&r); f && is_automorphism(*f))
          found[w].push_back(xs[xi] * n + yidx);
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  std::vector<std::uint64_t> keys;
  for (auto& part : found) keys.insert(keys.end(), part.begin(), part.end());
  return {AutSet(group, std::move(keys)), true, n * n};
}

std::vector<std::uint64_t> filtration(const AutSet& auts, const CentralSeries& series) {
  std::vector<std::uint64_t> counts(series.nilpotency_class() + 1);
  for (auto key : auts.keys()) {
    const unsigned lev = aut_level(Morphism::from_key(auts.group_ptr(), key), series);
    for (unsigned i = lev; i < counts.size(); ++i) ++counts[i];
  }
  return counts;
}

AutSet level_subset(const AutSet& auts, const CentralSeries& series, unsigned i) {
  std::vector<std::uint64_t> keys;
  for (auto key : auts.keys())
    if (aut_level(Morphism::from_key(auts.group_ptr(), key), series) <= i) keys.push_back(key);
  return AutSet(auts.group_ptr(), std::move(keys));
}

AutSet product_set(const std::vector<Morphism>& xs, const std::vector<Morphism>& ys) {
  if (xs.empty() || ys.empty()) throw std::invalid_argument("product_set: empty factor");
  const GroupPtr& group = xs.front().group_ptr();
  const Group& G = *group;
  const std::uint64_t n = G.order();
  std::vector<std::uint64_t> keys;
  keys.reserve(xs.size() * ys.size());
  if (n <= 64 * xs.size()) {
    for (const auto& y : ys) {
      const MorphismTable t(y);
      for (const auto& x : xs) keys.push_back(t[G.index(x.image_a())] * n + t[G.index(x.image_b())]);
    }
  } else {
    for (const auto& x : xs)
      for (const auto& y : ys) keys.push_back(compose(x, y).key());
  }
  return AutSet(group, std::move(keys));
}

AutSet inner_set(const GroupPtr& group) {
  std::vector<std::uint64_t> keys;
  keys.reserve(group->order());
  for (std::uint64_t idx = 0; idx < group->order(); ++idx)
    keys.push_back(inner(group, group->unindex(idx)).key());
  return AutSet(group, std::move(keys));
}

namespace {

std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned e) {
  return checked_pow(p, e - 1) * (p - 1);
}

QuotientMatrix diag(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return QuotientMatrix{{a % n, 0, 0, b % n}, n};
}

}  // namespace

void dihedral_check(const AutSet& auts, TheoremReport& report) {
  const GroupPtr& K = auts.group_ptr();
  if (K->kind() != GroupKind::K) throw std::invalid_argument("dihedral_check: needs K");
  const std::uint64_t p = K->p();
  const unsigned m = K->m();
  const std::uint64_t n = K->pm();
  const std::uint64_t cyclic = euler_phi_prime_power(p, m);

  std::set<std::array<std::uint64_t, 4>> image;
  bool det_ok = true, kernel_ok = true;
  for (auto key : auts.keys()) {
    const Morphism f = Morphism::from_key(K, key);
    const QuotientMatrix q = quotient_matrix(f);
    image.insert(q.e);
    const std::uint64_t d = q.det();
    det_ok = det_ok && (d == 1 % n || d == n - 1);
    kernel_ok = kernel_ok && (q.is_identity() == (aut_level(f) <= 2));
  }
  report.check("quotient.order", 2 * cyclic, image.size());
  report.check_true("quotient.det_pm1", det_ok);
  report.check_true("quotient.kernel_is_aut2", kernel_ok);

  const std::uint64_t g = primitive_root(p, m);
  const QuotientMatrix M = diag(g, inv_mod(g, n), n);
  const QuotientMatrix Q{{0, 1 % n, 1 % n, 0}, n};
  const QuotientMatrix I = diag(1, 1, n);
  report.check_true("quotient.M_from_f", quotient_matrix(f_aut(K, g)) == M);
  report.check_true("quotient.Q_from_mu", quotient_matrix(swap(K)) == Q);
  report.check_true("quotient.Q_squared", Q * Q == I);
  report.check_true("quotient.QMQ_inverse", Q * M * Q * M == I);
  std::uint64_t order = 1;
  for (QuotientMatrix x = M; !(x == I); x = x * M) ++order;
  report.check("quotient.M_order", cyclic, order);

  std::set<std::array<std::uint64_t, 4>> generated;
  QuotientMatrix x = I;
  for (std::uint64_t t = 0; t < order; ++t, x = x * M) {
    generated.insert(x.e);
    generated.insert((Q * x).e);
  }
  report.check_true("quotient.generated_by_M_Q", generated == image);
  if (p == 3 && m == 1) {
    bool exp2 = true;
    for (const auto& e : image) {
      const QuotientMatrix y{e, n};
      exp2 = exp2 && y * y == I;
    }
    report.check_true("quotient.klein_four", exp2 && image.size() == 4);
  }
}

void unique_factorization_check(const AutSet& auts, const CentralSeries& series,
                                TheoremReport& report) {
  const GroupPtr& K = auts.group_ptr();
  const std::uint64_t n = K->pm();
  const AutSet aut2 = level_subset(auts, series, 2);
  std::vector<Morphism> tail;
  const Morphism mu = swap(K);
  for (std::uint64_t r = 1; r < n || (n == 1 && r == 1); ++r) {
    if (r % K->p() == 0) continue;
    const Morphism fr = f_aut(K, r);
    tail.push_back(fr);
    tail.push_back(compose(fr, mu));
  }
  const std::uint64_t expected = aut2.size() * tail.size();
  const AutSet products = product_set(aut2.morphisms(), tail);
  report.check("factorization.count", expected, products.size(),
               "distinct g f_r mu^j, r over units modulo p^m");
  report.check("factorization.total", auts.size(), expected);
  report.check_true("factorization.onto", products == auts);
}

}  // namespace macd
