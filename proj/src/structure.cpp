#include "macd/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "macd/residue.hpp"

namespace macd {

namespace {

constexpr std::uint8_t kUnknown = 0xff;
constexpr unsigned kMaxDepth = 64;

std::vector<std::uint64_t> indices_of(const std::vector<bool>& members) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < members.size(); ++i)
    if (members[i]) out.push_back(i);
  return out;
}

}  // namespace

SubgroupSet::SubgroupSet(GroupPtr group, std::vector<bool> members,
                         std::vector<Element> generators)
    : group_(std::move(group)), members_(std::move(members)), generators_(std::move(generators)) {
  if (!group_) throw std::invalid_argument("SubgroupSet: null group");
  if (members_.size() != group_->order())
    throw std::invalid_argument("SubgroupSet: membership vector has the wrong size");
  indices_ = indices_of(members_);
}

bool SubgroupSet::contains(const Element& g) const {
  return group_->contains(g) && members_[group_->index(g)];
}

std::vector<Element> SubgroupSet::elements() const {
  std::vector<Element> out;
  out.reserve(indices_.size());
  for (auto idx : indices_) out.push_back(group_->unindex(idx));
  return out;
}

bool SubgroupSet::is_abelian() const {
  const auto elems = elements();
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (std::size_t y = x + 1; y < elems.size(); ++y)
      if (group_->multiply(elems[x], elems[y]) != group_->multiply(elems[y], elems[x]))
        return false;
  return true;
}

bool SubgroupSet::is_closed() const {
  if (!members_[0]) return false;
  const auto elems = elements();
  for (const auto& x : elems) {
    if (!contains(group_->inverse(x))) return false;
    for (const auto& y : elems)
      if (!contains(group_->multiply(x, y))) return false;
  }
  return true;
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
  if (group_->id() != other.group_->id()) return false;
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

CentralSeries::CentralSeries(GroupPtr group, std::vector<std::uint8_t> levels,
                             unsigned nilpotency_class)
    : group_(std::move(group)), levels_(std::move(levels)), class_(nilpotency_class) {
  const auto gens_by_term = known_series_generators(*group_);
  for (unsigned i = 0; i <= class_; ++i) {
    std::vector<bool> members(levels_.size());
    for (std::uint64_t idx = 0; idx < levels_.size(); ++idx) members[idx] = levels_[idx] <= i;
    std::vector<Element> gens;
    if (i == class_) {
      gens = {group_->a(), group_->b()};
    } else if (i >= 1 && i - 1 < gens_by_term.size()) {
      gens = gens_by_term[i - 1];
    }
    terms_.emplace_back(group_, std::move(members), std::move(gens));
  }
}

const SubgroupSet& CentralSeries::term(unsigned i) const {
  return terms_[std::min<std::size_t>(i, terms_.size() - 1)];
}

unsigned CentralSeries::level(const Element& g) const { return levels_[group_->index(g)]; }

CentralSeries upper_central_series(const GroupPtr& group) {
  const Group& G = *group;
  const Element A = G.a(), B = G.b();
  const Element Ainv = G.inverse(A), Binv = G.inverse(B);
  std::vector<std::uint8_t> level(G.order(), kUnknown);
  level[0] = 0;

  // level(z) = 1 + max(level([z,A]), level([z,B])) for z != 1
  struct Frame {
    std::uint64_t idx, ca, cb;
  };
  std::vector<Frame> stack;
  unsigned cls = 0;
  for (std::uint64_t start = 0; start < G.order(); ++start) {
    if (level[start] != kUnknown) continue;
    auto push = [&](std::uint64_t idx) {
      const Element z = G.unindex(idx);
      const Element zi = G.inverse(z);
      const Element ca = G.multiply(G.multiply(zi, Ainv), G.multiply(z, A));
      const Element cb = G.multiply(G.multiply(zi, Binv), G.multiply(z, B));
      stack.push_back({idx, G.index(ca), G.index(cb)});
      if (stack.size() > kMaxDepth) throw std::logic_error("group is not nilpotent");
    };
    push(start);
    while (!stack.empty()) {
      const Frame f = stack.back();
      if (level[f.ca] == kUnknown) {
        push(f.ca);
        continue;
      }
      if (level[f.cb] == kUnknown) {
        push(f.cb);
        continue;
      }
      level[f.idx] = static_cast<std::uint8_t>(1 + std::max(level[f.ca], level[f.cb]));
      cls = std::max<unsigned>(cls, level[f.idx]);
      stack.pop_back();
    }
  }
  return CentralSeries(group, std::move(level), cls);
}

SubgroupSet center(const GroupPtr& group) {
  const Group& G = *group;
  const Element A = G.a(), B = G.b();
  std::vector<bool> members(G.order());
  for (std::uint64_t idx = 0; idx < G.order(); ++idx) {
    const Element z = G.unindex(idx);
    members[idx] = G.multiply(z, A) == G.multiply(A, z) && G.multiply(z, B) == G.multiply(B, z);
  }
  auto gens = known_series_generators(G);
  return SubgroupSet(group, std::move(members), gens.empty() ? std::vector<Element>{} : gens[0]);
}

SubgroupSet centralizer(const GroupPtr& group, const Element& g) {
  const Group& G = *group;
  std::vector<bool> members(G.order());
  for (std::uint64_t idx = 0; idx < G.order(); ++idx) {
    const Element x = G.unindex(idx);
    members[idx] = G.multiply(x, g) == G.multiply(g, x);
  }
  return SubgroupSet(group, std::move(members), {});
}

SubgroupSet closure(const GroupPtr& group, const std::vector<Element>& generators) {
  const Group& G = *group;
  std::vector<bool> members(G.order());
  std::deque<Element> queue;
  members[0] = true;
  queue.push_back(G.identity());
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      const Element y = G.multiply(x, s);
      const auto idx = G.index(y);
      if (!members[idx]) {
        members[idx] = true;
        queue.push_back(y);
      }
    }
  }
  return SubgroupSet(group, std::move(members), generators);
}

std::pair<std::uint64_t, std::uint64_t> frattini_image(const Group& group, const Element& g) {
  if (!group.contains(g)) throw std::invalid_argument("frattini_image: foreign element");
  return {g.i % group.p(), g.j % group.p()};
}

Element project(const Element& g, const Group& from, const Group& to) {
  if (!(from.params() == to.params()))
    throw std::invalid_argument("project: parameter sets differ");
  const bool ok = (from.kind() == GroupKind::J && to.kind() != GroupKind::J) ||
                  (from.kind() == GroupKind::H && to.kind() == GroupKind::K);
  if (!ok) throw std::invalid_argument("project: unsupported direction");
  if (!from.contains(g)) throw std::invalid_argument("project: foreign element");
  return to.element(static_cast<std::int64_t>(g.i % to.mod_a()), static_cast<std::int64_t>(g.j),
                    static_cast<std::int64_t>(g.k % to.mod_c()));
}

bool in_center_term(const Group& group, const Element& g, unsigned i) {
  if (group.is_identity(g)) return true;
  if (i == 0) return false;
  return in_center_term(group, group.commutator(g, group.a()), i - 1) &&
         in_center_term(group, group.commutator(g, group.b()), i - 1);
}

unsigned center_level(const Group& group, const Element& g) {
  for (unsigned i = 0; i < kMaxDepth; ++i)
    if (in_center_term(group, g, i)) return i;
  throw std::logic_error("center_level: no finite level");
}

unsigned expected_class(GroupKind kind) {
  switch (kind) {
    case GroupKind::J: return 5;
    case GroupKind::H: return 4;
    case GroupKind::K: return 3;
  }
  return 0;
}

std::vector<std::vector<Element>> known_series_generators(const Group& G) {
  const auto pm = static_cast<std::int64_t>(G.pm());
  const Element A = G.a(), B = G.b(), C = G.c();
  const Element Apm = G.power(A, pm), Bpm = G.power(B, pm), Cpm = G.power(C, pm);
  switch (G.kind()) {
    case GroupKind::J: {
      const Element Ap2m = G.power(A, pm * pm);
      return {{Ap2m}, {Ap2m, Cpm}, {Apm, Bpm, Cpm}, {Apm, Bpm, C}};
    }
    case GroupKind::H:
      return {{Cpm}, {Apm, Bpm, Cpm}, {Apm, Bpm, C}};
    case GroupKind::K:
      return {{Apm, Bpm}, {Apm, Bpm, C}};
  }
  return {};
}

}  // namespace macd
