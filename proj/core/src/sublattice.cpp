#include "eqlat/sublattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "eqlat/error.hpp"

namespace eqlat {

namespace {

std::vector<Partition> sorted_unique(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool member(std::span<const Partition> sorted, const Partition& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

SubLattice::SubLattice(Trusted, std::size_t n, std::vector<Partition> sorted_elements)
    : n_(n), elements_(std::make_shared<const std::vector<Partition>>(std::move(sorted_elements))) {}

SubLattice::SubLattice(std::size_t n, std::vector<Partition> elements) : n_(n) {
  if (elements.empty()) throw Error(ErrorKind::malformed_input, "sublattice must be nonempty");
  for (const auto& p : elements) require_same_size(n, p.size(), "sublattice");
  auto sorted = sorted_unique(std::move(elements));
  if (auto bad = closure_violation(sorted)) {
    throw Error(ErrorKind::not_closed, "meet or join of " + bad->first.to_string() + " and " +
                                           bad->second.to_string() + " is missing");
  }
  elements_ = std::make_shared<const std::vector<Partition>>(std::move(sorted));
}

bool SubLattice::contains(const Partition& p) const { return member(*elements_, p); }

std::optional<std::size_t> SubLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elements_->begin(), elements_->end(), p);
  if (it == elements_->end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_->begin());
}

SubLattice full_lattice(std::size_t n, std::size_t cap) {
  return SubLattice(SubLattice::Trusted{}, n, enumerate_partitions(n, cap));
}

SubLattice closure(std::size_t n, std::span<const Partition> generators) {
  if (generators.empty()) throw Error(ErrorKind::malformed_input, "closure: no generators");
  for (const auto& g : generators) require_same_size(n, g.size(), "closure");

  std::unordered_set<Partition> seen;
  std::vector<Partition> found;
  std::deque<Partition> pending;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) pending.push_back(std::move(p));
  };
  for (const auto& g : generators) add(g);

  while (!pending.empty()) {
    Partition next = std::move(pending.front());
    pending.pop_front();
    found.push_back(next);
    for (std::size_t i = 0; i < found.size(); ++i) {
      add(meet(next, found[i]));
      add(join(next, found[i]));
    }
  }
  return SubLattice(SubLattice::Trusted{}, n, sorted_unique(std::move(found)));
}

bool IntervalSlice::contains(const Partition& p) const { return member(members, p); }

IntervalSlice interval(const SubLattice& lattice, const Partition& lo, const Partition& hi) {
  require_same_size(lattice.ground_size(), lo.size(), "interval");
  require_same_size(lattice.ground_size(), hi.size(), "interval");
  if (!lattice.contains(lo))
    throw Error(ErrorKind::precondition, "interval: lower bound " + lo.to_string() + " not in L");
  if (!lattice.contains(hi))
    throw Error(ErrorKind::precondition, "interval: upper bound " + hi.to_string() + " not in L");
  if (!leq(lo, hi))
    throw Error(ErrorKind::precondition,
                "interval: bounds " + lo.to_string() + " and " + hi.to_string() + " not ordered");
  IntervalSlice slice{lattice, lo, hi, std::nullopt, {}};
  for (const auto& p : lattice)
    if (leq(lo, p) && leq(p, hi)) slice.members.push_back(p);
  return slice;
}

IntervalSlice interval_permuting(const SubLattice& lattice, const Partition& lo,
                                 const Partition& hi, const Partition& theta) {
  require_same_size(lattice.ground_size(), theta.size(), "interval_permuting");
  if (!lattice.contains(theta))
    throw Error(ErrorKind::precondition,
                "interval_permuting: theta " + theta.to_string() + " not in L");
  IntervalSlice slice = interval(lattice, lo, hi);
  slice.theta = theta;
  std::erase_if(slice.members, [&](const Partition& p) { return !permutes(p, theta); });
  return slice;
}

ModularityResult is_modular(const SubLattice& lattice) {
  const auto& el = lattice.elements();
  for (const auto& a : el)
    for (const auto& b : el) {
      const Partition ab = meet(a, b);
      for (const auto& c : el) {
        if (!leq(c, a)) continue;
        if (meet(a, join(b, c)) != join(ab, c))
          return ModularityResult{false, std::array<Partition, 3>{a, b, c}};
      }
    }
  return ModularityResult{};
}

std::vector<std::pair<Partition, Partition>> covers(const SubLattice& lattice) {
  const auto& el = lattice.elements();
  const std::size_t m = el.size();
  // below[i][j]: el[i] < el[j]
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) below[i][j] = i != j && leq(el[i], el[j]);

  std::vector<std::pair<Partition, Partition>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < m && direct; ++k)
        if (below[i][k] && below[k][j]) direct = false;
      if (direct) out.emplace_back(el[i], el[j]);
    }
  return out;
}

std::optional<std::pair<Partition, Partition>> closure_violation(
    std::span<const Partition> members) {
  std::vector<Partition> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!member(sorted, meet(sorted[i], sorted[j])) || !member(sorted, join(sorted[i], sorted[j])))
        return std::pair{sorted[i], sorted[j]};
  return std::nullopt;
}

namespace {

void require_total(const MemberMap& map, const std::vector<Partition>& domain, const char* name) {
  if (map.size() != domain.size())
    throw Error(ErrorKind::malformed_certificate,
                std::string(name) + " map has " + std::to_string(map.size()) +
                    " entries for " + std::to_string(domain.size()) + " members");
  for (const auto& p : domain)
    if (!map.contains(p))
      throw Error(ErrorKind::malformed_certificate,
                  std::string(name) + " map undefined on " + p.to_string());
}

bool inverse_into(const MemberMap& f, const MemberMap& g) {
  for (const auto& [x, fx] : f) {
    auto it = g.find(fx);
    if (it == g.end() || it->second != x) return false;
  }
  return true;
}

bool monotone(const MemberMap& f) {
  for (const auto& [x, fx] : f)
    for (const auto& [y, fy] : f)
      if (leq(x, y) && !leq(fx, fy)) return false;
  return true;
}

template <typename Op>
bool preserves(const MemberMap& f, Op op) {
  for (const auto& [x, fx] : f)
    for (const auto& [y, fy] : f) {
      auto it = f.find(op(x, y));
      if (it == f.end() || it->second != op(fx, fy)) return false;
    }
  return true;
}

}  // namespace

IsoCertificate certify_iso(const IntervalSlice& src, const IntervalSlice& dst, MemberMap forward,
                           MemberMap backward) {
  require_total(forward, src.members, "forward");
  require_total(backward, dst.members, "backward");

  IsoCertificate cert{std::move(forward), std::move(backward), {}};
  auto& f = cert.forward;
  auto& g = cert.backward;
  auto& c = cert.checks;

  const auto meet_op = [](const Partition& a, const Partition& b) { return meet(a, b); };
  const auto join_op = [](const Partition& a, const Partition& b) { return join(a, b); };

  c.bijection = inverse_into(f, g) && inverse_into(g, f);
  c.forward_monotone = monotone(f);
  c.backward_monotone = monotone(g);
  c.meet_preserving = preserves(f, meet_op) && preserves(g, meet_op);
  c.join_preserving = preserves(f, join_op) && preserves(g, join_op);
  return cert;
}

}  // namespace eqlat
