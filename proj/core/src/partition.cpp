#include "eqlat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "eqlat/error.hpp"

namespace eqlat {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
  }

 private:
  std::vector<Element> parent_;
  std::vector<std::uint8_t> rank_;
};

// Relabels arbitrary labels by first occurrence, which yields the RGS.
template <typename Label>
std::vector<Element> first_occurrence_labels(std::span<const Label> labels) {
  std::unordered_map<Label, Element> seen;
  std::vector<Element> rgs;
  rgs.reserve(labels.size());
  for (const auto& l : labels) {
    auto [it, inserted] = seen.try_emplace(l, static_cast<Element>(seen.size()));
    rgs.push_back(it->second);
  }
  return rgs;
}

[[noreturn]] void malformed(const std::string& msg) {
  throw Error(ErrorKind::malformed_input, msg);
}

}  // namespace

Partition::Partition(std::vector<Element> rgs) : rgs_(std::move(rgs)) {
  const std::size_t n = rgs_.size();
  for (Element x = 0; x < n; ++x) {
    if (rgs_[x] >= blocks_.size()) blocks_.emplace_back();
    blocks_[rgs_[x]].push_back(x);
  }
  relation_ = BinaryRelation(n);
  for (const auto& block : blocks_)
    for (Element x : block)
      for (Element y : block) relation_.insert(x, y);
}

Partition Partition::bottom(std::size_t n) {
  std::vector<Element> rgs(n);
  std::iota(rgs.begin(), rgs.end(), Element{0});
  return Partition(std::move(rgs));
}

Partition Partition::top(std::size_t n) { return Partition(std::vector<Element>(n, 0)); }

Partition Partition::from_rgs(std::vector<Element> rgs) {
  Element next = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] > next) malformed("not a restricted growth string at position " + std::to_string(i));
    if (rgs[i] == next) ++next;
  }
  return Partition(std::move(rgs));
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<Element>> blocks;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = text.find('|', start);
      const std::string_view block_text =
          text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      if (block_text.empty()) malformed("empty block in partition \"" + std::string(text) + "\"");
      auto& block = blocks.emplace_back();
      std::size_t pos = 0;
      while (true) {
        const std::size_t comma = block_text.find(',', pos);
        const std::string_view tok = block_text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Element value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
          malformed("bad element \"" + std::string(tok) + "\" in partition \"" +
                    std::string(text) + "\"");
        block.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
  }

  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  std::vector<std::int64_t> labels(n, -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (Element x : blocks[bi]) {
      if (x >= n)
        malformed("element " + std::to_string(x) + " out of range (or gap below it) in \"" +
                  std::string(text) + "\"");
      if (labels[x] != -1)
        malformed("duplicate element " + std::to_string(x) + " in \"" + std::string(text) + "\"");
      labels[x] = static_cast<std::int64_t>(bi);
    }
  }
  return canonicalize(n, labels);
}

Partition Partition::parse(std::string_view text, std::size_t n) {
  Partition p = parse(text);
  if (p.size() != n)
    malformed("partition \"" + std::string(text) + "\" has " + std::to_string(p.size()) +
              " elements, expected " + std::to_string(n));
  return p;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b != 0) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

Partition canonicalize(std::size_t n, std::span<const std::int64_t> labels) {
  if (labels.size() != n)
    malformed("assignment covers " + std::to_string(labels.size()) + " elements, expected " +
              std::to_string(n));
  return Partition::from_rgs(first_occurrence_labels(labels));
}

Partition canonicalize(std::size_t n, const std::map<Element, std::int64_t>& assignment) {
  std::vector<std::int64_t> labels;
  labels.reserve(n);
  for (Element x = 0; x < n; ++x) {
    auto it = assignment.find(x);
    if (it == assignment.end()) malformed("assignment missing element " + std::to_string(x));
    labels.push_back(it->second);
  }
  if (assignment.size() != n) malformed("assignment has elements outside the ground set");
  return canonicalize(n, labels);
}

BinaryRelation as_relation(const Partition& p) { return p.relation(); }

Partition from_relation(const BinaryRelation& r) {
  const std::size_t n = r.size();
  for (Element x = 0; x < n; ++x)
    if (!r.contains(x, x)) throw NotEquivalenceError(EquivalenceAxiom::reflexive, {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (r.contains(x, y) && !r.contains(y, x))
        throw NotEquivalenceError(EquivalenceAxiom::symmetric, {x, y});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (r.contains(y, z) && !r.contains(x, z))
          throw NotEquivalenceError(EquivalenceAxiom::transitive, {x, y, z});
    }
  // Reflexive + symmetric + transitive: the least related element names the class.
  std::vector<std::int64_t> labels(n);
  for (Element x = 0; x < n; ++x) {
    Element rep = 0;
    while (!r.contains(x, rep)) ++rep;
    labels[x] = rep;
  }
  return canonicalize(n, labels);
}

BinaryRelation compose(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "compose");
  return compose(a.relation(), b.relation());
}

Partition meet(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "meet");
  const std::size_t n = a.size();
  std::vector<std::int64_t> labels(n);
  for (Element x = 0; x < n; ++x)
    labels[x] = static_cast<std::int64_t>(a.block_of(x)) * static_cast<std::int64_t>(n + 1) +
                b.block_of(x);
  return canonicalize(n, labels);
}

Partition join(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "join");
  const std::size_t n = a.size();
  DisjointSet sets(n);
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks())
      for (std::size_t i = 1; i < block.size(); ++i) sets.unite(block[0], block[i]);
  std::vector<std::int64_t> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = sets.find(x);
  return canonicalize(n, labels);
}

bool leq(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "leq");
  for (const auto& block : a.blocks())
    for (Element x : block)
      if (b.block_of(x) != b.block_of(block.front())) return false;
  return true;
}

std::optional<ElementPair> permutation_witness(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "permutes");
  return compose(a.relation(), b.relation()).first_difference(compose(b.relation(), a.relation()));
}

bool permutes(const Partition& a, const Partition& b) {
  return !permutation_witness(a, b).has_value();
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::resource_guard, "enumeration of Eq(" + std::to_string(n) +
                                               ") exceeds the cap n <= " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<Element> rgs(n, 0);
  // prefix_max[i] = max(rgs[0..i-1]), with prefix_max[0] unused.
  std::vector<Element> prefix_max(n + 1, 0);
  while (true) {
    out.push_back(Partition::from_rgs(rgs));
    std::size_t i = n;
    bool advanced = false;
    while (i > 1) {
      --i;
      if (rgs[i] <= prefix_max[i]) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        for (std::size_t j = i + 1; j <= n; ++j)
          prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

Partition random_partition(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) return Partition{};
  std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(n) - 1);
  std::vector<std::int64_t> labels(n);
  for (auto& l : labels) l = dist(rng);
  return canonicalize(n, labels);
}

Partition random_refinement(const Partition& p, std::mt19937_64& rng) {
  const std::size_t n = p.size();
  std::vector<std::int64_t> labels(n);
  for (const auto& block : p.blocks()) {
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(block.size()) - 1);
    for (Element x : block)
      labels[x] = static_cast<std::int64_t>(block.front()) * static_cast<std::int64_t>(n) + dist(rng);
  }
  return canonicalize(n, labels);
}

}  // namespace eqlat
