#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqlat/relation.hpp"

namespace eqlat {

/// An equivalence relation on {0,...,n-1} in canonical block form.
///
/// Blocks are ordered by least element and ascend internally, so the block
/// index vector (`block_of`) is exactly the restricted growth string of the
/// partition. Equality and ordering compare that string; ordering is the
/// lexicographic enumeration order of `enumerate_partitions`.
///
/// The incidence matrix is built eagerly at construction, so a Partition is
/// immutable and safe to share across threads.
class Partition {
 public:
  /// The unique partition of the empty set.
  Partition() = default;

  static Partition bottom(std::size_t n);
  static Partition top(std::size_t n);

  /// Parses the canonical text form ("0,1|2,3"). The ground-set size is the
  /// number of listed elements; indices must cover {0,...,n-1} exactly once.
  /// Blocks may be listed in any order and are canonicalized.
  static Partition parse(std::string_view text);
  /// As above, but additionally requires the ground-set size to be `n`.
  static Partition parse(std::string_view text, std::size_t n);

  /// Builds from a restricted growth string. Throws malformed-input if `rgs`
  /// is not one.
  static Partition from_rgs(std::vector<Element> rgs);

  std::size_t size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Element>>& blocks() const noexcept { return blocks_; }
  Element block_of(Element x) const { return rgs_.at(x); }
  const std::vector<Element>& rgs() const noexcept { return rgs_; }
  const BinaryRelation& relation() const noexcept { return relation_; }

  bool related(Element x, Element y) const { return rgs_.at(x) == rgs_.at(y); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.rgs_ == b.rgs_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    if (a.rgs_.size() != b.rgs_.size()) return a.rgs_.size() <=> b.rgs_.size();
    return a.rgs_ <=> b.rgs_;
  }

 private:
  explicit Partition(std::vector<Element> rgs);

  std::vector<Element> rgs_;
  std::vector<std::vector<Element>> blocks_;
  BinaryRelation relation_;
};

/// Partition whose blocks are the fibers of `labels` (labels[x] is the
/// class label of element x). Throws malformed-input if labels.size() != n.
Partition canonicalize(std::size_t n, std::span<const std::int64_t> labels);
/// Map form: every element of {0,...,n-1} must be a key, and no other key.
Partition canonicalize(std::size_t n, const std::map<Element, std::int64_t>& assignment);

BinaryRelation as_relation(const Partition& p);

/// Inverse of as_relation. Throws NotEquivalenceError naming the violated
/// axiom and a witness.
Partition from_relation(const BinaryRelation& r);

BinaryRelation compose(const Partition& a, const Partition& b);

Partition meet(const Partition& a, const Partition& b);
/// Finest common coarsening, by union-find block merging.
Partition join(const Partition& a, const Partition& b);
bool leq(const Partition& a, const Partition& b);

bool permutes(const Partition& a, const Partition& b);
/// First pair (row-major) in exactly one of a∘b and b∘a; empty iff they permute.
std::optional<ElementPair> permutation_witness(const Partition& a, const Partition& b);

inline constexpr std::size_t default_enumeration_cap = 10;

/// All partitions of {0,...,n-1} in lexicographic restricted-growth-string
/// order. Throws resource-guard if n > cap.
std::vector<Partition> enumerate_partitions(std::size_t n,
                                            std::size_t cap = default_enumeration_cap);

/// Random partition from uniformly random labels (not uniform over Eq(n)).
Partition random_partition(std::size_t n, std::mt19937_64& rng);
/// Random partition finer than or equal to `p`.
Partition random_refinement(const Partition& p, std::mt19937_64& rng);

}  // namespace eqlat

template <>
struct std::hash<eqlat::Partition> {
  std::size_t operator()(const eqlat::Partition& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p.rgs()) h = h * 1000003u ^ v;
    return h;
  }
};
