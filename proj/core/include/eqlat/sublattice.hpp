#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqlat/partition.hpp"

namespace eqlat {

/// A finite subset of Eq(n) closed under the ambient meet and join.
///
/// Elements are kept sorted in enumeration order. Storage is shared, so
/// copies are cheap and a SubLattice behaves as an immutable value.
class SubLattice {
 public:
  /// Takes ownership of `elements` and verifies closure. Throws not-closed
  /// naming the first pair whose meet or join is missing.
  SubLattice(std::size_t n, std::vector<Partition> elements);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_->size(); }
  const std::vector<Partition>& elements() const noexcept { return *elements_; }
  auto begin() const noexcept { return elements_->begin(); }
  auto end() const noexcept { return elements_->end(); }

  bool contains(const Partition& p) const;
  std::optional<std::size_t> index_of(const Partition& p) const;

  friend bool operator==(const SubLattice& a, const SubLattice& b) {
    return a.n_ == b.n_ && *a.elements_ == *b.elements_;
  }

 private:
  struct Trusted {};
  SubLattice(Trusted, std::size_t n, std::vector<Partition> sorted_elements);

  friend SubLattice full_lattice(std::size_t n, std::size_t cap);
  friend SubLattice closure(std::size_t n, std::span<const Partition> generators);

  std::size_t n_;
  std::shared_ptr<const std::vector<Partition>> elements_;
};

/// All of Eq(n).
SubLattice full_lattice(std::size_t n, std::size_t cap = default_enumeration_cap);

/// Least meet/join-closed superset of `generators` (worklist closure).
SubLattice closure(std::size_t n, std::span<const Partition> generators);

/// [lo, hi] ∩ L, optionally restricted to members that permute with theta.
struct IntervalSlice {
  SubLattice lattice;
  Partition lo;
  Partition hi;
  std::optional<Partition> theta;
  std::vector<Partition> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Partition& p) const;
};

IntervalSlice interval(const SubLattice& lattice, const Partition& lo, const Partition& hi);
IntervalSlice interval_permuting(const SubLattice& lattice, const Partition& lo,
                                 const Partition& hi, const Partition& theta);

struct ModularityResult {
  bool modular = true;
  /// (a, b, c) with c <= a and a∧(b∨c) != (a∧b)∨c.
  std::optional<std::array<Partition, 3>> violation;
};

ModularityResult is_modular(const SubLattice& lattice);

/// Cover pairs (a, b): a < b with nothing of L strictly between. Sorted by
/// (index of a, index of b) in the lattice.
std::vector<std::pair<Partition, Partition>> covers(const SubLattice& lattice);

/// First pair of members whose meet or join leaves `members`, if any.
std::optional<std::pair<Partition, Partition>> closure_violation(
    std::span<const Partition> members);

using MemberMap = std::map<Partition, Partition>;

struct IsoChecks {
  bool bijection = false;
  bool forward_monotone = false;
  bool backward_monotone = false;
  bool meet_preserving = false;
  bool join_preserving = false;

  bool all() const noexcept {
    return bijection && forward_monotone && backward_monotone && meet_preserving &&
           join_preserving;
  }
};

struct IsoCertificate {
  MemberMap forward;
  MemberMap backward;
  IsoChecks checks;

  bool valid() const noexcept { return checks.all(); }
};

/// Recomputes every check from the tables by exhaustive evaluation over the
/// slice members. Throws malformed-certificate unless `forward` is keyed by
/// exactly the members of `src` and `backward` by those of `dst`.
IsoCertificate certify_iso(const IntervalSlice& src, const IntervalSlice& dst, MemberMap forward,
                           MemberMap backward);

}  // namespace eqlat
