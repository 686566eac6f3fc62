#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqlat/partition.hpp"
#include "eqlat/sublattice.hpp"

namespace eqlat {

/// x ↦ x ∧ eta, from the upper interval down to the lower one.
Partition phi(const Partition& alpha, const Partition& eta);

/// x ↦ x ∘ theta, read back as a partition. Throws NonPermutingError if
/// alpha does not permute with theta; the composite is then not transitive.
Partition psi(const Partition& alpha, const Partition& theta);

/// Full evidence for the interval isomorphism between [theta, eta∨theta]_L
/// and the permuting part of [eta∧theta, eta]_L.
struct TranspositionCertificate {
  std::size_t n = 0;
  Partition eta;
  Partition theta;
  IntervalSlice upper;
  IntervalSlice lower;
  /// Size of [eta∧theta, eta]_L before the permutability filter.
  std::size_t lower_unconstrained_size = 0;
  MemberMap phi_table;
  MemberMap psi_table;
  IsoCertificate iso;
  bool range_ok = false;
  bool sublattice_ok = false;
  bool psi_join_ok = false;
  /// Human-readable description of every failed clause (empty when valid).
  std::vector<std::string> failures;

  bool valid() const noexcept { return iso.valid() && range_ok && sublattice_ok && psi_join_ok; }
};

/// Builds both slices, tabulates phi and psi and checks every clause by
/// exhaustive evaluation. Requires eta, theta in L and permuting.
TranspositionCertificate verify_transposition(const SubLattice& lattice, const Partition& eta,
                                              const Partition& theta);

/// Modular-lattice transposition: x ↦ x∧a from [b, a∨b]_L to [a∧b, a]_L with
/// inverse y ↦ y∨b. Throws precondition unless L is modular.
IsoCertificate classical_transposition_check(const SubLattice& lattice, const Partition& a,
                                             const Partition& b);

enum class NecessityFailure { phi_image_not_permuting, size_mismatch };

const char* to_string(NecessityFailure kind) noexcept;

/// A non-permuting pair for which the interval correspondence breaks.
struct NecessityWitness {
  SubLattice lattice;
  Partition eta;
  Partition theta;
  /// Member of [theta, eta∨theta]_L. For phi_image_not_permuting, phi(alpha)
  /// does not permute with theta.
  Partition alpha;
  NecessityFailure failure_kind;
  std::size_t upper_size = 0;
  std::size_t lower_size = 0;
};

/// Re-derives the witness's failure claim from scratch.
bool recheck(const NecessityWitness& w);

struct NecessitySearchResult {
  std::optional<NecessityWitness> witness;
  std::size_t lattices_examined = 0;
  std::size_t pairs_examined = 0;

  bool exhausted() const noexcept { return !witness.has_value(); }
};

/// Scans Eq(n) (then, optionally, the sublattices generated by each pair of
/// partitions) for the first failing non-permuting (eta, theta) in
/// enumeration order. At most `max_lattices` lattices are examined.
NecessitySearchResult search_necessity_witness(std::size_t n, std::size_t max_lattices = 1,
                                               bool include_two_generated = false,
                                               std::size_t cap = default_enumeration_cap);

}  // namespace eqlat
