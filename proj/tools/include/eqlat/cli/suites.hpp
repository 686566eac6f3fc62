#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "eqlat/cli/report.hpp"
#include "eqlat/sublattice.hpp"

namespace eqlat::cli {

inline constexpr std::size_t default_suite_cap = 6;
inline constexpr std::uint64_t default_seed = 20121114;

struct SuiteOptions {
  /// Ambient lattice; Eq(n) when absent.
  std::optional<SubLattice> lattice;
  /// Largest n accepted for an exhaustive run.
  std::size_t max_n = default_suite_cap;
  /// When nonzero, the dedekind and closure-join suites draw this many random
  /// cases instead of enumerating.
  std::size_t samples = 0;
  std::uint64_t seed = default_seed;
  std::optional<double> max_seconds;
  bool timing = false;
};

/// Throws resource-guard once the wall-clock budget is spent.
class Budget {
 public:
  explicit Budget(std::optional<double> max_seconds);
  void check() const;
  double elapsed_ms() const;

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<double> max_seconds_;
};

/// Resolves the ambient lattice for a suite, enforcing the size cap on Eq(n).
SubLattice suite_lattice(std::size_t n, const SuiteOptions& options);

VerificationReport run_dedekind_suite(std::size_t n, const SuiteOptions& options = {});
VerificationReport run_transposition_suite(std::size_t n, const SuiteOptions& options = {});
VerificationReport run_closure_suite(std::size_t n, const SuiteOptions& options = {});
VerificationReport run_classical_suite(std::size_t n, const SuiteOptions& options = {});

/// Every distinct sublattice of Eq(n) generated by one or two elements, in
/// order of first generation.
std::vector<SubLattice> small_generated_sublattices(std::size_t n, std::size_t cap);

}  // namespace eqlat::cli
