#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqlat {

enum class ErrorKind {
  malformed_input,
  not_equivalence,
  size_mismatch,
  resource_guard,
  precondition,
  non_permuting,
  not_closed,
  malformed_certificate,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error thrown by the library. `kind()` lets callers (the CLI
/// in particular) map failures onto exit codes without catching subtypes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class EquivalenceAxiom { reflexive, symmetric, transitive };

const char* to_string(EquivalenceAxiom axiom) noexcept;

/// A relation failed one of the equivalence axioms. The witness holds one
/// element (reflexivity), a pair (symmetry) or a triple (transitivity).
class NotEquivalenceError : public Error {
 public:
  NotEquivalenceError(EquivalenceAxiom axiom, std::vector<std::uint32_t> witness);

  EquivalenceAxiom axiom() const noexcept { return axiom_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  EquivalenceAxiom axiom_;
  std::vector<std::uint32_t> witness_;
};

/// Two relations do not commute; `pair()` lies in exactly one of the two
/// composition orders.
class NonPermutingError : public Error {
 public:
  NonPermutingError(std::pair<std::uint32_t, std::uint32_t> pair, const std::string& context);

  std::pair<std::uint32_t, std::uint32_t> pair() const noexcept { return pair_; }

 private:
  std::pair<std::uint32_t, std::uint32_t> pair_;
};

void require_same_size(std::size_t a, std::size_t b, const char* op);

}  // namespace eqlat
