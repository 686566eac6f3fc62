#include "eqlat/error.hpp"

namespace eqlat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::not_equivalence: return "not-equivalence";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::resource_guard: return "resource-guard";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::non_permuting: return "non-permuting";
    case ErrorKind::not_closed: return "not-closed";
    case ErrorKind::malformed_certificate: return "malformed-certificate";
  }
  return "unknown";
}

const char* to_string(EquivalenceAxiom axiom) noexcept {
  switch (axiom) {
    case EquivalenceAxiom::reflexive: return "reflexivity";
    case EquivalenceAxiom::symmetric: return "symmetry";
    case EquivalenceAxiom::transitive: return "transitivity";
  }
  return "unknown";
}

namespace {

std::string describe(EquivalenceAxiom axiom, const std::vector<std::uint32_t>& witness) {
  std::string msg = std::string("relation violates ") + to_string(axiom) + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) msg += ',';
    msg += std::to_string(witness[i]);
  }
  msg += ')';
  return msg;
}

}  // namespace

NotEquivalenceError::NotEquivalenceError(EquivalenceAxiom axiom,
                                         std::vector<std::uint32_t> witness)
    : Error(ErrorKind::not_equivalence, describe(axiom, witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

NonPermutingError::NonPermutingError(std::pair<std::uint32_t, std::uint32_t> pair,
                                     const std::string& context)
    : Error(ErrorKind::non_permuting,
            context + ": relations do not permute, witness (" + std::to_string(pair.first) +
                "," + std::to_string(pair.second) + ")"),
      pair_(pair) {}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::size_mismatch, std::string(op) + ": ground-set sizes differ (" +
                                              std::to_string(a) + " vs " + std::to_string(b) +
                                              ")");
  }
}

}  // namespace eqlat
