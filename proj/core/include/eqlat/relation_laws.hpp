#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlat/partition.hpp"
#include "eqlat/relation.hpp"

namespace eqlat {

enum class LawId {
  dedekind_left,   // a∘(b∩c) = b∩(a∘c) for a ≤ b
  dedekind_right,  // (b∩c)∘a = b∩(c∘a) for a ≤ b
  closure_join,    // (a∨b)∘t = t∘(a∨b) when a and b permute with t
  closure_meet,    // (a∧b)∘t = t∘(a∧b) inside an interval [e∧t, e]
};

const char* to_string(LawId id) noexcept;
std::optional<LawId> law_from_string(std::string_view name);

/// Outcome of checking one relational identity on concrete inputs.
///
/// `offending_pair` is empty iff both sides agree. When present, the pair is
/// a member of exactly one side, which `recheck` can confirm independently.
struct LawWitness {
  LawId law;
  std::vector<Partition> inputs;
  std::optional<ElementPair> offending_pair;

  bool holds() const noexcept { return !offending_pair.has_value(); }
};

/// Both sides of the identity named by `law`, evaluated on `inputs` as
/// relations. Input order matches the corresponding check function.
std::pair<BinaryRelation, BinaryRelation> law_sides(LawId law, const std::vector<Partition>& inputs);

/// True iff the witness is consistent: for a passing witness the sides
/// are equal; for a failing one the pair is in exactly one side.
bool recheck(const LawWitness& w);

LawWitness dedekind_left(const Partition& alpha, const Partition& beta, const Partition& gamma);
LawWitness dedekind_right(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// The alternating product a∘b∘a∘... with `factors` factors, starting with a.
BinaryRelation iterated_compose(const Partition& a, const Partition& b, std::size_t factors);

/// Number of factors at which iterated_compose first stops growing.
std::size_t composition_fixpoint_length(const Partition& a, const Partition& b);

/// Join computed as the fixpoint of iterated composition. Independent of the
/// union-find join in partition.hpp.
Partition join_by_composition(const Partition& a, const Partition& b);

/// Checks that join(alpha, beta) permutes with theta, in both inclusion
/// directions. Requires alpha and beta to permute with theta.
LawWitness closure_under_join(const Partition& alpha, const Partition& beta,
                              const Partition& theta);

/// Checks that meet(alpha, beta) permutes with theta, given alpha, beta in
/// the interval [eta∧theta, eta] and both permuting with theta.
LawWitness closure_under_meet(const Partition& alpha, const Partition& beta,
                              const Partition& theta, const Partition& eta);

}  // namespace eqlat
