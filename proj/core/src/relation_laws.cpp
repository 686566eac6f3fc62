#include "eqlat/relation_laws.hpp"

#include "eqlat/error.hpp"

namespace eqlat {

namespace {

[[noreturn]] void precondition(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}

void require_inputs(const std::vector<Partition>& inputs, std::size_t count, LawId law) {
  if (inputs.size() != count)
    throw Error(ErrorKind::malformed_input, std::string(to_string(law)) + " takes " +
                                                std::to_string(count) + " inputs");
  for (const auto& p : inputs) require_same_size(inputs.front().size(), p.size(), to_string(law));
}

LawWitness evaluate(LawId law, std::vector<Partition> inputs) {
  auto [lhs, rhs] = law_sides(law, inputs);
  return LawWitness{law, std::move(inputs), lhs.first_difference(rhs)};
}

}  // namespace

const char* to_string(LawId id) noexcept {
  switch (id) {
    case LawId::dedekind_left: return "eq1";
    case LawId::dedekind_right: return "eq2";
    case LawId::closure_join: return "closure_join";
    case LawId::closure_meet: return "closure_meet";
  }
  return "unknown";
}

std::optional<LawId> law_from_string(std::string_view name) {
  for (auto id : {LawId::dedekind_left, LawId::dedekind_right, LawId::closure_join,
                  LawId::closure_meet})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

std::pair<BinaryRelation, BinaryRelation> law_sides(LawId law,
                                                    const std::vector<Partition>& inputs) {
  switch (law) {
    case LawId::dedekind_left: {
      require_inputs(inputs, 3, law);
      const auto& [a, b, c] = std::tie(inputs[0], inputs[1], inputs[2]);
      return {compose(a.relation(), b.relation() & c.relation()),
              b.relation() & compose(a.relation(), c.relation())};
    }
    case LawId::dedekind_right: {
      require_inputs(inputs, 3, law);
      const auto& [a, b, c] = std::tie(inputs[0], inputs[1], inputs[2]);
      return {compose(b.relation() & c.relation(), a.relation()),
              b.relation() & compose(c.relation(), a.relation())};
    }
    case LawId::closure_join: {
      require_inputs(inputs, 3, law);
      const Partition j = join(inputs[0], inputs[1]);
      return {compose(j, inputs[2]), compose(inputs[2], j)};
    }
    case LawId::closure_meet: {
      require_inputs(inputs, 4, law);
      const Partition m = meet(inputs[0], inputs[1]);
      return {compose(m, inputs[2]), compose(inputs[2], m)};
    }
  }
  throw Error(ErrorKind::malformed_input, "unknown law");
}

bool recheck(const LawWitness& w) {
  auto [lhs, rhs] = law_sides(w.law, w.inputs);
  if (!w.offending_pair) return lhs == rhs;
  auto [x, y] = *w.offending_pair;
  if (x >= lhs.size() || y >= lhs.size()) return false;
  return lhs.contains(x, y) != rhs.contains(x, y);
}

LawWitness dedekind_left(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  require_same_size(alpha.size(), beta.size(), "dedekind_left");
  require_same_size(alpha.size(), gamma.size(), "dedekind_left");
  if (!leq(alpha, beta)) precondition("dedekind_left: requires alpha <= beta");
  return evaluate(LawId::dedekind_left, {alpha, beta, gamma});
}

LawWitness dedekind_right(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  require_same_size(alpha.size(), beta.size(), "dedekind_right");
  require_same_size(alpha.size(), gamma.size(), "dedekind_right");
  if (!leq(alpha, beta)) precondition("dedekind_right: requires alpha <= beta");
  return evaluate(LawId::dedekind_right, {alpha, beta, gamma});
}

BinaryRelation iterated_compose(const Partition& a, const Partition& b, std::size_t factors) {
  require_same_size(a.size(), b.size(), "iterated_compose");
  if (factors == 0) precondition("iterated_compose: needs at least one factor");
  BinaryRelation r = a.relation();
  for (std::size_t k = 1; k < factors; ++k)
    r = compose(r, (k % 2 == 0 ? a : b).relation());
  return r;
}

std::size_t composition_fixpoint_length(const Partition& a, const Partition& b) {
  require_same_size(a.size(), b.size(), "join_by_composition");
  // Once r∘next == r, r is closed under composing with both factors (the
  // previous factor is idempotent), so the chain is constant from here on.
  BinaryRelation r = a.relation();
  std::size_t k = 1;
  while (true) {
    BinaryRelation next = compose(r, (k % 2 == 0 ? a : b).relation());
    if (next == r) return k;
    r = std::move(next);
    ++k;
  }
}

Partition join_by_composition(const Partition& a, const Partition& b) {
  return from_relation(iterated_compose(a, b, composition_fixpoint_length(a, b)));
}

LawWitness closure_under_join(const Partition& alpha, const Partition& beta,
                              const Partition& theta) {
  require_same_size(alpha.size(), beta.size(), "closure_under_join");
  require_same_size(alpha.size(), theta.size(), "closure_under_join");
  if (!permutes(alpha, theta)) precondition("closure_under_join: alpha must permute with theta");
  if (!permutes(beta, theta)) precondition("closure_under_join: beta must permute with theta");
  return evaluate(LawId::closure_join, {alpha, beta, theta});
}

LawWitness closure_under_meet(const Partition& alpha, const Partition& beta,
                              const Partition& theta, const Partition& eta) {
  for (const auto* p : {&beta, &theta, &eta})
    require_same_size(alpha.size(), p->size(), "closure_under_meet");
  if (!permutes(alpha, theta)) precondition("closure_under_meet: alpha must permute with theta");
  if (!permutes(beta, theta)) precondition("closure_under_meet: beta must permute with theta");
  if (!leq(alpha, eta)) precondition("closure_under_meet: requires alpha <= eta");
  if (!leq(beta, eta)) precondition("closure_under_meet: requires beta <= eta");
  if (!leq(meet(eta, theta), meet(alpha, beta)))
    precondition("closure_under_meet: requires eta meet theta <= alpha meet beta");
  return evaluate(LawId::closure_meet, {alpha, beta, theta, eta});
}

}  // namespace eqlat
