#include "eqlat/transposition.hpp"

#include "eqlat/error.hpp"

namespace eqlat {

Partition phi(const Partition& alpha, const Partition& eta) {
  require_same_size(alpha.size(), eta.size(), "phi");
  return meet(alpha, eta);
}

Partition psi(const Partition& alpha, const Partition& theta) {
  require_same_size(alpha.size(), theta.size(), "psi");
  if (auto w = permutation_witness(alpha, theta)) throw NonPermutingError(*w, "psi");
  return from_relation(compose(alpha, theta));
}

TranspositionCertificate verify_transposition(const SubLattice& lattice, const Partition& eta,
                                              const Partition& theta) {
  require_same_size(lattice.ground_size(), eta.size(), "verify_transposition");
  require_same_size(lattice.ground_size(), theta.size(), "verify_transposition");
  if (!lattice.contains(eta))
    throw Error(ErrorKind::precondition, "verify_transposition: eta " + eta.to_string() +
                                             " not in L");
  if (!lattice.contains(theta))
    throw Error(ErrorKind::precondition, "verify_transposition: theta " + theta.to_string() +
                                             " not in L");
  if (auto w = permutation_witness(eta, theta)) throw NonPermutingError(*w, "verify_transposition");

  const Partition lo = meet(eta, theta);
  const Partition hi = join(eta, theta);

  TranspositionCertificate cert{.n = lattice.ground_size(),
                                .eta = eta,
                                .theta = theta,
                                .upper = interval(lattice, theta, hi),
                                .lower = interval_permuting(lattice, lo, eta, theta),
                                .lower_unconstrained_size = 0,
                                .phi_table = {},
                                .psi_table = {},
                                .iso = {},
                                .range_ok = true,
                                .sublattice_ok = false,
                                .psi_join_ok = true,
                                .failures = {}};
  cert.lower_unconstrained_size = interval(lattice, lo, eta).size();

  for (const auto& a : cert.upper.members) {
    Partition image = phi(a, eta);
    if (!permutes(image, theta)) {
      cert.range_ok = false;
      cert.failures.push_back("phi(" + a.to_string() + ") = " + image.to_string() +
                              " does not permute with theta");
    } else if (!cert.lower.contains(image)) {
      cert.range_ok = false;
      cert.failures.push_back("phi(" + a.to_string() + ") = " + image.to_string() +
                              " is outside the lower slice");
    }
    cert.phi_table.emplace(a, std::move(image));
  }

  for (const auto& a : cert.lower.members) {
    Partition image = psi(a, theta);
    if (image != join(a, theta)) {
      cert.psi_join_ok = false;
      cert.failures.push_back("psi(" + a.to_string() + ") = " + image.to_string() +
                              " differs from the join with theta");
    }
    cert.psi_table.emplace(a, std::move(image));
  }

  cert.iso = certify_iso(cert.upper, cert.lower, cert.phi_table, cert.psi_table);
  const auto& c = cert.iso.checks;
  if (!c.bijection) cert.failures.push_back("phi and psi are not mutually inverse bijections");
  if (!c.forward_monotone) cert.failures.push_back("phi is not monotone");
  if (!c.backward_monotone) cert.failures.push_back("psi is not monotone");
  if (!c.meet_preserving) cert.failures.push_back("meets are not preserved");
  if (!c.join_preserving) cert.failures.push_back("joins are not preserved");

  auto bad = closure_violation(cert.lower.members);
  cert.sublattice_ok = !bad.has_value();
  if (bad)
    cert.failures.push_back("lower slice not closed at " + bad->first.to_string() + ", " +
                            bad->second.to_string());
  return cert;
}

IsoCertificate classical_transposition_check(const SubLattice& lattice, const Partition& a,
                                             const Partition& b) {
  if (!lattice.contains(a) || !lattice.contains(b))
    throw Error(ErrorKind::precondition, "classical_transposition_check: a and b must lie in L");
  if (auto mod = is_modular(lattice); !mod.modular) {
    const auto& [x, y, z] = *mod.violation;
    throw Error(ErrorKind::precondition,
                "classical_transposition_check: L is not modular (a=" + x.to_string() +
                    ", b=" + y.to_string() + ", c=" + z.to_string() + ")");
  }
  IntervalSlice src = interval(lattice, b, join(a, b));
  IntervalSlice dst = interval(lattice, meet(a, b), a);
  MemberMap forward;
  MemberMap backward;
  for (const auto& x : src.members) forward.emplace(x, meet(x, a));
  for (const auto& y : dst.members) backward.emplace(y, join(y, b));
  return certify_iso(src, dst, std::move(forward), std::move(backward));
}

const char* to_string(NecessityFailure kind) noexcept {
  switch (kind) {
    case NecessityFailure::phi_image_not_permuting: return "phi-image-not-permuting";
    case NecessityFailure::size_mismatch: return "size-mismatch-of-intervals";
  }
  return "unknown";
}

namespace {

std::optional<NecessityWitness> scan(const SubLattice& lattice, std::size_t& pairs_examined) {
  for (const auto& eta : lattice)
    for (const auto& theta : lattice) {
      if (permutes(eta, theta)) continue;
      ++pairs_examined;
      const IntervalSlice upper = interval(lattice, theta, join(eta, theta));
      const IntervalSlice lower = interval_permuting(lattice, meet(eta, theta), eta, theta);
      for (const auto& alpha : upper.members)
        if (!permutes(phi(alpha, eta), theta))
          return NecessityWitness{lattice, eta, theta, alpha,
                                  NecessityFailure::phi_image_not_permuting, upper.size(),
                                  lower.size()};
      if (upper.size() != lower.size())
        return NecessityWitness{lattice, eta, theta, upper.members.front(),
                                NecessityFailure::size_mismatch, upper.size(), lower.size()};
    }
  return std::nullopt;
}

}  // namespace

bool recheck(const NecessityWitness& w) {
  if (permutes(w.eta, w.theta)) return false;
  const IntervalSlice upper = interval(w.lattice, w.theta, join(w.eta, w.theta));
  const IntervalSlice lower =
      interval_permuting(w.lattice, meet(w.eta, w.theta), w.eta, w.theta);
  if (upper.size() != w.upper_size || lower.size() != w.lower_size) return false;
  if (!upper.contains(w.alpha)) return false;
  switch (w.failure_kind) {
    case NecessityFailure::phi_image_not_permuting:
      return !permutes(phi(w.alpha, w.eta), w.theta);
    case NecessityFailure::size_mismatch: return upper.size() != lower.size();
  }
  return false;
}

NecessitySearchResult search_necessity_witness(std::size_t n, std::size_t max_lattices,
                                               bool include_two_generated, std::size_t cap) {
  NecessitySearchResult result;
  if (max_lattices == 0) return result;
  const SubLattice full = full_lattice(n, cap);
  ++result.lattices_examined;
  if ((result.witness = scan(full, result.pairs_examined))) return result;
  if (!include_two_generated) return result;

  for (std::size_t i = 0; i < full.size(); ++i)
    for (std::size_t j = i + 1; j < full.size(); ++j) {
      if (result.lattices_examined >= max_lattices) return result;
      const std::vector<Partition> gens{full.elements()[i], full.elements()[j]};
      ++result.lattices_examined;
      if ((result.witness = scan(closure(n, gens), result.pairs_examined))) return result;
    }
  return result;
}

}  // namespace eqlat
