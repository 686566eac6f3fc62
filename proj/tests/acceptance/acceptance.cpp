// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "eqlat/cli/suites.hpp"
#include "eqlat/eqlat.hpp"
#include "oracle/brute.hpp"

using eqlat::Partition;
using eqlat::SubLattice;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Partition P(const char* s) { return Partition::parse(s); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool oracle_permutes(const Partition& a, const Partition& b) {
  const auto A = oracle::pairs_of(a), B = oracle::pairs_of(b);
  return oracle::compose(A, B) == oracle::compose(B, A);
}

// 1. Generalized Dedekind rule, exhaustive over alpha <= beta, n in {2,3,4}.
Outcome dedekind_rule() {
  constexpr double limit_s = 5.0;
  std::size_t triples = 0, failures = 0;
  double n4_seconds = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        if (!eqlat::leq(a, b)) continue;
        for (const auto& c : parts) {
          ++triples;
          if (!eqlat::dedekind_left(a, b, c).holds()) ++failures;
          if (!eqlat::dedekind_right(a, b, c).holds()) ++failures;
        }
      }
    if (n == 4) n4_seconds = seconds_since(t0);
  }
  std::ostringstream d;
  d << triples << " triples, " << failures << " failures, n=4 in " << n4_seconds << " s (limit "
    << limit_s << " s)";
  return {failures == 0 && triples > 0 && n4_seconds < limit_s, d.str()};
}

// 2. Transposition principle for every ordered permuting pair of Eq(n).
Outcome transposition_principle() {
  constexpr double limit_s = 10.0;
  std::size_t certified = 0, invalid = 0, expected_pairs = 0;
  double n4_seconds = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto lattice = eqlat::full_lattice(n);
    for (const auto& eta : lattice)
      for (const auto& theta : lattice) {
        if (!oracle_permutes(eta, theta)) continue;
        ++expected_pairs;
        const auto cert = eqlat::verify_transposition(lattice, eta, theta);
        ++certified;
        const auto& c = cert.iso.checks;
        const bool all = c.bijection && c.forward_monotone && c.backward_monotone &&
                         c.meet_preserving && c.join_preserving && cert.range_ok &&
                         cert.sublattice_ok && cert.psi_join_ok &&
                         cert.upper.size() == cert.lower.size();
        if (!all) ++invalid;
      }
    if (n == 4) n4_seconds = seconds_since(t0);
  }
  std::ostringstream d;
  d << certified << " certificates (" << expected_pairs << " permuting pairs by oracle), "
    << invalid << " invalid, n=4 in " << n4_seconds << " s (limit " << limit_s << " s)";
  return {invalid == 0 && certified == expected_pairs && certified > 0 && n4_seconds < limit_s,
          d.str()};
}

// 3. Pentagon showcase.
Outcome pentagon_showcase() {
  const SubLattice n5(4, {P("0|1|2|3"), P("0,2|1|3"), P("0,2|1,3"), P("0,1|2,3"), P("0,1,2,3")});
  const auto eta = P("0,2|1,3"), theta = P("0,1|2,3");
  const auto upper = eqlat::interval(n5, theta, eqlat::join(eta, theta)).size();
  const auto lower = eqlat::interval_permuting(n5, eqlat::meet(eta, theta), eta, theta).size();
  const auto unconstrained = eqlat::interval(n5, eqlat::meet(eta, theta), eta).size();
  const auto cert = eqlat::verify_transposition(n5, eta, theta);
  const auto mod = eqlat::is_modular(n5);
  bool triple_ok = false;
  std::string triple;
  if (mod.violation) {
    const auto& [a, b, c] = *mod.violation;
    triple_ok = eqlat::leq(c, a) && eqlat::meet(a, eqlat::join(b, c)) != eqlat::join(eqlat::meet(a, b), c);
    triple = "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
  }
  std::ostringstream d;
  d << "|upper|=" << upper << " |lower^theta|=" << lower << " |lower|=" << unconstrained
    << " modular=" << (mod.modular ? "true" : "false") << " triple=" << triple;
  return {upper == 2 && lower == 2 && unconstrained == 3 && cert.valid() && !mod.modular && triple_ok,
          d.str()};
}

// 4. Necessity of permutability at n = 3.
Outcome necessity() {
  const auto result = eqlat::search_necessity_witness(3);
  if (!result.witness) return {false, "search exhausted"};
  const auto& w = *result.witness;
  const auto top = Partition::top(3);
  const bool non_permuting = !oracle_permutes(w.eta, w.theta);
  const bool phi_top_fails = w.alpha == top && !oracle_permutes(eqlat::phi(top, w.eta), w.theta);
  std::ostringstream d;
  d << "eta=" << w.eta.to_string() << " theta=" << w.theta.to_string()
    << " phi(top)=" << eqlat::phi(top, w.eta).to_string() << " sizes " << w.upper_size << " vs "
    << w.lower_size;
  return {non_permuting && phi_top_fails && w.upper_size == 2 && w.lower_size == 1 &&
              eqlat::recheck(w),
          d.str()};
}

// 5. Closure inclusions (i)/(ii), both directions, all valid instances in Eq(4).
Outcome closure_inclusions() {
  const auto parts = eqlat::enumerate_partitions(4);
  std::size_t join_cases = 0, meet_cases = 0, failures = 0;
  auto both_ways = [&](eqlat::LawId law, const std::vector<Partition>& in) {
    auto [l, r] = eqlat::law_sides(law, in);
    if (!l.subset_of(r) || !r.subset_of(l)) ++failures;
  };
  for (const auto& t : parts) {
    for (const auto& a : parts) {
      if (!eqlat::permutes(a, t)) continue;
      for (const auto& b : parts) {
        if (!eqlat::permutes(b, t)) continue;
        ++join_cases;
        both_ways(eqlat::LawId::closure_join, {a, b, t});
        if (!eqlat::closure_under_join(a, b, t).holds()) ++failures;
      }
    }
    for (const auto& e : parts) {
      std::vector<Partition> slice;
      for (const auto& a : parts)
        if (eqlat::permutes(a, t) && eqlat::leq(eqlat::meet(e, t), a) && eqlat::leq(a, e))
          slice.push_back(a);
      for (const auto& a : slice)
        for (const auto& b : slice) {
          ++meet_cases;
          both_ways(eqlat::LawId::closure_meet, {a, b, t, e});
          if (!eqlat::closure_under_meet(a, b, t, e).holds()) ++failures;
        }
    }
  }
  std::ostringstream d;
  d << join_cases << " join instances, " << meet_cases << " meet instances, " << failures
    << " failures";
  return {failures == 0 && join_cases > 0 && meet_cases > 0, d.str()};
}

// 6. Classical modular transposition cross-check.
Outcome classical_cross_check() {
  std::size_t lattices = 0, checks = 0, invalid = 0;
  for (const auto& l : eqlat::cli::small_generated_sublattices(4, eqlat::default_enumeration_cap)) {
    if (!eqlat::is_modular(l).modular) continue;
    ++lattices;
    for (const auto& a : l)
      for (const auto& b : l) {
        ++checks;
        if (!eqlat::classical_transposition_check(l, a, b).valid()) ++invalid;
      }
  }
  const SubLattice n5(4, {P("0|1|2|3"), P("0,2|1|3"), P("0,2|1,3"), P("0,1|2,3"), P("0,1,2,3")});
  bool refused = false;
  try {
    eqlat::classical_transposition_check(n5, P("0,2|1,3"), P("0,1|2,3"));
  } catch (const eqlat::Error& e) {
    refused = e.kind() == eqlat::ErrorKind::precondition;
  }
  std::ostringstream d;
  d << lattices << " modular sublattices (<=2 generators), " << checks << " pairs, " << invalid
    << " invalid; N5 refused=" << (refused ? "yes" : "no");
  return {invalid == 0 && lattices > 0 && refused, d.str()};
}

// 7. Oracle agreement: two joins and Bell counts.
Outcome oracle_agreement() {
  std::size_t exhaustive = 0, mismatches = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        ++exhaustive;
        if (eqlat::join(a, b) != eqlat::join_by_composition(a, b)) ++mismatches;
      }
  }
  constexpr std::size_t random_pairs = 10'000;
  std::mt19937_64 rng(eqlat::cli::default_seed);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const auto a = eqlat::random_partition(8, rng);
    const auto b = eqlat::random_partition(8, rng);
    if (eqlat::join(a, b) != eqlat::join_by_composition(a, b)) ++mismatches;
  }
  const auto bell = oracle::bell_numbers(6);
  const std::vector<std::uint64_t> stated{1, 1, 2, 5, 15, 52, 203};
  bool counts_ok = bell == stated;
  for (std::size_t n = 0; n <= 6; ++n)
    counts_ok = counts_ok && eqlat::enumerate_partitions(n).size() == bell[n];
  std::ostringstream d;
  d << exhaustive << " exhaustive pairs (n<=5) + " << random_pairs << " random pairs (n=8), "
    << mismatches << " mismatches; Bell counts " << (counts_ok ? "match" : "DIFFER");
  return {mismatches == 0 && counts_ok, d.str()};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

// 8. Determinism of `verify transposition --n 4 --format json`.
Outcome determinism() {
  const std::string cmd = std::string("\"") + EQLAT_CLI_PATH +
                          "\" verify transposition --n 4 --format json";
  int s1 = 0, s2 = 0;
  const auto first = capture(cmd, s1);
  const auto second = capture(cmd, s2);
  std::ostringstream d;
  d << first.size() << " bytes per run, exit " << s1 << "/" << s2;
  return {s1 == 0 && s2 == 0 && !first.empty() && first == second, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 generalized Dedekind rule, n in {2,3,4}", dedekind_rule},
      {"AC2 transposition principle, n in {2,3,4}", transposition_principle},
      {"AC3 non-modular pentagon showcase", pentagon_showcase},
      {"AC4 necessity of permutability, n = 3", necessity},
      {"AC5 closure inclusions (i)/(ii) in Eq(4)", closure_inclusions},
      {"AC6 classical modular transposition", classical_cross_check},
      {"AC7 oracle agreement (joins, Bell numbers)", oracle_agreement},
      {"AC8 deterministic JSON reports", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
