#include "eqlat/cli/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "eqlat/error.hpp"
#include "eqlat/relation_laws.hpp"
#include "eqlat/transposition.hpp"

namespace eqlat::cli {

Budget::Budget(std::optional<double> max_seconds)
    : start_(std::chrono::steady_clock::now()), max_seconds_(max_seconds) {}

void Budget::check() const {
  if (max_seconds_ && elapsed_ms() > *max_seconds_ * 1000.0)
    throw Error(ErrorKind::resource_guard,
                "time budget of " + std::to_string(*max_seconds_) + " s exceeded");
}

double Budget::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
      .count();
}

SubLattice suite_lattice(std::size_t n, const SuiteOptions& options) {
  if (options.lattice) {
    if (options.lattice->ground_size() != n)
      throw Error(ErrorKind::malformed_input,
                  "lattice is over n=" + std::to_string(options.lattice->ground_size()) +
                      " but n=" + std::to_string(n) + " was requested");
    return *options.lattice;
  }
  if (n > options.max_n)
    throw Error(ErrorKind::resource_guard, "exhaustive suite over Eq(" + std::to_string(n) +
                                               ") exceeds the cap n <= " +
                                               std::to_string(options.max_n));
  return full_lattice(n, std::max(options.max_n, default_enumeration_cap));
}

namespace {

// Square table of a binary predicate over the lattice elements.
template <typename Pred>
std::vector<std::vector<bool>> tabulate(const std::vector<Partition>& el, Pred pred) {
  std::vector<std::vector<bool>> t(el.size(), std::vector<bool>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) t[i][j] = pred(el[i], el[j]);
  return t;
}

void finish(VerificationReport& report, const Budget& budget, const SuiteOptions& options) {
  if (options.timing) report.elapsed_ms = budget.elapsed_ms();
}

void check_dedekind(VerificationReport& report, const Partition& a, const Partition& b,
                    const Partition& c) {
  ++report.cases_checked;
  for (const auto& w : {dedekind_left(a, b, c), dedekind_right(a, b, c)})
    if (!w.holds()) report.failures.push_back(to_json(w));
}

}  // namespace

VerificationReport run_dedekind_suite(std::size_t n, const SuiteOptions& options) {
  Budget budget(options.max_seconds);
  VerificationReport report;
  report.property = "dedekind";
  report.n = n;

  if (options.samples > 0) {
    std::mt19937_64 rng(options.seed);
    report.details["mode"] = "sampled";
    report.details["seed"] = options.seed;
    for (std::size_t s = 0; s < options.samples; ++s) {
      budget.check();
      if (options.lattice) {
        const auto& el = options.lattice->elements();
        std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
        const Partition& beta = el[pick(rng)];
        std::vector<Partition> below;
        for (const auto& p : el)
          if (leq(p, beta)) below.push_back(p);
        std::uniform_int_distribution<std::size_t> pick_below(0, below.size() - 1);
        check_dedekind(report, below[pick_below(rng)], beta, el[pick(rng)]);
      } else {
        const Partition beta = random_partition(n, rng);
        const Partition alpha = random_refinement(beta, rng);
        check_dedekind(report, alpha, beta, random_partition(n, rng));
      }
    }
    finish(report, budget, options);
    return report;
  }

  const SubLattice lattice = suite_lattice(n, options);
  const auto& el = lattice.elements();
  const auto order = tabulate(el, [](const Partition& a, const Partition& b) { return leq(a, b); });
  std::size_t comparable = 0;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (!order[i][j]) continue;
      ++comparable;
      for (const auto& gamma : el) {
        budget.check();
        check_dedekind(report, el[i], el[j], gamma);
      }
    }
  report.details["mode"] = "exhaustive";
  report.details["lattice_size"] = el.size();
  report.details["comparable_pairs"] = comparable;
  finish(report, budget, options);
  return report;
}

VerificationReport run_transposition_suite(std::size_t n, const SuiteOptions& options) {
  Budget budget(options.max_seconds);
  VerificationReport report;
  report.property = "transposition";
  report.n = n;
  const SubLattice lattice = suite_lattice(n, options);

  Json shrunk = Json::array();
  for (const auto& eta : lattice)
    for (const auto& theta : lattice) {
      budget.check();
      if (!permutes(eta, theta)) continue;
      ++report.cases_checked;
      const auto cert = verify_transposition(lattice, eta, theta);
      if (!cert.valid()) {
        Json f = to_json(cert);
        f["law"] = "transposition";
        report.failures.push_back(std::move(f));
      }
      if (cert.lower.size() < cert.lower_unconstrained_size)
        shrunk.push_back(Json{{"eta", eta.to_string()},
                              {"theta", theta.to_string()},
                              {"upper", cert.upper.size()},
                              {"lower", cert.lower.size()},
                              {"lower_unconstrained", cert.lower_unconstrained_size}});
    }
  report.details["lattice_size"] = lattice.size();
  report.details["permuting_pairs"] = report.cases_checked;
  report.details["shrunk_cases"] = std::move(shrunk);
  finish(report, budget, options);
  return report;
}

VerificationReport run_closure_suite(std::size_t n, const SuiteOptions& options) {
  Budget budget(options.max_seconds);
  VerificationReport report;
  report.property = "closure";
  report.n = n;
  const SubLattice lattice = suite_lattice(n, options);
  const auto& el = lattice.elements();
  const auto perm = tabulate(el, [](const Partition& a, const Partition& b) { return permutes(a, b); });

  std::size_t join_cases = 0;
  for (std::size_t t = 0; t < el.size(); ++t)
    for (std::size_t a = 0; a < el.size(); ++a) {
      if (!perm[a][t]) continue;
      for (std::size_t b = 0; b < el.size(); ++b) {
        if (!perm[b][t]) continue;
        budget.check();
        ++join_cases;
        if (auto w = closure_under_join(el[a], el[b], el[t]); !w.holds())
          report.failures.push_back(to_json(w));
      }
    }

  std::size_t meet_cases = 0;
  for (std::size_t e = 0; e < el.size(); ++e)
    for (std::size_t t = 0; t < el.size(); ++t) {
      const Partition lo = meet(el[e], el[t]);
      std::vector<std::size_t> slice;
      for (std::size_t a = 0; a < el.size(); ++a)
        if (perm[a][t] && leq(lo, el[a]) && leq(el[a], el[e])) slice.push_back(a);
      for (auto a : slice)
        for (auto b : slice) {
          budget.check();
          ++meet_cases;
          if (auto w = closure_under_meet(el[a], el[b], el[t], el[e]); !w.holds())
            report.failures.push_back(to_json(w));
        }
    }

  report.cases_checked = join_cases + meet_cases;
  report.details["lattice_size"] = el.size();
  report.details["join_cases"] = join_cases;
  report.details["meet_cases"] = meet_cases;
  finish(report, budget, options);
  return report;
}

std::vector<SubLattice> small_generated_sublattices(std::size_t n, std::size_t cap) {
  const SubLattice full = full_lattice(n, cap);
  const auto& el = full.elements();
  std::vector<SubLattice> out;
  std::set<std::vector<Partition>> seen;
  auto add = [&](std::vector<Partition> gens) {
    SubLattice l = closure(n, gens);
    if (seen.insert(l.elements()).second) out.push_back(std::move(l));
  };
  for (std::size_t i = 0; i < el.size(); ++i) add({el[i]});
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) add({el[i], el[j]});
  return out;
}

VerificationReport run_classical_suite(std::size_t n, const SuiteOptions& options) {
  Budget budget(options.max_seconds);
  VerificationReport report;
  report.property = "classical";
  report.n = n;

  std::vector<SubLattice> lattices;
  std::size_t skipped = 0;
  if (options.lattice) {
    // A single named lattice must satisfy the precondition; refusing is the
    // contract, not a failure.
    if (auto mod = is_modular(*options.lattice); !mod.modular) {
      const auto& [a, b, c] = *mod.violation;
      throw Error(ErrorKind::precondition, "lattice is not modular: a=" + a.to_string() +
                                               ", b=" + b.to_string() + ", c=" + c.to_string());
    }
    lattices.push_back(suite_lattice(n, options));
  } else {
    const SubLattice full = suite_lattice(n, options);
    auto candidates = small_generated_sublattices(n, std::max(options.max_n, default_enumeration_cap));
    candidates.push_back(full);
    for (auto& l : candidates) {
      if (is_modular(l).modular)
        lattices.push_back(std::move(l));
      else
        ++skipped;
    }
  }

  for (const auto& lattice : lattices)
    for (const auto& a : lattice)
      for (const auto& b : lattice) {
        budget.check();
        ++report.cases_checked;
        const auto cert = classical_transposition_check(lattice, a, b);
        if (!cert.valid()) {
          Json f = to_json(cert);
          f["law"] = "classical";
          f["a"] = a.to_string();
          f["b"] = b.to_string();
          f["lattice"] = members_json(lattice.elements());
          report.failures.push_back(std::move(f));
        }
      }
  report.details["lattices_checked"] = lattices.size();
  report.details["lattices_skipped_nonmodular"] = skipped;
  finish(report, budget, options);
  return report;
}

}  // namespace eqlat::cli
