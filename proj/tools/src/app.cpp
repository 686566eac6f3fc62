#include "eqlat/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqlat/cli/report.hpp"
#include "eqlat/cli/suites.hpp"
#include "eqlat/error.hpp"
#include "eqlat/lattice_io.hpp"
#include "eqlat/transposition.hpp"

namespace eqlat::cli {

namespace {

struct Flags {
  std::size_t n = 0;
  std::string format = "text";
  std::string search_format = "json";
  std::string lattice_file;
  bool close = false;
  std::uint64_t seed = default_seed;
  std::size_t samples = 0;
  double max_seconds = 0;
  std::size_t max_n = 0;
  std::string out_file;
  bool timing = false;
  std::string law;
  std::string kind;
  std::string eta;
  std::string theta;
  std::string lo;
  std::string hi;
  std::size_t max_lattices = 1;
  bool two_generated = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_out(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out_file, "Write output to FILE instead of stdout");
}

void add_lattice(CLI::App* cmd, Flags& f, bool required) {
  auto* opt = cmd->add_option("--lattice", f.lattice_file, "Lattice file (n=<size> header)");
  if (required) opt->required();
  cmd->add_flag("--close", f.close, "Close the listed generators instead of verifying closure");
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string render_report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << r.property << " n=" << r.n << ": " << (r.pass() ? "PASS" : "FAIL")
    << " (cases_checked=" << r.cases_checked << ", failures=" << r.failures.size() << ")\n";
  for (const auto& [key, value] : r.details.items()) {
    if (value.is_array()) {
      s << "  " << key << ": " << value.size() << "\n";
      for (const auto& item : value) s << "    " << item.dump() << "\n";
    } else {
      s << "  " << key << ": " << value.dump() << "\n";
    }
  }
  if (r.elapsed_ms) s << "  elapsed_ms: " << *r.elapsed_ms << "\n";
  for (const auto& f : r.failures) s << "  failure: " << f.dump() << "\n";
  return s.str();
}

struct Outcome {
  int code = exit_pass;
  std::string text;
};

Outcome do_enumerate(const Flags& f, bool max_n_given) {
  const auto parts = enumerate_partitions(f.n, max_n_given ? f.max_n : default_enumeration_cap);
  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& p : parts) list.push_back(p.to_string());
    return {exit_pass, render(Json{{"n", f.n}, {"count", parts.size()}, {"partitions", list}})};
  }
  std::string text;
  for (const auto& p : parts) text += p.to_string() + "\n";
  return {exit_pass, std::move(text)};
}

Outcome do_verify(const Flags& f, bool n_given, bool max_n_given, bool max_seconds_given) {
  SuiteOptions options;
  std::size_t n = f.n;
  if (!f.lattice_file.empty()) {
    options.lattice = read_lattice_file(f.lattice_file, f.close);
    if (n_given && n != options.lattice->ground_size())
      throw UsageError("--n " + std::to_string(n) + " disagrees with lattice file n=" +
                       std::to_string(options.lattice->ground_size()));
    n = options.lattice->ground_size();
  } else if (!n_given) {
    throw UsageError("verify needs --n or --lattice");
  }
  if (max_n_given) options.max_n = f.max_n;
  if (max_seconds_given) options.max_seconds = f.max_seconds;
  options.samples = f.samples;
  options.seed = f.seed;
  options.timing = f.timing;

  if (!f.eta.empty() || !f.theta.empty()) {
    if (f.law != "transposition") throw UsageError("--eta/--theta apply to verify transposition");
    const SubLattice lattice = suite_lattice(n, options);
    Budget budget(options.max_seconds);
    const auto cert = verify_transposition(lattice, Partition::parse(f.eta, n),
                                           Partition::parse(f.theta, n));
    Json j = to_json(cert);
    if (options.timing) j["elapsed_ms"] = budget.elapsed_ms();
    return {cert.valid() ? exit_pass : exit_failure, render(j)};
  }

  VerificationReport report;
  if (f.law == "dedekind")
    report = run_dedekind_suite(n, options);
  else if (f.law == "transposition")
    report = run_transposition_suite(n, options);
  else if (f.law == "closure")
    report = run_closure_suite(n, options);
  else
    report = run_classical_suite(n, options);

  return {report.pass() ? exit_pass : exit_failure,
          f.format == "json" ? render(to_json(report)) : render_report_text(report)};
}

Outcome do_search(const Flags& f, bool max_n_given) {
  const auto result = search_necessity_witness(
      f.n, f.max_lattices, f.two_generated, max_n_given ? f.max_n : default_enumeration_cap);
  Json j;
  if (result.witness) {
    j = to_json(*result.witness);
    j["exhausted"] = false;
  } else {
    j = Json{{"exhausted", true}, {"n", f.n}};
  }
  j["lattices_examined"] = result.lattices_examined;
  j["pairs_examined"] = result.pairs_examined;

  std::string text;
  if (f.search_format == "text") {
    if (result.witness) {
      const auto& w = *result.witness;
      text = "witness: eta=" + w.eta.to_string() + " theta=" + w.theta.to_string() +
             " alpha=" + w.alpha.to_string() + " phi(alpha)=" + phi(w.alpha, w.eta).to_string() +
             " kind=" + to_string(w.failure_kind) + " upper=" + std::to_string(w.upper_size) +
             " lower=" + std::to_string(w.lower_size) + "\n";
    } else {
      text = "exhausted: no witness in Eq(" + std::to_string(f.n) + ")\n";
    }
  } else {
    text = render(j);
  }
  return {result.witness ? exit_pass : exit_exhausted, std::move(text)};
}

Outcome do_interval(const Flags& f) {
  const SubLattice lattice = read_lattice_file(f.lattice_file, f.close);
  const std::size_t n = lattice.ground_size();
  const Partition lo = Partition::parse(f.lo, n);
  const Partition hi = Partition::parse(f.hi, n);
  const IntervalSlice slice = f.theta.empty()
                                  ? interval(lattice, lo, hi)
                                  : interval_permuting(lattice, lo, hi, Partition::parse(f.theta, n));
  if (f.format == "json") {
    Json j{{"n", n}, {"lo", lo.to_string()}, {"hi", hi.to_string()},
           {"theta", slice.theta ? Json(slice.theta->to_string()) : Json(nullptr)},
           {"members", members_json(slice.members)}};
    return {exit_pass, render(j)};
  }
  std::string text;
  for (const auto& p : slice.members) text += p.to_string() + "\n";
  return {exit_pass, std::move(text)};
}

Outcome do_export(const Flags& f) {
  return {exit_pass, to_dot(read_lattice_file(f.lattice_file, f.close))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Lattices of equivalence relations: enumeration, law checks and transposition"};
  app.name(args.empty() ? "eqlat" : args.front());
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List Eq(n) in restricted-growth order");
  enumerate->add_option("--n", f.n, "Ground-set size")->required();
  auto* enum_max = enumerate->add_option("--max-n", f.max_n, "Override the size cap (default 10)");
  add_format(enumerate, f);
  add_out(enumerate, f);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive law suite");
  verify->add_option("law", f.law, "dedekind | transposition | closure | classical")
      ->required()
      ->check(CLI::IsMember({"dedekind", "transposition", "closure", "classical"}));
  auto* verify_n = verify->add_option("--n", f.n, "Ground-set size");
  add_lattice(verify, f, false);
  add_format(verify, f);
  add_out(verify, f);
  verify->add_option("--seed", f.seed, "Seed for sampled suites")->capture_default_str();
  verify->add_option("--samples", f.samples, "Random cases instead of enumeration (dedekind)");
  auto* verify_secs = verify->add_option("--max-seconds", f.max_seconds, "Wall-clock budget");
  auto* verify_max = verify->add_option("--max-n", f.max_n, "Override the size cap (default 6)");
  verify->add_flag("--timing", f.timing, "Include elapsed_ms in reports");
  verify->add_option("--eta", f.eta, "Certify a single pair (transposition)");
  verify->add_option("--theta", f.theta, "Certify a single pair (transposition)");

  auto* search = app.add_subcommand("search", "Search for counterexamples");
  search->add_option("kind", f.kind, "necessity")->required()->check(CLI::IsMember({"necessity"}));
  search->add_option("--n", f.n, "Ground-set size")->required();
  search->add_option("--max-lattices", f.max_lattices, "Lattices to examine")->capture_default_str();
  search->add_flag("--two-generated", f.two_generated,
                   "Also scan sublattices generated by two partitions");
  auto* search_max = search->add_option("--max-n", f.max_n, "Override the size cap (default 10)");
  search->add_option("--format", f.search_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_out(search, f);

  auto* interval_cmd = app.add_subcommand("interval", "List an interval of a lattice file");
  add_lattice(interval_cmd, f, true);
  interval_cmd->add_option("--lo", f.lo, "Lower bound")->required();
  interval_cmd->add_option("--hi", f.hi, "Upper bound")->required();
  interval_cmd->add_option("--theta", f.theta, "Keep only members permuting with THETA");
  add_format(interval_cmd, f);
  add_out(interval_cmd, f);

  auto* export_cmd = app.add_subcommand("export", "Export a lattice file");
  std::string export_format;
  export_cmd->add_option("format", export_format, "dot")->required()->check(CLI::IsMember({"dot"}));
  add_lattice(export_cmd, f, true);
  add_out(export_cmd, f);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("eqlat");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  Outcome outcome;
  try {
    if (*enumerate)
      outcome = do_enumerate(f, enum_max->count() > 0);
    else if (*verify)
      outcome = do_verify(f, verify_n->count() > 0, verify_max->count() > 0,
                          verify_secs->count() > 0);
    else if (*search)
      outcome = do_search(f, search_max->count() > 0);
    else if (*interval_cmd)
      outcome = do_interval(f);
    else
      outcome = do_export(f);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (!f.out_file.empty()) {
    std::ofstream file(f.out_file, std::ios::binary);
    file << outcome.text;
    if (!file) {
      err << "error: cannot write " << f.out_file << "\n";
      return exit_usage;
    }
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace eqlat::cli
