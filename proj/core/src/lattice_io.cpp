#include "eqlat/lattice_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eqlat/error.hpp"

namespace eqlat {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::malformed_input, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

SubLattice read_lattice(std::istream& in, bool close_generators) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Partition> listed;
  std::vector<std::size_t> lines;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (!n) {
      if (line.empty() || line.front() == '#') continue;
      if (!line.starts_with("n=")) fail_at(line_no, "expected header \"n=<size>\"");
      std::size_t value = 0;
      auto digits = line.substr(2);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
        fail_at(line_no, "bad size in header \"" + std::string(line) + "\"");
      n = value;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    try {
      listed.push_back(Partition::parse(line, *n));
    } catch (const Error& e) {
      fail_at(line_no, e.what());
    }
    lines.push_back(line_no);
  }
  if (!n) fail_at(line_no, "missing header \"n=<size>\"");
  // The empty partition has an empty canonical string, so a body-less n=0
  // file denotes Eq(0).
  if (listed.empty() && *n == 0) listed.emplace_back();
  if (listed.empty()) fail_at(line_no, "no partitions listed");

  if (close_generators) return closure(*n, listed);

  std::vector<Partition> sorted = listed;
  if (auto bad = closure_violation(sorted)) {
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (listed[i] == bad->first && a == 0) a = lines[i];
      if (listed[i] == bad->second && b == 0) b = lines[i];
    }
    const bool meet_missing = [&] {
      auto m = meet(bad->first, bad->second);
      for (const auto& p : listed)
        if (p == m) return false;
      return true;
    }();
    throw Error(ErrorKind::not_closed,
                "line " + std::to_string(std::max(a, b)) + ": " + (meet_missing ? "meet" : "join") +
                    " of \"" + bad->first.to_string() + "\" (line " + std::to_string(a) +
                    ") and \"" + bad->second.to_string() + "\" (line " + std::to_string(b) +
                    ") is not listed; use --close to close generators");
  }
  return SubLattice(*n, std::move(listed));
}

SubLattice read_lattice_file(const std::filesystem::path& path, bool close_generators) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::malformed_input, "cannot open lattice file " + path.string());
  return read_lattice(in, close_generators);
}

void write_lattice(std::ostream& out, const SubLattice& lattice) {
  out << "n=" << lattice.ground_size() << '\n';
  for (const auto& p : lattice) out << p.to_string() << '\n';
}

void write_dot(std::ostream& out, const SubLattice& lattice) {
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out << "  n" << i << " [label=\"" << lattice.elements()[i].to_string() << "\"];\n";
  for (const auto& [lo, hi] : covers(lattice))
    out << "  n" << *lattice.index_of(lo) << " -> n" << *lattice.index_of(hi) << ";\n";
  out << "}\n";
}

std::string to_dot(const SubLattice& lattice) {
  std::ostringstream out;
  write_dot(out, lattice);
  return out.str();
}

}  // namespace eqlat
