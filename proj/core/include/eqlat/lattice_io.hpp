#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "eqlat/sublattice.hpp"

namespace eqlat {

/// Reads a lattice file: a header line "n=<size>" followed by one canonical
/// partition per line. Blank lines and lines starting with '#' are skipped.
/// With `close_generators` the listed partitions are closed; otherwise they
/// must already form a sublattice. Errors carry the offending line number.
SubLattice read_lattice(std::istream& in, bool close_generators = false);
SubLattice read_lattice_file(const std::filesystem::path& path, bool close_generators = false);

void write_lattice(std::ostream& out, const SubLattice& lattice);

/// Hasse diagram in Graphviz DOT: one node per element (enumeration order),
/// one edge per cover pair, drawn bottom to top.
void write_dot(std::ostream& out, const SubLattice& lattice);
std::string to_dot(const SubLattice& lattice);

}  // namespace eqlat
