#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqlat/relation_laws.hpp"
#include "eqlat/sublattice.hpp"
#include "eqlat/transposition.hpp"
#include "json.hpp"

namespace eqlat::cli {

using Json = nlohmann::json;

/// Result of one exhaustive or sampled law suite.
struct VerificationReport {
  std::string property;
  std::size_t n = 0;
  std::size_t cases_checked = 0;
  std::vector<Json> failures;
  std::optional<double> elapsed_ms;
  /// Suite-specific counters and observations.
  Json details = Json::object();

  bool pass() const noexcept { return failures.empty(); }
};

Json to_json(const VerificationReport& report);
Json to_json(const LawWitness& witness);
Json to_json(const IsoCertificate& cert);
Json to_json(const TranspositionCertificate& cert);
Json to_json(const NecessityWitness& witness);

LawWitness law_witness_from_json(const Json& j);

Json members_json(const std::vector<Partition>& members);
Json table_json(const MemberMap& table);

/// Re-evaluates a serialized suite failure against the library. Returns true
/// iff it still fails. `lattice` is the ambient L of the run that produced it.
bool failure_rechecks(const Json& failure, const SubLattice& lattice);

}  // namespace eqlat::cli
