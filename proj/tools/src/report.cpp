#include "eqlat/cli/report.hpp"

#include "eqlat/error.hpp"

namespace eqlat::cli {

Json members_json(const std::vector<Partition>& members) {
  Json out = Json::array();
  for (const auto& p : members) out.push_back(p.to_string());
  return out;
}

Json table_json(const MemberMap& table) {
  Json out = Json::array();
  for (const auto& [from, to] : table) out.push_back(Json::array({from.to_string(), to.to_string()}));
  return out;
}

Json to_json(const VerificationReport& report) {
  Json j{
      {"property", report.property},
      {"n", report.n},
      {"cases_checked", report.cases_checked},
      {"failures", report.failures},
      {"pass", report.pass()},
      {"details", report.details},
  };
  if (report.elapsed_ms) j["elapsed_ms"] = *report.elapsed_ms;
  return j;
}

Json to_json(const LawWitness& witness) {
  Json inputs = Json::array();
  for (const auto& p : witness.inputs) inputs.push_back(p.to_string());
  Json j{{"law", to_string(witness.law)}, {"inputs", inputs}, {"offending_pair", nullptr}};
  if (witness.offending_pair)
    j["offending_pair"] = Json::array({witness.offending_pair->first, witness.offending_pair->second});
  return j;
}

LawWitness law_witness_from_json(const Json& j) {
  auto law = law_from_string(j.at("law").get<std::string>());
  if (!law) throw Error(ErrorKind::malformed_input, "unknown law " + j.at("law").dump());
  LawWitness w{*law, {}, std::nullopt};
  std::size_t n = 0;
  for (const auto& s : j.at("inputs")) {
    w.inputs.push_back(Partition::parse(s.get<std::string>()));
    n = w.inputs.back().size();
  }
  for (const auto& p : w.inputs) require_same_size(n, p.size(), "law witness");
  if (const auto& pair = j.at("offending_pair"); !pair.is_null())
    w.offending_pair = ElementPair{pair.at(0).get<Element>(), pair.at(1).get<Element>()};
  return w;
}

Json to_json(const IsoCertificate& cert) {
  const auto& c = cert.checks;
  return Json{
      {"forward", table_json(cert.forward)},
      {"backward", table_json(cert.backward)},
      {"flags",
       {{"bijection", c.bijection},
        {"forward_monotone", c.forward_monotone},
        {"backward_monotone", c.backward_monotone},
        {"meet_preserving", c.meet_preserving},
        {"join_preserving", c.join_preserving}}},
      {"valid", cert.valid()},
  };
}

Json to_json(const TranspositionCertificate& cert) {
  const auto& c = cert.iso.checks;
  return Json{
      {"n", cert.n},
      {"eta", cert.eta.to_string()},
      {"theta", cert.theta.to_string()},
      {"upper", members_json(cert.upper.members)},
      {"lower", members_json(cert.lower.members)},
      {"lower_unconstrained_size", cert.lower_unconstrained_size},
      {"phi", table_json(cert.phi_table)},
      {"psi", table_json(cert.psi_table)},
      {"flags",
       {{"bijection", c.bijection},
        {"forward_monotone", c.forward_monotone},
        {"backward_monotone", c.backward_monotone},
        {"meet_preserving", c.meet_preserving},
        {"join_preserving", c.join_preserving},
        {"range_ok", cert.range_ok},
        {"sublattice_ok", cert.sublattice_ok},
        {"psi_join_ok", cert.psi_join_ok}}},
      {"valid", cert.valid()},
      {"failures", cert.failures},
  };
}

Json to_json(const NecessityWitness& witness) {
  return Json{
      {"n", witness.lattice.ground_size()},
      {"lattice_size", witness.lattice.size()},
      {"eta", witness.eta.to_string()},
      {"theta", witness.theta.to_string()},
      {"alpha", witness.alpha.to_string()},
      {"phi_alpha", phi(witness.alpha, witness.eta).to_string()},
      {"failure_kind", to_string(witness.failure_kind)},
      {"upper_size", witness.upper_size},
      {"lower_size", witness.lower_size},
  };
}

bool failure_rechecks(const Json& failure, const SubLattice& ambient) {
  std::optional<SubLattice> own;
  if (failure.contains("lattice")) {
    std::vector<Partition> elements;
    for (const auto& s : failure.at("lattice"))
      elements.push_back(Partition::parse(s.get<std::string>(), ambient.ground_size()));
    own.emplace(ambient.ground_size(), std::move(elements));
  }
  const SubLattice& lattice = own ? *own : ambient;
  const std::string law = failure.at("law").get<std::string>();
  if (law == "transposition") {
    const auto eta = Partition::parse(failure.at("eta").get<std::string>(), lattice.ground_size());
    const auto theta =
        Partition::parse(failure.at("theta").get<std::string>(), lattice.ground_size());
    return !verify_transposition(lattice, eta, theta).valid();
  }
  if (law == "classical") {
    const auto a = Partition::parse(failure.at("a").get<std::string>(), lattice.ground_size());
    const auto b = Partition::parse(failure.at("b").get<std::string>(), lattice.ground_size());
    return !classical_transposition_check(lattice, a, b).valid();
  }
  const LawWitness w = law_witness_from_json(failure);
  return !w.holds() && recheck(w);
}

}  // namespace eqlat::cli
