#include "qsslab/report_json.hpp"

#include <json.hpp>

namespace qss {

namespace {

using nlohmann::json;

json rates_to_json(const RatesReport& r) {
  json out;
  out["defined"] = r.defined;
  if (r.defined) {
    out["r"] = r.r;
    out["r_bar"] = r.r_bar;
    out["inverse_r"] = r.inverse_r;
  }
  out["secret_entropy_bits"] = r.secret_entropy_bits;
  out["max_share_entropy_bits"] = r.max_share_entropy_bits;
  out["max_minus_secret_bits"] = r.max_minus_secret_bits;
  json shares = json::array();
  for (const auto& [label, s] : r.share_entropies)
    shares.push_back({{"player", label}, {"entropy_bits", s}});
  out["share_entropies"] = std::move(shares);
  return out;
}

}  // namespace

std::string verification_report_json(const VerificationReport& report) {
  json out;
  out["scheme"] = report.scheme_name;
  out["tolerance"] = report.tolerance;
  out["fast"] = report.fast;
  out["i_rs_bits"] = report.i_rs_bits;
  out["secret_entropy_bits"] = report.secret_entropy_bits;

  json subsets = json::array();
  for (const auto& rec : report.definition1) {
    subsets.push_back({{"subset", rec.subset},
                       {"authorized", rec.authorized},
                       {"mutual_information_bits", rec.mutual_information_bits},
                       {"target_bits", rec.target_bits},
                       {"coherent_information_bits", rec.coherent_information_bits},
                       {"verdict", rec.verdict},
                       {"coherent_verdict", rec.coherent_verdict}});
  }
  out["definition1"] = {{"verdict", report.definition1_verdict}, {"subsets", std::move(subsets)}};

  json violations = json::array();
  for (const auto& v : report.coexistence_violations)
    violations.push_back({{"authorized_set", v.authorized_set},
                          {"complement", v.complement},
                          {"mutual_information_bits", v.mutual_information_bits}});
  out["coexistence"] = {{"verdict", report.coexistence_violations.empty()},
                        {"violations", std::move(violations)}};

  json pairs = json::array();
  for (const auto& rec : report.theorem6)
    pairs.push_back({{"a", rec.a},
                     {"b", rec.b},
                     {"s_a_bits", rec.s_a_bits},
                     {"s_b_bits", rec.s_b_bits},
                     {"s_secret_bits", rec.s_secret_bits},
                     {"identity_residual_bits", rec.identity_residual_bits},
                     {"bound_a_holds", rec.bound_a_holds},
                     {"bound_b_holds", rec.bound_b_holds},
                     {"identity_holds", rec.identity_holds},
                     {"verdict", rec.verdict}});
  out["theorem6"] = {{"verdict", report.theorem6_verdict}, {"pairs", std::move(pairs)}};

  out["rates"] = rates_to_json(report.rates);
  out["overall"] = report.overall;
  return out.dump(2);
}

std::string classification_json(const AccessStructure& gamma, const StructureFlags& flags,
                                const std::vector<SubsetPair>& pairs) {
  json out;
  out["players"] = gamma.players();
  out["minimal_authorized"] = gamma.minimal_authorized();
  out["flags"] = {{"monotone_antichain", flags.monotone_antichain},
                  {"quantum_admissible", flags.quantum_admissible},
                  {"complement_closed", flags.complement_closed}};
  if (!flags.quantum_admissible)
    out["disjoint_witness"] = {flags.disjoint_witness_a, flags.disjoint_witness_b};
  json pj = json::array();
  for (const auto& p : pairs) pj.push_back({{"a", p.a}, {"b", p.b}});
  out["theorem6_pairs"] = std::move(pj);
  return out.dump(2);
}

std::string recovery_json(const RecoveryMap& map) {
  json out;
  out["fidelity"] = map.fidelity;
  out["isometry_rows"] = map.isometry.rows();
  out["isometry_cols"] = map.isometry.cols();
  out["discard_labels"] = map.discard_labels;
  out["relative_state_defect"] = map.relative_state_defect;
  out["excluded_weight"] = map.excluded_weight;
  json domain = json::array();
  for (const auto& p : map.domain_layout.parts())
    domain.push_back({{"label", p.label}, {"dim", p.dim}});
  out["domain"] = std::move(domain);
  json output = json::array();
  for (const auto& p : map.output_layout.parts())
    output.push_back({{"label", p.label}, {"dim", p.dim}});
  out["output"] = std::move(output);
  return out.dump(2);
}

std::string rates_json(const RatesReport& report) { return rates_to_json(report).dump(2); }

}  // namespace qss
