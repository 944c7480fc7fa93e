// qsslab: verify quantum secret sharing schemes against the entropic
// definition, classify access structures, synthesize recovery maps, and run
// the entropy-inequality selftest.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsslab/access.hpp"
#include "qsslab/entropy.hpp"
#include "qsslab/report_json.hpp"
#include "qsslab/scheme_io.hpp"
#include "qsslab/schemes.hpp"
#include "qsslab/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericError = 3;

std::string fmt(double value) {
  if (std::abs(value) < 5e-10) value = 0.0;  // avoid a stray "-0.000000000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

std::string joined(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_verification_text(const qss::VerificationReport& r, std::ostream& os) {
  os << "scheme: " << r.scheme_name << "\n";
  os << "tolerance: " << r.tolerance << (r.fast ? "  (fast subset selection)" : "") << "\n";
  os << "I(R:S) = " << fmt(r.i_rs_bits) << " bits\n";
  os << "S(S)   = " << fmt(r.secret_entropy_bits) << " bits\n";
  os << "definition 1:\n";
  for (const auto& rec : r.definition1) {
    os << "  subset " << joined(rec.subset) << ": "
       << (rec.authorized ? "authorized  " : "unauthorized") << "  I(R:A) = "
       << fmt(rec.mutual_information_bits) << "  target = " << fmt(rec.target_bits)
       << "  I_e = " << fmt(rec.coherent_information_bits) << "  "
       << (rec.verdict ? "ok" : "FAIL") << "\n";
  }
  os << "definition 1 verdict: " << (r.definition1_verdict ? "pass" : "FAIL") << "\n";
  if (r.coexistence_violations.empty()) {
    os << "coexistence: no violations\n";
  } else {
    os << "coexistence violations:\n";
    for (const auto& v : r.coexistence_violations)
      os << "  authorized " << joined(v.authorized_set) << " but I(R:" << joined(v.complement)
         << ") = " << fmt(v.mutual_information_bits) << "\n";
  }
  os << "theorem 6:\n";
  for (const auto& rec : r.theorem6)
    os << "  pair A=" << joined(rec.a) << " B=" << joined(rec.b) << ": S(A) = " << fmt(rec.s_a_bits)
       << "  S(B) = " << fmt(rec.s_b_bits) << "  S(S) = " << fmt(rec.s_secret_bits)
       << "  identity residual = " << fmt(rec.identity_residual_bits) << "  "
       << (rec.verdict ? "ok" : "FAIL") << "\n";
  os << "theorem 6 verdict: " << (r.theorem6_verdict ? "pass" : "FAIL") << "\n";
  if (r.rates.defined) {
    os << "rates: r = " << fmt(r.rates.r) << "  r_bar = " << fmt(r.rates.r_bar)
       << "  1/r = " << fmt(r.rates.inverse_r) << "\n";
    os << "  max share entropy = " << fmt(r.rates.max_share_entropy_bits)
       << " bits  margin over S(S) = " << fmt(r.rates.max_minus_secret_bits) << " bits\n";
  } else {
    os << "rates: undefined (all share entropies vanish)\n";
  }
  os << "overall: " << (r.overall ? "pass" : "FAIL") << "\n";
}

int cmd_verify(const std::string& file, double tolerance, bool fast, bool stress,
               const std::string& format) {
  const qss::SchemeSpec scheme = qss::load_scheme_file(file);
  const qss::VerificationReport report =
      qss::full_verification(scheme, scheme.ensemble_default, tolerance, fast);

  bool overall = report.overall;
  std::vector<qss::VerificationReport> stress_reports;
  if (stress) {
    const auto uniform = qss::SecretEnsemble::uniform_basis(scheme.encoding.secret_dim());
    stress_reports.push_back(qss::full_verification(scheme, uniform, tolerance, fast));
    overall = overall && stress_reports.back().overall;
  }

  if (format == "json") {
    if (!stress) {
      std::cout << qss::verification_report_json(report) << "\n";
    } else {
      nlohmann::json out;
      out["declared"] = nlohmann::json::parse(qss::verification_report_json(report));
      out["stress"] = nlohmann::json::parse(qss::verification_report_json(stress_reports.front()));
      out["overall"] = overall;
      std::cout << out.dump(2) << "\n";
    }
  } else {
    print_verification_text(report, std::cout);
    if (stress) {
      std::cout << "stress (uniform basis ensemble):\n";
      print_verification_text(stress_reports.front(), std::cout);
      std::cout << "combined overall: " << (overall ? "pass" : "FAIL") << "\n";
    }
  }
  return overall ? kExitPass : kExitVerdictFailure;
}

int cmd_classify(const std::string& file, const std::string& shorthand, const std::string& format) {
  qss::AccessStructure gamma =
      !shorthand.empty() ? qss::load_structure(shorthand) : qss::load_structure_file(file);
  const qss::StructureFlags flags = qss::classify(gamma);
  const auto pairs = qss::theorem6_pairs(gamma);

  if (format == "json") {
    std::cout << qss::classification_json(gamma, flags, pairs) << "\n";
  } else {
    std::cout << "players:";
    for (const auto& p : gamma.players()) std::cout << " " << p;
    std::cout << "\nminimal authorized sets:";
    for (const auto& s : gamma.minimal_authorized()) std::cout << " " << joined(s);
    std::cout << "\nflags: monotone_antichain=" << (flags.monotone_antichain ? "true" : "false")
              << " quantum_admissible=" << (flags.quantum_admissible ? "true" : "false")
              << " complement_closed=" << (flags.complement_closed ? "true" : "false") << "\n";
    if (!flags.quantum_admissible)
      std::cout << "disjoint witness: " << joined(flags.disjoint_witness_a) << " "
                << joined(flags.disjoint_witness_b) << "\n";
    std::cout << "theorem-6 pairs (" << pairs.size() << "):\n";
    for (const auto& p : pairs) std::cout << "  A=" << joined(p.a) << " B=" << joined(p.b) << "\n";
  }
  return kExitPass;
}

int cmd_decode(const std::string& file, const std::string& subset_csv, double tolerance,
               const std::string& format) {
  const qss::SchemeSpec scheme = qss::load_scheme_file(file);
  const auto subset = split_labels(subset_csv);
  if (subset.empty()) throw qss::input_error("--subset requires a comma-separated label list");
  const qss::RecoveryMap map =
      qss::synthesize_recovery(scheme, scheme.ensemble_default, subset, tolerance);

  if (format == "json") {
    std::cout << qss::recovery_json(map) << "\n";
  } else {
    std::cout << "coalition " << joined(subset) << ": fidelity = " << fmt(map.fidelity) << "\n";
    std::cout << "recovery isometry: " << map.isometry.rows() << "x" << map.isometry.cols()
              << " from H_A into H_S (x) H_B', discard";
    for (const auto& d : map.discard_labels) std::cout << " " << d;
    std::cout << "\nrelative-state defect = " << map.relative_state_defect
              << "  excluded weight = " << map.excluded_weight << "\n";
  }
  return map.fidelity >= 1.0 - tolerance ? kExitPass : kExitVerdictFailure;
}

int cmd_selftest(std::size_t samples, std::uint64_t seed, const std::string& format) {
  if (samples < 1) throw qss::input_error("--samples must be at least 1");

  // Fixtures: the Bell pair witnesses negative conditional entropy; a
  // product state sits at the subadditivity equality point.
  qss::StateVector bell(4);
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  const qss::DensityMatrix bell_rho(bell.projector(), qss::SubsystemLayout({{"X", 2}, {"Y", 2}}));
  const double bell_cond = qss::conditional_entropy(bell_rho, {"X"}, {"Y"});

  const qss::DensityMatrix px = qss::random_density_matrix(qss::SubsystemLayout({{"X", 2}}), 2, seed);
  const qss::DensityMatrix py =
      qss::random_density_matrix(qss::SubsystemLayout({{"Y", 2}}), 2, seed + 1);
  const qss::ComplexMatrix prod = qss::tensor_product(px.matrix(), py.matrix());
  const qss::DensityMatrix product_rho(prod, qss::SubsystemLayout({{"X", 2}, {"Y", 2}}));
  const auto product_report = qss::check_entropy_inequalities(product_rho, {"X"}, {"Y"});
  const double product_slack = product_report.verdicts.front().slack;

  struct Tally {
    std::string name;
    double min_slack = 1e300;
    std::size_t violations = 0;
  };
  std::vector<Tally> tallies = {
      {"subadditivity"}, {"araki-lieb"}, {"strong-subadditivity"}, {"mi-monotonicity"}};

  for (std::size_t i = 0; i < samples; ++i) {
    const bool alt = (i % 2) == 1;
    const qss::SubsystemLayout layout =
        alt ? qss::SubsystemLayout({{"X", 2}, {"Y", 3}, {"Z", 2}})
            : qss::SubsystemLayout({{"X", 2}, {"Y", 2}, {"Z", 2}});
    const auto rho = qss::random_density_matrix(layout, layout.total_dim(), seed + 2 + i);
    const auto report = qss::check_entropy_inequalities(rho, {"X"}, {"Y"}, {"Z"});
    for (const auto& verdict : report.verdicts)
      for (auto& tally : tallies)
        if (tally.name == verdict.name) {
          tally.min_slack = std::min(tally.min_slack, verdict.slack);
          if (!verdict.holds) ++tally.violations;
        }
  }

  std::size_t total_violations = 0;
  for (const auto& t : tallies) total_violations += t.violations;

  if (format == "json") {
    nlohmann::json out;
    out["samples"] = samples;
    out["seed"] = seed;
    out["fixtures"] = {{"bell_conditional_entropy_bits", bell_cond},
                       {"product_subadditivity_slack", product_slack}};
    nlohmann::json ineq = nlohmann::json::array();
    for (const auto& t : tallies)
      ineq.push_back({{"name", t.name}, {"min_slack", t.min_slack}, {"violations", t.violations}});
    out["inequalities"] = std::move(ineq);
    out["violations"] = total_violations;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fixtures:\n";
    std::cout << "  bell pair S(X|Y) = " << fmt(bell_cond) << " bits (negative conditional entropy)\n";
    std::cout << "  product state subadditivity slack = " << fmt(product_slack) << "\n";
    std::cout << "samples: " << samples << " (tripartite dims 2,2,2 and 2,3,2, seed " << seed
              << ")\n";
    for (const auto& t : tallies)
      std::cout << "  " << t.name << ": min slack = " << t.min_slack
                << ", violations = " << t.violations << "\n";
    std::cout << "violations: " << total_violations << "\n";
  }
  return total_violations == 0 ? kExitPass : kExitVerdictFailure;
}

int cmd_rates(const std::string& file, const std::string& format) {
  const qss::SchemeSpec scheme = qss::load_scheme_file(file);
  const qss::RatesReport report = qss::rates(scheme, scheme.ensemble_default);
  if (format == "json") {
    std::cout << qss::rates_json(report) << "\n";
  } else {
    if (report.defined)
      std::cout << "r = " << fmt(report.r) << "  r_bar = " << fmt(report.r_bar)
                << "  1/r = " << fmt(report.inverse_r) << "\n";
    else
      std::cout << "rates undefined (all share entropies vanish)\n";
    std::cout << "S(S) = " << fmt(report.secret_entropy_bits)
              << " bits  max share entropy = " << fmt(report.max_share_entropy_bits) << " bits\n";
    for (const auto& [player, s] : report.share_entropies)
      std::cout << "  S(" << player << ") = " << fmt(s) << " bits\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic verification laboratory for quantum secret sharing schemes"};
  app.require_subcommand(1);
  app.fallthrough();

  double tolerance = qss::kVerifierTol;
  std::uint64_t seed = 0;
  std::string format = "text";
  app.add_option("--tolerance", tolerance, "entropic tolerance in bits")->capture_default_str();
  app.add_option("--seed", seed, "sampler seed")->capture_default_str();
  app.add_option("--report", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string verify_file;
  bool fast = false, stress = false;
  auto* verify = app.add_subcommand("verify", "check a scheme against the entropic definition");
  verify->add_option("file", verify_file, "scheme document")->required();
  verify->add_flag("--fast", fast, "check only minimal authorized and maximal unauthorized sets");
  verify->add_flag("--stress", stress, "also verify with the uniform basis ensemble");

  std::string classify_file, structure;
  auto* classify = app.add_subcommand("classify", "classify an access structure");
  classify->add_option("file", classify_file, "scheme or structure document");
  classify->add_option("--structure", structure, "shorthand: vernam | threshold:t,n");

  std::string decode_file, subset;
  auto* decode = app.add_subcommand("decode", "synthesize a recovery map for a coalition");
  decode->add_option("file", decode_file, "scheme document")->required();
  decode->add_option("--subset", subset, "comma-separated coalition labels")->required();

  std::size_t samples = 1000;
  auto* selftest = app.add_subcommand("selftest", "entropy-inequality sampling audit");
  selftest->add_option("--samples", samples, "number of sampled tripartite states")
      ->capture_default_str();

  std::string rates_file;
  auto* rates_cmd = app.add_subcommand("rates", "information rates of a scheme");
  rates_cmd->add_option("file", rates_file, "scheme document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_file, tolerance, fast, stress, format);
    if (classify->parsed()) {
      if (structure.empty() && classify_file.empty())
        throw qss::input_error("classify needs a document or --structure");
      return cmd_classify(classify_file, structure, format);
    }
    if (decode->parsed()) return cmd_decode(decode_file, subset, tolerance, format);
    if (selftest->parsed()) return cmd_selftest(samples, seed, format);
    if (rates_cmd->parsed()) return cmd_rates(rates_file, format);
  } catch (const qss::recovery_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdictFailure;
  } catch (const qss::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const qss::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
  return kExitInputError;
}
