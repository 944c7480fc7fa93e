#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsslab/access.hpp"
#include "qsslab/schemes.hpp"
#include "qsslab/systems.hpp"

namespace qss {

// Default tolerance for entropic verdicts.
inline constexpr double kVerifierTol = 1e-7;

struct SubsetRecord {
  std::vector<std::string> subset;
  bool authorized = false;
  double mutual_information_bits = 0.0;   // I(R:A)
  double target_bits = 0.0;               // I(R:S) when authorized, else 0
  double coherent_information_bits = 0.0;  // S(A) - S(RA)
  bool verdict = false;                   // mutual-information criterion
  bool coherent_verdict = false;          // coherent-information criterion
};

struct CoexistenceViolation {
  std::vector<std::string> authorized_set;
  std::vector<std::string> complement;
  double mutual_information_bits = 0.0;  // I(R : complement)
};

struct Theorem6Record {
  std::vector<std::string> a;
  std::vector<std::string> b;
  double s_a_bits = 0.0;
  double s_b_bits = 0.0;
  double s_secret_bits = 0.0;
  double identity_residual_bits = 0.0;  // |S(AB) - S(RAB) - S(R)|
  bool bound_a_holds = false;           // S(A) >= S(S) - tol
  bool bound_b_holds = false;           // S(B) >= S(S) - tol
  bool identity_holds = false;
  bool verdict = false;
};

struct RatesReport {
  bool defined = false;
  double r = 0.0;
  double r_bar = 0.0;
  double inverse_r = 0.0;
  double secret_entropy_bits = 0.0;
  double max_share_entropy_bits = 0.0;
  double max_minus_secret_bits = 0.0;  // max_X S(X) - S(S), the Theorem-6 margin
  std::vector<std::pair<std::string, double>> share_entropies;
};

struct VerificationReport {
  std::string scheme_name;
  double tolerance = kVerifierTol;
  bool fast = false;
  double i_rs_bits = 0.0;
  double secret_entropy_bits = 0.0;

  std::vector<SubsetRecord> definition1;
  bool definition1_verdict = false;

  std::vector<CoexistenceViolation> coexistence_violations;

  std::vector<Theorem6Record> theorem6;
  bool theorem6_verdict = false;

  RatesReport rates;

  // True iff every individual verdict holds and no coexistence violation
  // was found.
  bool overall = false;
};

// Definition-1 audit: recoverability (I(R:A) = I(R:S)) on authorized
// subsets, secrecy (I(R:A) = 0) on unauthorized ones. Exhaustive over all
// nonempty player subsets; in fast mode only minimal authorized and maximal
// unauthorized sets are checked (sufficient by mutual-information
// monotonicity). Records are ordered by subset size, then lexicographically
// in the declared player order.
VerificationReport verify_definition1(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                      double tol = kVerifierTol, bool fast = false);

// No-cloning audit: for every authorized A, the complement must be
// decoupled from the reference. Empty result means the audit passed.
std::vector<CoexistenceViolation> check_coexistence(const SchemeSpec& scheme,
                                                    const SecretEnsemble& ensemble,
                                                    double tol = kVerifierTol);

// Share-size bound audit over every (A, B) pair of disjoint unauthorized
// sets with authorized union, including the proof-step identity
// S(AB) - S(RAB) = S(R).
std::vector<Theorem6Record> check_theorem6(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                           double tol = kVerifierTol);

// Information rates from single-player share entropies of the global state.
RatesReport rates(const SchemeSpec& scheme, const SecretEnsemble& ensemble);

// One-stop report composing all four audits over a single assembled state.
VerificationReport full_verification(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                     double tol = kVerifierTol, bool fast = false);

struct RecoveryMap {
  // Isometry from the coalition space H_A (factors in layout order) into
  // H_S (x) H_B', B' a purifying copy of the complement coalition.
  ComplexMatrix isometry;
  SubsystemLayout domain_layout;             // the coalition factors
  SubsystemLayout output_layout;             // [S, B']
  std::vector<std::string> discard_labels;   // {"B'"}
  double fidelity = 0.0;                     // <RS| T(rho_RA) |RS>
  double relative_state_defect = 0.0;        // max Gram deviation of the relative states
  double excluded_weight = 0.0;              // eigenvalue mass below the 1e-12 cutoff
};

// Builds an explicit recovery isometry for an authorized coalition by
// purification matching against the target |RS>, and certifies its
// fidelity. Throws recovery_error when the coalition is unauthorized or its
// complement is still correlated with the reference; numeric_error when the
// construction fails certification.
RecoveryMap synthesize_recovery(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                const std::vector<std::string>& a, double tol = kVerifierTol);

}  // namespace qss
