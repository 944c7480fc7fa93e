#include "qsslab/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "qsslab/tensorlin.hpp"

namespace qss {

namespace {

constexpr std::size_t kPlayerCap = 12;

std::string joined(const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "}";
  return os.str();
}

// Assembled global state plus memoized subset entropies. Masks run over the
// players only; the reference enters through the `with_reference` flag.
class GlobalContext {
public:
  GlobalContext(const SchemeSpec& scheme, const SecretEnsemble& ensemble)
      : scheme_(scheme),
        ensemble_(ensemble),
        global_(assemble_global(scheme, ensemble)),
        players_(scheme.gamma.players()) {
    if (players_.size() > kPlayerCap)
      throw size_error("subset verification is limited to " + std::to_string(kPlayerCap) +
                       " players");
    secret_entropy_ = von_neumann_entropy(ensemble_density(ensemble));
  }

  const SchemeSpec& scheme() const { return scheme_; }
  const MultipartiteState& global() const { return global_; }
  const std::vector<std::string>& players() const { return players_; }
  std::size_t player_count() const { return players_.size(); }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << players_.size()) - 1; }
  double secret_entropy() const { return secret_entropy_; }

  std::vector<std::string> labels_of(std::uint64_t mask, bool with_reference) const {
    std::vector<std::string> out;
    if (with_reference) out.push_back("R");
    for (std::size_t i = 0; i < players_.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) out.push_back(players_[i]);
    return out;
  }

  double entropy(std::uint64_t mask, bool with_reference) {
    const std::uint64_t key = (mask << 1) | (with_reference ? 1 : 0);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double s = subset_entropy_pure(global_, labels_of(mask, with_reference));
    cache_.emplace(key, s);
    // The complementary subset of a pure state has the same entropy.
    const std::uint64_t comp_key = ((full_mask() & ~mask) << 1) | (with_reference ? 0 : 1);
    cache_.emplace(comp_key, s);
    return s;
  }

  // I(R : subset). Zero for the empty subset.
  double mutual_information_with_reference(std::uint64_t mask) {
    if (mask == 0) return 0.0;
    return entropy(0, true) + entropy(mask, false) - entropy(mask, true);
  }

  // I(R:S) from the purification of the secret.
  double reference_secret_mutual_information() const {
    const MultipartiteState sr = purify(ensemble_density(ensemble_));
    return subset_entropy_pure(sr, {"R"}) + subset_entropy_pure(sr, {"S"});
  }

private:
  const SchemeSpec& scheme_;
  const SecretEnsemble& ensemble_;
  MultipartiteState global_;
  std::vector<std::string> players_;
  double secret_entropy_ = 0.0;
  std::map<std::uint64_t, double> cache_;
};

// Size-then-lexicographic order on index sets (the declared player order).
bool subset_order(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a & lowest) != 0;  // the set containing the lower index sorts first
}

std::vector<std::uint64_t> sorted_subsets(std::uint64_t full, bool include_empty = false) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = include_empty ? 0 : 1; m <= full; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), subset_order);
  return masks;
}

std::vector<SubsetRecord> definition1_records(GlobalContext& ctx, double tol, bool fast,
                                              double i_rs) {
  const std::uint64_t full = ctx.full_mask();
  std::vector<std::uint64_t> masks;
  if (!fast) {
    masks = sorted_subsets(full);
  } else {
    // Minimal authorized and maximal unauthorized sets suffice by
    // mutual-information monotonicity.
    for (std::uint64_t m = 1; m <= full; ++m) {
      const bool auth = ctx.scheme().gamma.is_authorized_mask(m);
      bool pick = false;
      if (auth) {
        pick = true;
        for (std::size_t i = 0; i < ctx.player_count() && pick; ++i)
          if ((m & (std::uint64_t{1} << i)) &&
              ctx.scheme().gamma.is_authorized_mask(m & ~(std::uint64_t{1} << i)))
            pick = false;
      } else {
        pick = true;
        for (std::size_t i = 0; i < ctx.player_count() && pick; ++i)
          if (!(m & (std::uint64_t{1} << i)) &&
              !ctx.scheme().gamma.is_authorized_mask(m | (std::uint64_t{1} << i)))
            pick = false;
      }
      if (pick) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), subset_order);
  }

  const double s_secret = ctx.secret_entropy();
  std::vector<SubsetRecord> records;
  records.reserve(masks.size());
  for (auto m : masks) {
    SubsetRecord rec;
    rec.subset = ctx.labels_of(m, false);
    rec.authorized = ctx.scheme().gamma.is_authorized_mask(m);
    rec.mutual_information_bits = ctx.mutual_information_with_reference(m);
    rec.target_bits = rec.authorized ? i_rs : 0.0;
    rec.coherent_information_bits = ctx.entropy(m, false) - ctx.entropy(m, true);
    if (rec.authorized) {
      rec.verdict = std::abs(rec.mutual_information_bits - i_rs) <= tol;
      rec.coherent_verdict = std::abs(rec.coherent_information_bits - s_secret) <= tol;
    } else {
      rec.verdict = rec.mutual_information_bits <= tol;
      rec.coherent_verdict = std::abs(rec.coherent_information_bits + s_secret) <= tol;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CoexistenceViolation> coexistence_violations(GlobalContext& ctx, double tol) {
  std::vector<CoexistenceViolation> out;
  const std::uint64_t full = ctx.full_mask();
  for (auto m : sorted_subsets(full)) {
    if (!ctx.scheme().gamma.is_authorized_mask(m)) continue;
    const std::uint64_t comp = full & ~m;
    const double i = ctx.mutual_information_with_reference(comp);
    if (i > tol) out.push_back({ctx.labels_of(m, false), ctx.labels_of(comp, false), i});
  }
  return out;
}

std::vector<Theorem6Record> theorem6_records(GlobalContext& ctx, double tol) {
  const auto pairs = theorem6_pairs(ctx.scheme().gamma);
  const double s_secret = ctx.secret_entropy();
  const double s_r = ctx.entropy(0, true);

  std::vector<Theorem6Record> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const std::uint64_t ma = ctx.scheme().gamma.mask_of(pair.a);
    const std::uint64_t mb = ctx.scheme().gamma.mask_of(pair.b);
    Theorem6Record rec;
    rec.a = pair.a;
    rec.b = pair.b;
    rec.s_a_bits = ctx.entropy(ma, false);
    rec.s_b_bits = ctx.entropy(mb, false);
    rec.s_secret_bits = s_secret;
    rec.identity_residual_bits =
        std::abs(ctx.entropy(ma | mb, false) - ctx.entropy(ma | mb, true) - s_r);
    rec.bound_a_holds = rec.s_a_bits >= s_secret - tol;
    rec.bound_b_holds = rec.s_b_bits >= s_secret - tol;
    rec.identity_holds = rec.identity_residual_bits <= tol;
    rec.verdict = rec.bound_a_holds && rec.bound_b_holds && rec.identity_holds;
    out.push_back(std::move(rec));
  }
  return out;
}

RatesReport rates_report(GlobalContext& ctx) {
  RatesReport report;
  report.secret_entropy_bits = ctx.secret_entropy();
  double sum = 0.0, max = 0.0;
  for (std::size_t i = 0; i < ctx.player_count(); ++i) {
    const double s = ctx.entropy(std::uint64_t{1} << i, false);
    report.share_entropies.push_back({ctx.players()[i], s});
    sum += s;
    max = std::max(max, s);
  }
  report.max_share_entropy_bits = max;
  report.max_minus_secret_bits = max - report.secret_entropy_bits;
  report.defined = max > 1e-12;
  if (report.defined) {
    report.r = report.secret_entropy_bits / max;
    report.r_bar = report.secret_entropy_bits * static_cast<double>(ctx.player_count()) / sum;
    report.inverse_r = max / report.secret_entropy_bits;
  }
  return report;
}

VerificationReport compose_report(GlobalContext& ctx, double tol, bool fast, bool all_sections) {
  VerificationReport report;
  report.scheme_name = ctx.scheme().name;
  report.tolerance = tol;
  report.fast = fast;
  report.i_rs_bits = ctx.reference_secret_mutual_information();
  report.secret_entropy_bits = ctx.secret_entropy();

  report.definition1 = definition1_records(ctx, tol, fast, report.i_rs_bits);
  report.definition1_verdict = std::all_of(report.definition1.begin(), report.definition1.end(),
                                           [](const SubsetRecord& r) { return r.verdict; });
  if (all_sections) {
    report.coexistence_violations = coexistence_violations(ctx, tol);
    report.theorem6 = theorem6_records(ctx, tol);
    report.theorem6_verdict = std::all_of(report.theorem6.begin(), report.theorem6.end(),
                                          [](const Theorem6Record& r) { return r.verdict; });
    report.rates = rates_report(ctx);
    report.overall = report.definition1_verdict && report.coexistence_violations.empty() &&
                     report.theorem6_verdict;
  } else {
    report.theorem6_verdict = true;
    report.overall = report.definition1_verdict;
  }
  return report;
}

}  // namespace

VerificationReport verify_definition1(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                      double tol, bool fast) {
  GlobalContext ctx(scheme, ensemble);
  return compose_report(ctx, tol, fast, false);
}

std::vector<CoexistenceViolation> check_coexistence(const SchemeSpec& scheme,
                                                    const SecretEnsemble& ensemble, double tol) {
  GlobalContext ctx(scheme, ensemble);
  return coexistence_violations(ctx, tol);
}

std::vector<Theorem6Record> check_theorem6(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                           double tol) {
  GlobalContext ctx(scheme, ensemble);
  return theorem6_records(ctx, tol);
}

RatesReport rates(const SchemeSpec& scheme, const SecretEnsemble& ensemble) {
  GlobalContext ctx(scheme, ensemble);
  return rates_report(ctx);
}

VerificationReport full_verification(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                     double tol, bool fast) {
  GlobalContext ctx(scheme, ensemble);
  return compose_report(ctx, tol, fast, true);
}

namespace {

complexd inner(const std::vector<complexd>& x, const std::vector<complexd>& y) {
  complexd acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double vec_norm(const std::vector<complexd>& x) { return std::sqrt(std::abs(inner(x, x).real())); }

// Largest deviation of the Gram matrix from the identity.
double gram_defect(const std::vector<std::vector<complexd>>& vecs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i; j < vecs.size(); ++j) {
      complexd g = inner(vecs[i], vecs[j]);
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

// Two-pass Gram-Schmidt projection of `v` against `basis`, in place.
void project_out(std::vector<complexd>& v, const std::vector<std::vector<complexd>>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) {
      const complexd c = inner(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
}

// Deterministically extend `basis` (orthonormal) with `count` further
// orthonormal vectors, chosen greedily from the standard basis.
void extend_orthonormal(std::vector<std::vector<complexd>>& basis, std::size_t dim,
                        std::size_t count) {
  for (std::size_t added = 0; added < count; ++added) {
    std::vector<complexd> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < dim; ++e) {
      std::vector<complexd> cand(dim, 0.0);
      cand[e] = 1.0;
      project_out(cand, basis);
      const double n = vec_norm(cand);
      if (n > best_norm + 1e-12) {
        best_norm = n;
        best = std::move(cand);
      }
    }
    if (best_norm < 1e-6)
      throw numeric_error("failed to complete the recovery isometry to an orthonormal basis");
    for (auto& c : best) c /= best_norm;
    basis.push_back(std::move(best));
  }
}

}  // namespace

RecoveryMap synthesize_recovery(const SchemeSpec& scheme, const SecretEnsemble& ensemble,
                                const std::vector<std::string>& a, double tol) {
  GlobalContext ctx(scheme, ensemble);
  const std::uint64_t mask_a = scheme.gamma.mask_of(a);
  const std::uint64_t mask_b = ctx.full_mask() & ~mask_a;
  // The decoupling check comes first so the diagnostic names the actual
  // obstruction: for unauthorized coalitions of a working scheme it is the
  // complement's correlation with the reference.
  const double leak = ctx.mutual_information_with_reference(mask_b);
  if (leak > tol) {
    std::ostringstream os;
    os << "recovery impossible: the complement is still correlated with the reference, I(R:"
       << joined(ctx.labels_of(mask_b, false)) << ") = " << leak << " bits > " << tol;
    throw recovery_error(os.str());
  }
  if (!scheme.gamma.is_authorized_mask(mask_a))
    throw recovery_error("recovery impossible: " + joined(a) + " is not an authorized set");

  const MultipartiteState& global = ctx.global();
  const SubsystemLayout& layout = global.layout();
  const auto a_labels = ctx.labels_of(mask_a, false);
  const auto b_labels = ctx.labels_of(mask_b, false);
  const auto rb_labels = ctx.labels_of(mask_b, true);

  const SubsystemLayout domain = layout.select(layout.positions_of(a_labels));
  const std::size_t dim_a = domain.total_dim();
  const std::size_t dim_s = ensemble.secret_dim();
  std::size_t dim_b = 1;
  for (const auto& l : b_labels) dim_b *= layout[layout.index_of(l)].dim;
  // B' is a purifying copy of the complement, enlarged when needed so that
  // H_S (x) H_B' can absorb an isometric image of all of H_A.
  const std::size_t dim_bp = std::max(dim_b, (dim_a + dim_s - 1) / dim_s);

  // Eigenbasis of rho_RB; branches below the weight cutoff are excluded
  // from the relative-state construction and charged to the error budget.
  const ComplexMatrix rho_rb = reduce_pure(global.vector(), layout, rb_labels);
  EigResult eig = hermitian_eig(rho_rb);
  constexpr double kWeightCutoff = 1e-12;

  std::vector<std::size_t> kept;
  double excluded_weight = 0.0;
  for (std::size_t k = eig.eigenvalues.size(); k-- > 0;) {
    const double lambda = eig.eigenvalues[k];
    if (lambda > kWeightCutoff)
      kept.push_back(k);
    else if (lambda > 0.0)
      excluded_weight += lambda;
  }

  // Relative states of the global state: |v_k> = <u_k|Psi> / sqrt(lambda_k).
  const auto rb_positions = layout.positions_of(rb_labels);
  std::vector<std::vector<complexd>> v_states;
  std::vector<double> weights;
  for (auto k : kept) {
    std::vector<complexd> u(rho_rb.rows());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = eig.eigenvectors(i, k);
    auto v = contract_bra(global.vector(), layout, rb_positions, u);
    const double w = std::sqrt(eig.eigenvalues[k]);
    for (auto& c : v) c /= w;
    v_states.push_back(std::move(v));
    weights.push_back(eig.eigenvalues[k]);
  }

  const double v_defect = gram_defect(v_states);
  if (v_defect > 1e-8)
    throw numeric_error("relative states of the recovery construction are not orthonormal (defect " +
                        std::to_string(v_defect) + ")");

  // Target: |RS> (x) |Gamma_{B'B}>, with Gamma a fixed purification of the
  // complement's reduction.
  const DensityMatrix rho_s = ensemble_density(ensemble);
  const StateVector phi_rs =
      permute_state(purify(rho_s).vector(), SubsystemLayout({{"S", dim_s}, {"R", dim_s}}), {1, 0});

  StateVector gamma_bpb(dim_bp * dim_b);
  if (b_labels.empty()) {
    gamma_bpb[0] = 1.0;  // empty complement: scalar reduction, any unit ket
  } else {
    const ComplexMatrix rho_b = reduce_pure(global.vector(), layout, b_labels);
    EigResult eig_b = hermitian_eig(rho_b);
    for (std::size_t j = 0; j < dim_b; ++j) {
      const std::size_t k = dim_b - 1 - j;
      const double mu = eig_b.eigenvalues[k];
      if (mu <= 0.0) continue;
      const double w = std::sqrt(mu);
      for (std::size_t bi = 0; bi < dim_b; ++bi)
        gamma_bpb[j * dim_b + bi] += w * eig_b.eigenvectors(bi, k);
    }
    gamma_bpb.normalize();
  }

  const StateVector target = tensor_product(phi_rs, gamma_bpb);
  const SubsystemLayout target_layout(
      {{"R", dim_s}, {"S", dim_s}, {"B'", dim_bp}, {"B", std::max<std::size_t>(dim_b, 1)}});

  // Relative states of the target under the SAME eigenbasis:
  // |z_k> = <u_k| target / sqrt(lambda_k), living on S (x) B'.
  std::vector<std::vector<complexd>> z_states;
  for (std::size_t t = 0; t < kept.size(); ++t) {
    std::vector<complexd> u(rho_rb.rows());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = eig.eigenvectors(i, kept[t]);
    auto z = contract_bra(target, target_layout, {0, 3}, u);
    const double w = std::sqrt(weights[t]);
    for (auto& c : z) c /= w;
    z_states.push_back(std::move(z));
  }

  // Polish the v's into an exactly orthonormal family (they are within
  // v_defect of one already) and complete both sides to full rank.
  for (std::size_t i = 0; i < v_states.size(); ++i) {
    std::vector<std::vector<complexd>> prior(v_states.begin(), v_states.begin() + i);
    project_out(v_states[i], prior);
    const double n = vec_norm(v_states[i]);
    if (n < 1e-6) throw numeric_error("relative states degenerated during orthonormalization");
    for (auto& c : v_states[i]) c /= n;
  }
  const std::size_t rank = v_states.size();
  const std::size_t dim_sbp = dim_s * dim_bp;
  extend_orthonormal(v_states, dim_a, dim_a - rank);
  extend_orthonormal(z_states, dim_sbp, dim_a - rank);

  ComplexMatrix u_map(dim_sbp, dim_a);
  for (std::size_t k = 0; k < dim_a; ++k)
    for (std::size_t r = 0; r < dim_sbp; ++r)
      for (std::size_t c = 0; c < dim_a; ++c)
        u_map(r, c) += z_states[k][r] * std::conj(v_states[k][c]);

  if (!check_isometry(u_map, 1e-8))
    throw numeric_error("synthesized recovery map failed the isometry check");

  // Certify: apply I_R (x) U to rho_RA, discard B', compare against |RS>.
  const DensityMatrix rho_ra = reduce(global, ctx.labels_of(mask_a, true));
  const ComplexMatrix w_map = tensor_product(ComplexMatrix::identity(dim_s), u_map);
  const ComplexMatrix sigma = w_map * rho_ra.matrix() * w_map.dagger();
  const SubsystemLayout sigma_layout({{"R", dim_s}, {"S", dim_s}, {"B'", dim_bp}});
  const ComplexMatrix tau = partial_trace(sigma, sigma_layout, {"R", "S"});

  const auto& phi = phi_rs.amplitudes();
  complexd fid = 0.0;
  for (std::size_t r = 0; r < phi.size(); ++r)
    for (std::size_t c = 0; c < phi.size(); ++c) fid += std::conj(phi[r]) * tau(r, c) * phi[c];
  const double fidelity = fid.real();

  if (fidelity < 1.0 - tol - excluded_weight) {
    std::ostringstream os;
    os << "recovery construction fell short of certification: fidelity " << fidelity
       << " below 1 - " << tol;
    throw numeric_error(os.str());
  }

  RecoveryMap map;
  map.isometry = std::move(u_map);
  map.domain_layout = domain;
  map.output_layout = SubsystemLayout({{"S", dim_s}, {"B'", dim_bp}});
  map.discard_labels = {"B'"};
  map.fidelity = fidelity;
  map.relative_state_defect = v_defect;
  map.excluded_weight = excluded_weight;
  return map;
}

}  // namespace qss
