#include "qsslab/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsslab/tensorlin.hpp"

namespace qss {

MultipartiteState::MultipartiteState(StateVector pure, SubsystemLayout layout)
    : pure_(std::move(pure)), layout_(std::move(layout)) {
  if (pure_.dim() != layout_.total_dim())
    throw input_error("state dimension does not match layout total");
  if (!pure_.is_normalized(1e-10))
    throw input_error("multipartite pure states must be normalized within 1e-10");
}

MultipartiteState purify(const DensityMatrix& rho_s) {
  const std::size_t d = rho_s.dim();
  EigResult eig = hermitian_eig(rho_s.matrix());

  // Reference ket r pairs with the r-th eigenbranch in descending
  // eigenvalue order, ties keeping their computational-basis order: a
  // maximally mixed secret purifies to sum_i |i>|i> / sqrt(d) and a rank-1
  // secret to |psi>_S |0>_R.
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return eig.eigenvalues[x] > eig.eigenvalues[y];
  });

  StateVector psi(d * d);  // S (x) R, both of dimension d
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t k = order[r];
    double lambda = eig.eigenvalues[k];
    if (lambda < -kEigenClamp)
      throw input_error("purify input has an eigenvalue below the -1e-10 floor");
    if (lambda <= 0.0) continue;
    const double w = std::sqrt(lambda);
    for (std::size_t s = 0; s < d; ++s) psi[s * d + r] += w * eig.eigenvectors(s, k);
  }
  psi.normalize();
  return MultipartiteState(std::move(psi), SubsystemLayout({{"S", d}, {"R", d}}));
}

MultipartiteState assemble_global(const SchemeSpec& scheme, const SecretEnsemble& ensemble) {
  if (ensemble.secret_dim() != scheme.encoding.secret_dim())
    throw input_error("ensemble dimension does not match the scheme secret dimension");

  const DensityMatrix rho_s = ensemble_density(ensemble);
  const MultipartiteState sr = purify(rho_s);
  // Reference factor to position 0.
  const StateVector rs = permute_state(sr.vector(), sr.layout(), {1, 0});

  const std::size_t d = ensemble.secret_dim();
  const ComplexMatrix& v = scheme.encoding.matrix();
  const std::size_t share_dim = v.rows();
  if (d * share_dim > kDefaultMaxDim)
    throw size_error("global state dimension exceeds the configured maximum of " +
                     std::to_string(kDefaultMaxDim));

  // (I_R (x) V) acting on |RS>: block r of the output is V applied to the
  // secret-slice r of |RS>.
  StateVector global(d * share_dim);
  std::vector<complexd> slice(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) slice[s] = rs[r * d + s];
    const auto encoded = v.apply(slice);
    for (std::size_t j = 0; j < share_dim; ++j) global[r * share_dim + j] = encoded[j];
  }

  std::vector<Subsystem> parts{{"R", d}};
  for (const auto& p : scheme.encoding.output_layout().parts()) parts.push_back(p);
  return MultipartiteState(std::move(global), SubsystemLayout(std::move(parts)));
}

DensityMatrix reduce(const MultipartiteState& global, const std::vector<std::string>& keep) {
  if (keep.empty()) throw input_error("reduce requires a nonempty label set");
  const auto keep_pos = global.layout().positions_of(keep);
  ComplexMatrix rho = reduce_pure(global.vector(), global.layout(), keep);
  // Rounding can leave the trace a few ulps off 1; snap it.
  const double tr = rho.trace().real();
  for (auto& e : rho.entries()) e /= tr;
  return DensityMatrix(std::move(rho), global.layout().select(keep_pos));
}

double subset_entropy_pure(const MultipartiteState& global, const std::vector<std::string>& keep) {
  if (keep.empty()) return 0.0;
  const auto keep_pos = global.layout().positions_of(keep);
  const auto rest_pos = global.layout().complement(keep_pos);
  if (rest_pos.empty()) return 0.0;  // pure total state

  std::size_t keep_dim = 1, rest_dim = 1;
  for (auto p : keep_pos) keep_dim *= global.layout()[p].dim;
  for (auto p : rest_pos) rest_dim *= global.layout()[p].dim;

  std::vector<std::string> side;
  if (keep_dim <= rest_dim) {
    side = keep;
  } else {
    for (auto p : rest_pos) side.push_back(global.layout()[p].label);
  }
  ComplexMatrix rho = reduce_pure(global.vector(), global.layout(), side);
  return entropy_from_eigenvalues(hermitian_eigenvalues(rho));
}

}  // namespace qss
