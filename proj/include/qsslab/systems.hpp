#pragma once

#include <optional>

#include "qsslab/entropy.hpp"
#include "qsslab/layout.hpp"
#include "qsslab/matrix.hpp"
#include "qsslab/schemes.hpp"

namespace qss {

// A labeled multipartite state: pure amplitudes plus layout (every state
// this module produces is pure; reductions come out as DensityMatrix).
class MultipartiteState {
public:
  MultipartiteState() = default;
  MultipartiteState(StateVector pure, SubsystemLayout layout);

  const StateVector& vector() const { return pure_; }
  const SubsystemLayout& layout() const { return layout_; }

private:
  StateVector pure_;
  SubsystemLayout layout_;
};

// Eigenvalue-based purification on S (x) R with the reference dimension
// equal to dim(H_S), zero branches included: eigenbranches are paired with
// reference basis kets in descending eigenvalue order, so a rank-1 secret
// purifies to |psi>_S |0>_R.
MultipartiteState purify(const DensityMatrix& rho_s);

// |R P1 ... Pm> = (I_R (x) V)|RS> with |RS> the purification above
// reordered reference-first. Layout is [R, players...].
MultipartiteState assemble_global(const SchemeSpec& scheme, const SecretEnsemble& ensemble);

// Density matrix of the kept subsystems (kept labels in layout order).
DensityMatrix reduce(const MultipartiteState& global, const std::vector<std::string>& keep);

// Entropy of a subset of a PURE multipartite state. Computed from whichever
// side of the bipartition is smaller (their nonzero spectra agree), so large
// complements never force a large eigenproblem. S({}) = 0.
double subset_entropy_pure(const MultipartiteState& global, const std::vector<std::string>& keep);

}  // namespace qss
