#pragma once

#include <string>
#include <vector>

#include "qsslab/layout.hpp"
#include "qsslab/matrix.hpp"

namespace qss {

// Hard cap on tensor dimensions; everything here is desk-scale dense algebra.
inline constexpr std::size_t kDefaultMaxDim = 20000;

// Kronecker product a (x) b. Throws size_error when the result would exceed
// max_dim rows or columns.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_dim = kDefaultMaxDim);

StateVector tensor_product(const StateVector& a, const StateVector& b,
                           std::size_t max_dim = kDefaultMaxDim);

// Partial trace of a square matrix over the subsystems NOT in `keep`. The
// output subsystem order is the order of the kept labels in `layout`, not
// the order of the `keep` argument.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            const std::vector<std::string>& keep);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, aligned with eigenvalues
};

// Hermitian eigendecomposition by cyclic Jacobi. Input must be Hermitian
// within hermitian_tol (entrywise max |m - m^dagger|). Converges when the
// off-diagonal Frobenius norm drops below 1e-13 * ||m||_F, capped at 100
// sweeps (numeric_error past the cap).
EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol = 1e-10);

// Eigenvalues only (ascending); skips accumulating the eigenvector matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-10);

// True iff v has at least as many rows as columns and max |V^dagger V - I| <= tol.
// Wide matrices are never isometries.
bool check_isometry(const ComplexMatrix& v, double tol);

// --- pure-state tensor manipulation -------------------------------------

// Reorder the tensor factors of a pure state: new_order[k] is the position
// (in `layout`) of the factor that ends up at slot k. Must be a permutation.
StateVector permute_state(const StateVector& psi, const SubsystemLayout& layout,
                          const std::vector<std::size_t>& new_order);

// Reduced density matrix of a PURE state on the kept subsystems
// (rho = M M^dagger with M the (kept x rest) reshape of psi). Equals
// partial_trace of the projector but costs O(d_keep^2 * d_rest).
ComplexMatrix reduce_pure(const StateVector& psi, const SubsystemLayout& layout,
                          const std::vector<std::string>& keep);

// Contract a pure state with <u| on the factors at `positions` (sorted,
// layout order); returns the unnormalized residual state on the remaining
// factors in layout order: out[rest] = sum_u conj(u[idx]) psi[idx, rest].
std::vector<complexd> contract_bra(const StateVector& psi, const SubsystemLayout& layout,
                                   const std::vector<std::size_t>& positions,
                                   const std::vector<complexd>& u);

}  // namespace qss
