#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsslab/layout.hpp"
#include "qsslab/matrix.hpp"
#include "qsslab/tensorlin.hpp"

namespace qss {

// Entropies are reported in bits (base-2 logarithms) throughout.

// Eigenvalues in [-kEigenClamp, 0) are treated as exact zeros; anything
// below -kEigenClamp violates the density-matrix invariant.
inline constexpr double kEigenClamp = 1e-10;

// Default slack tolerance for the entropy-inequality verdicts.
inline constexpr double kInequalityTol = 1e-8;

// A state together with the labeled tensor-factor structure it lives on.
// Construction enforces Hermiticity and unit trace (within 1e-10);
// eigenvalue nonnegativity (>= -1e-10) is enforced wherever the spectrum is
// actually computed.
class DensityMatrix {
public:
  DensityMatrix() = default;
  DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return matrix_.rows(); }

  // Reduction onto the given labels (layout order preserved).
  DensityMatrix reduce(const std::vector<std::string>& keep) const;

private:
  ComplexMatrix matrix_;
  SubsystemLayout layout_;
};

// Entropy of a spectrum already known to be a probability vector; clamps
// the [-1e-10, 0) window to zero and rejects anything below it.
double entropy_from_eigenvalues(const std::vector<double>& eigenvalues);

// S(X) = -Tr(rho log2 rho).
double von_neumann_entropy(const DensityMatrix& rho);

// S(X|Y) = S(XY) - S(Y). May be negative.
double conditional_entropy(const DensityMatrix& rho, const std::vector<std::string>& x,
                           const std::vector<std::string>& y);

// I(X:Y) = S(X) + S(Y) - S(XY).
double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& x,
                          const std::vector<std::string>& y);

// I_e = S(A) - S(RA) on a state of the joint system RA.
double coherent_information(const DensityMatrix& rho_ra, const std::vector<std::string>& a,
                            const std::vector<std::string>& r);

struct InequalityVerdict {
  std::string name;
  double slack = 0.0;  // rhs - lhs; the inequality asserts slack >= 0
  bool holds = false;  // slack >= -tolerance
};

struct EntropyReport {
  // Entropies for each subsystem combination touched by the checks.
  std::vector<std::pair<std::string, double>> entropies;
  std::vector<std::pair<std::string, double>> conditional_entropies;
  std::vector<std::pair<std::string, double>> mutual_informations;
  std::vector<InequalityVerdict> verdicts;
  double tolerance = kInequalityTol;

  bool all_hold() const;
};

// Checks subadditivity and Araki-Lieb on (X,Y), and strong subadditivity
// plus mutual-information monotonicity on (X,Y,Z) when z is nonempty.
EntropyReport check_entropy_inequalities(const DensityMatrix& rho,
                                         const std::vector<std::string>& x,
                                         const std::vector<std::string>& y,
                                         const std::vector<std::string>& z = {},
                                         double tolerance = kInequalityTol);

// Reduction of a seeded Gaussian pure state on layout (x) purifier. The same
// seed always produces bitwise-identical output (the generator is mt19937_64
// driving a fixed Box-Muller transform).
DensityMatrix random_density_matrix(const SubsystemLayout& layout, std::size_t purifying_dim,
                                    std::uint64_t seed);

// Seeded Gaussian unit vector of the given dimension (shared by the density
// sampler and the test-ensemble helpers).
StateVector random_pure_state(std::size_t dim, std::uint64_t seed);

}  // namespace qss
