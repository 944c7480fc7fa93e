#pragma once

#include <string>
#include <vector>

#include "qsslab/access.hpp"
#include "qsslab/entropy.hpp"
#include "qsslab/layout.hpp"
#include "qsslab/matrix.hpp"

namespace qss {

// Source of secrets: pure states with prior probabilities. Items with zero
// probability are dropped at construction.
class SecretEnsemble {
public:
  struct Item {
    double probability = 0.0;
    StateVector state;
  };

  SecretEnsemble() = default;
  SecretEnsemble(std::size_t secret_dim, std::vector<Item> items);

  // Uniform mixture of the computational basis (the maximally mixed secret).
  static SecretEnsemble uniform_basis(std::size_t secret_dim);

  std::size_t secret_dim() const { return secret_dim_; }
  const std::vector<Item>& items() const { return items_; }

private:
  std::size_t secret_dim_ = 0;
  std::vector<Item> items_;
};

// rho_S = sum_i p_i |X_i><X_i|.
DensityMatrix ensemble_density(const SecretEnsemble& e);

// Share-distribution isometry: secret space into the players' joint space.
class EncodingIsometry {
public:
  EncodingIsometry() = default;
  EncodingIsometry(ComplexMatrix matrix, SubsystemLayout output_layout);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& output_layout() const { return output_layout_; }
  std::size_t secret_dim() const { return matrix_.cols(); }

private:
  ComplexMatrix matrix_;
  SubsystemLayout output_layout_;
};

struct SchemeSpec {
  std::string name;
  SecretEnsemble ensemble_default;
  EncodingIsometry encoding;
  AccessStructure gamma;

  SchemeSpec() = default;
  SchemeSpec(std::string name, SecretEnsemble ensemble, EncodingIsometry encoding,
             AccessStructure gamma);
};

// The (2,3) qutrit scheme: codewords over three qutrit players, each
// normalized by 1/sqrt(3), with the 2-of-3 threshold structure and the
// uniform qutrit-basis ensemble.
SchemeSpec cgl23_scheme();

// Polynomial threshold generator: players hold evaluations of a random
// degree-(t-1) polynomial over GF(q) at points 1..n, with the secret at 0.
// Requires n = 2t - 1 and q prime with q >= n.
SchemeSpec threshold_scheme(std::size_t t, std::size_t n, std::size_t q);

// Stinespring dilation: turn an operator-sum (Kraus) map on the secret into
// an isometry by appending one environment player of dimension equal to the
// component count. The appended player joins no minimal authorized set.
EncodingIsometry dilate(const std::vector<ComplexMatrix>& kraus_components,
                        const SubsystemLayout& output_layout);

}  // namespace qss
