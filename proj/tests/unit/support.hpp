#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsslab/matrix.hpp"
#include "qsslab/schemes.hpp"

namespace qss::testing {

inline constexpr double kLog2Three = 1.584962500721156;

// Seeded Hermitian matrix with entries of order 1.
inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = dist(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      const complexd v(dist(rng), dist(rng));
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

// Seeded ensemble of pure states with probabilities off the uniform simplex.
inline SecretEnsemble random_ensemble(std::size_t secret_dim, std::size_t items,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  std::vector<double> weights(items);
  double total = 0.0;
  for (auto& w : weights) {
    w = dist(rng);
    total += w;
  }
  std::vector<SecretEnsemble::Item> out;
  for (std::size_t i = 0; i < items; ++i) {
    StateVector psi(secret_dim);
    for (std::size_t k = 0; k < secret_dim; ++k) psi[k] = complexd(dist(rng) - 0.5, dist(rng) - 0.5);
    psi.normalize();
    out.push_back({weights[i] / total, std::move(psi)});
  }
  return SecretEnsemble(secret_dim, std::move(out));
}

// V|s> = |s>|s> over two qutrit players: copies the secret basis, so both
// singletons correlate classically with the reference.
inline SchemeSpec basis_cloner_scheme() {
  ComplexMatrix v(9, 3);
  for (std::size_t s = 0; s < 3; ++s) v(s * 3 + s, s) = 1.0;
  SubsystemLayout players({{"P1", 3}, {"P2", 3}});
  return SchemeSpec("basis-cloner", SecretEnsemble::uniform_basis(3),
                    EncodingIsometry(std::move(v), players),
                    AccessStructure({"P1", "P2"}, {{"P1"}, {"P2"}}));
}

// Single player holding the secret verbatim.
inline SchemeSpec identity_scheme(std::size_t dim) {
  SubsystemLayout players({{"P1", dim}});
  return SchemeSpec("identity", SecretEnsemble::uniform_basis(dim),
                    EncodingIsometry(ComplexMatrix::identity(dim), players),
                    AccessStructure({"P1"}, {{"P1"}}));
}

}  // namespace qss::testing
