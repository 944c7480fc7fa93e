#include <doctest.h>

#include <cmath>

#include "qsslab/systems.hpp"
#include "qsslab/tensorlin.hpp"
#include "support.hpp"

using namespace qss;
using qss::testing::kLog2Three;

TEST_CASE("purifying the maximally mixed qubit gives the Bell state") {
  const DensityMatrix rho(ComplexMatrix::identity(2) * complexd(0.5), SubsystemLayout({{"S", 2}}));
  const auto sr = purify(rho);
  const double w = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(sr.vector()[0] - complexd(w)) < 1e-12);  // |00>
  CHECK(std::abs(sr.vector()[3] - complexd(w)) < 1e-12);  // |11>
  CHECK(std::abs(sr.vector()[1]) < 1e-12);
  CHECK(std::abs(sr.vector()[2]) < 1e-12);
}

TEST_CASE("purifying a rank-1 secret keeps the reference in |0>") {
  ComplexMatrix proj(3, 3);
  proj(0, 0) = 1.0;
  const auto sr = purify(DensityMatrix(proj, SubsystemLayout({{"S", 3}})));
  StateVector expected(9);
  expected[0] = 1.0;  // |0>_S |0>_R
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(std::abs(sr.vector()[i] - expected[i]) < 1e-12);
}

TEST_CASE("purifying the maximally mixed qutrit gives sum |i>|i>/sqrt(3)") {
  const DensityMatrix rho(ComplexMatrix::identity(3) * complexd(1.0 / 3.0),
                          SubsystemLayout({{"S", 3}}));
  const auto sr = purify(rho);
  const double w = 1.0 / std::sqrt(3.0);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t r = 0; r < 3; ++r) {
      const complexd expected = (s == r) ? complexd(w) : complexd(0.0);
      CHECK(std::abs(sr.vector()[s * 3 + r] - expected) < 1e-12);
    }
}

TEST_CASE("purification round-trip recovers the input density") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SubsystemLayout layout({{"S", 4}});
    const auto rho = random_density_matrix(layout, 4, 4000 + seed);
    const auto sr = purify(rho);
    const auto back = reduce(sr, {"S"});
    CHECK(back.matrix().max_abs_diff(rho.matrix()) < 1e-10);
  }
}

TEST_CASE("assembled cgl23 global state is the nine-term superposition") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  REQUIRE(global.vector().dim() == 81);
  CHECK(global.layout().labels() == std::vector<std::string>{"R", "P1", "P2", "P3"});

  auto ket = [](int r, int a, int b, int c) { return ((r * 3 + a) * 3 + b) * 3 + c; };
  const std::vector<std::size_t> support = {
      static_cast<std::size_t>(ket(0, 0, 0, 0)), static_cast<std::size_t>(ket(0, 1, 1, 1)),
      static_cast<std::size_t>(ket(0, 2, 2, 2)), static_cast<std::size_t>(ket(1, 0, 1, 2)),
      static_cast<std::size_t>(ket(1, 1, 2, 0)), static_cast<std::size_t>(ket(1, 2, 0, 1)),
      static_cast<std::size_t>(ket(2, 0, 2, 1)), static_cast<std::size_t>(ket(2, 1, 0, 2)),
      static_cast<std::size_t>(ket(2, 2, 1, 0))};
  for (std::size_t i = 0; i < 81; ++i) {
    const bool on = std::find(support.begin(), support.end(), i) != support.end();
    CHECK(std::abs(global.vector()[i] - complexd(on ? 1.0 / 3.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("single-player identity scheme reproduces the purification") {
  const auto scheme = testing::identity_scheme(2);
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  const double w = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(global.vector()[0] - complexd(w)) < 1e-12);
  CHECK(std::abs(global.vector()[3] - complexd(w)) < 1e-12);
}

TEST_CASE("cgl23 with a pure |0> secret encodes the first codeword") {
  const auto scheme = cgl23_scheme();
  StateVector zero(3);
  zero[0] = 1.0;
  const SecretEnsemble pure(3, {{1.0, zero}});
  const auto global = assemble_global(scheme, pure);
  // Reference stays rank-1 in |0>; players hold (|000>+|111>+|222>)/sqrt(3).
  const double w = 1.0 / std::sqrt(3.0);
  auto ket = [](int r, int a, int b, int c) { return ((r * 3 + a) * 3 + b) * 3 + c; };
  CHECK(std::abs(global.vector()[ket(0, 0, 0, 0)] - complexd(w)) < 1e-12);
  CHECK(std::abs(global.vector()[ket(0, 1, 1, 1)] - complexd(w)) < 1e-12);
  CHECK(std::abs(global.vector()[ket(0, 2, 2, 2)] - complexd(w)) < 1e-12);
  double off_support = 0.0;
  for (std::size_t i = 27; i < 81; ++i) off_support += std::abs(global.vector()[i]);
  CHECK(off_support < 1e-12);
}

TEST_CASE("cgl23 reductions match the worked example") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);

  SUBCASE("rho_{R,P1} is the product of maximally mixed qutrits") {
    const auto rho = reduce(global, {"R", "P1"});
    CHECK(rho.matrix().max_abs_diff(ComplexMatrix::identity(9) * complexd(1.0 / 9.0)) < 1e-12);
  }
  SUBCASE("keeping everything gives a rank-1 projector") {
    const auto rho = reduce(global, {"R", "P1", "P2", "P3"});
    CHECK(von_neumann_entropy(rho) <= 1e-9);
  }
  SUBCASE("authorized pair carries 2 log2 3 bits") {
    const auto rho = reduce(global, {"P1", "P2"});
    CHECK(von_neumann_entropy(rho) == doctest::Approx(2.0 * kLog2Three).epsilon(1e-9));
  }
}

TEST_CASE("staged reduction is consistent") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  const auto direct = reduce(global, {"R", "P1"});
  const auto staged = reduce(global, {"R", "P1", "P2"}).reduce({"R", "P1"});
  CHECK(direct.matrix().max_abs_diff(staged.matrix()) < 1e-12);
}

TEST_CASE("pure global states have symmetric bipartition entropies") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  const std::vector<std::vector<std::string>> cuts = {
      {"R"}, {"P1"}, {"R", "P2"}, {"P1", "P3"}, {"R", "P1", "P2"}};
  for (const auto& cut : cuts) {
    std::vector<std::string> other;
    for (const auto& l : global.layout().labels())
      if (std::find(cut.begin(), cut.end(), l) == cut.end()) other.push_back(l);
    CHECK(subset_entropy_pure(global, cut) ==
          doctest::Approx(subset_entropy_pure(global, other)).epsilon(1e-8));
    CHECK(subset_entropy_pure(global, cut) ==
          doctest::Approx(von_neumann_entropy(reduce(global, cut))).epsilon(1e-8));
  }
}

TEST_CASE("reduce rejects unknown labels and empty keeps") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  CHECK_THROWS_AS(reduce(global, {"nope"}), input_error);
  CHECK_THROWS_AS(reduce(global, {}), input_error);
}

TEST_CASE("ensemble dimension mismatch is rejected") {
  const auto scheme = cgl23_scheme();
  CHECK_THROWS_AS(assemble_global(scheme, SecretEnsemble::uniform_basis(2)), input_error);
}

TEST_CASE("global states beyond the dimension cap are refused") {
  // A 150-dimensional identity scheme needs a 150*150 = 22500 dimensional
  // global state, just past the 20000 guard.
  const auto scheme = testing::identity_scheme(150);
  CHECK_THROWS_AS(assemble_global(scheme, scheme.ensemble_default), size_error);
}
