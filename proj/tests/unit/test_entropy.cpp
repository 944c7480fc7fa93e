#include <doctest.h>

#include <cmath>

#include "qsslab/entropy.hpp"
#include "qsslab/systems.hpp"
#include "support.hpp"

using namespace qss;
using qss::testing::kLog2Three;

namespace {

DensityMatrix bell_pair() {
  StateVector bell(4);
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  return DensityMatrix(bell.projector(), SubsystemLayout({{"X", 2}, {"Y", 2}}));
}

}  // namespace

TEST_CASE("maximally mixed qubit has one bit of entropy") {
  const DensityMatrix rho(ComplexMatrix::identity(2) * complexd(0.5), SubsystemLayout({{"X", 2}}));
  CHECK(von_neumann_entropy(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed qutrit has log2(3) bits") {
  const DensityMatrix rho(ComplexMatrix::identity(3) * complexd(1.0 / 3.0),
                          SubsystemLayout({{"S", 3}}));
  CHECK(von_neumann_entropy(rho) == doctest::Approx(kLog2Three).epsilon(1e-12));
}

TEST_CASE("entropy of the half |0> half |+> ensemble density") {
  // Eigenvalues of [[3/4,1/4],[1/4,1/4]] are (1 +- 1/sqrt(2))/2; the
  // expected value is frozen from that analytic spectrum.
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.75;
  m(0, 1) = 0.25;
  m(1, 0) = 0.25;
  m(1, 1) = 0.25;
  const DensityMatrix rho(m, SubsystemLayout({{"X", 2}}));
  const double expected = 0.6008760366928562;
  CHECK(von_neumann_entropy(rho) == doctest::Approx(expected).epsilon(1e-10));

  const double lo = (1.0 - 1.0 / std::sqrt(2.0)) / 2.0;
  const double hi = (1.0 + 1.0 / std::sqrt(2.0)) / 2.0;
  CHECK(entropy_from_eigenvalues({lo, hi}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("invariant violation: negative eigenvalue beyond the clamp") {
  CHECK_THROWS_AS(entropy_from_eigenvalues({1.0 + 1e-9, -1e-9}), input_error);
  CHECK(entropy_from_eigenvalues({1.0, -1e-11}) == 0.0);  // clamp window
}

TEST_CASE("Bell pair conditional entropy is -1") {
  CHECK(conditional_entropy(bell_pair(), {"X"}, {"Y"}) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("conditional entropy is additive on product states") {
  const auto rho_x = random_density_matrix(SubsystemLayout({{"X", 2}}), 2, 5);
  const auto rho_y = random_density_matrix(SubsystemLayout({{"Y", 3}}), 3, 6);
  const auto prod = tensor_product(rho_x.matrix(), rho_y.matrix());
  const DensityMatrix rho(prod, SubsystemLayout({{"X", 2}, {"Y", 3}}));
  CHECK(conditional_entropy(rho, {"X"}, {"Y"}) ==
        doctest::Approx(von_neumann_entropy(rho_x)).epsilon(1e-9));
  CHECK(mutual_information(rho, {"X"}, {"Y"}) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("CGL23 global state conditional entropy S(P1|R)") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  const auto rho = reduce(global, {"R", "P1"});
  CHECK(conditional_entropy(rho, {"P1"}, {"R"}) == doctest::Approx(kLog2Three).epsilon(1e-9));
}

TEST_CASE("Bell pair mutual information is 2") {
  CHECK(mutual_information(bell_pair(), {"X"}, {"Y"}) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("CGL23 I(R:{P1,P2}) = 2 log2 3") {
  const auto scheme = cgl23_scheme();
  const auto global = assemble_global(scheme, scheme.ensemble_default);
  const auto rho = reduce(global, {"R", "P1", "P2"});
  CHECK(mutual_information(rho, {"R"}, {"P1", "P2"}) ==
        doctest::Approx(2.0 * kLog2Three).epsilon(1e-9));
}

TEST_CASE("overlapping label sets are rejected") {
  CHECK_THROWS_AS(mutual_information(bell_pair(), {"X"}, {"X"}), input_error);
  CHECK_THROWS_AS(conditional_entropy(bell_pair(), {"X", "Y"}, {"Y"}), input_error);
}

TEST_CASE("coherent information cases") {
  SUBCASE("CGL23 authorized pair reaches S(S)") {
    const auto scheme = cgl23_scheme();
    const auto global = assemble_global(scheme, scheme.ensemble_default);
    const auto rho = reduce(global, {"R", "P1", "P2"});
    CHECK(coherent_information(rho, {"P1", "P2"}, {"R"}) ==
          doctest::Approx(kLog2Three).epsilon(1e-9));
  }
  SUBCASE("product state gives -S(R)") {
    const auto rho_r = random_density_matrix(SubsystemLayout({{"R", 2}}), 2, 17);
    const auto rho_a = random_density_matrix(SubsystemLayout({{"A", 3}}), 3, 18);
    const DensityMatrix rho(tensor_product(rho_r.matrix(), rho_a.matrix()),
                            SubsystemLayout({{"R", 2}, {"A", 3}}));
    CHECK(coherent_information(rho, {"A"}, {"R"}) ==
          doctest::Approx(-von_neumann_entropy(rho_r)).epsilon(1e-8));
  }
  SUBCASE("pure bipartite state gives S(A)") {
    const auto bell = bell_pair();
    CHECK(coherent_information(bell, {"Y"}, {"X"}) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("labels must cover the state") {
    const auto rho = random_density_matrix(SubsystemLayout({{"A", 2}, {"B", 2}, {"C", 2}}), 8, 3);
    CHECK_THROWS_AS(coherent_information(rho, {"A"}, {"B"}), input_error);
  }
}

TEST_CASE("inequality report on a product state has zero subadditivity slack") {
  const auto rho_x = random_density_matrix(SubsystemLayout({{"X", 2}}), 2, 10);
  const auto rho_y = random_density_matrix(SubsystemLayout({{"Y", 2}}), 2, 11);
  const DensityMatrix rho(tensor_product(rho_x.matrix(), rho_y.matrix()),
                          SubsystemLayout({{"X", 2}, {"Y", 2}}));
  const auto report = check_entropy_inequalities(rho, {"X"}, {"Y"});
  REQUIRE(report.verdicts.size() == 2);
  CHECK(report.verdicts[0].name == "subadditivity");
  CHECK(report.verdicts[0].slack == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report.all_hold());
}

TEST_CASE("Bell pair sits at the Araki-Lieb equality point") {
  const auto report = check_entropy_inequalities(bell_pair(), {"X"}, {"Y"});
  CHECK(report.verdicts[1].name == "araki-lieb");
  CHECK(report.verdicts[1].slack == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("sampled tripartite states satisfy all four inequalities") {
  // A trimmed version of the selftest run; the acceptance suite does 1000.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SubsystemLayout layout = (seed % 2) ? SubsystemLayout({{"X", 2}, {"Y", 3}, {"Z", 2}})
                                              : SubsystemLayout({{"X", 2}, {"Y", 2}, {"Z", 2}});
    const auto rho = random_density_matrix(layout, layout.total_dim(), 1000 + seed);
    const auto report = check_entropy_inequalities(rho, {"X"}, {"Y"}, {"Z"});
    REQUIRE(report.verdicts.size() == 4);
    CHECK(report.all_hold());
  }
}

TEST_CASE("entropy bounds and relabeling invariance on sampled states") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const SubsystemLayout layout({{"X", 2}, {"Y", 3}});
    const auto rho = random_density_matrix(layout, 6, 300 + seed);
    const double s = von_neumann_entropy(rho);
    CHECK(s >= 0.0);
    CHECK(s <= std::log2(6.0) + 1e-9);

    // Permuting the tensor factors leaves the spectrum alone.
    ComplexMatrix permuted(6, 6);
    auto flip = [](std::size_t i) { return (i % 3) * 2 + i / 3; };
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) permuted(flip(r), flip(c)) = rho.matrix()(r, c);
    const DensityMatrix swapped(permuted, SubsystemLayout({{"Y", 3}, {"X", 2}}));
    CHECK(von_neumann_entropy(swapped) == doctest::Approx(s).epsilon(1e-9));
  }
}

TEST_CASE("pure bipartite states have matching marginal entropies") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto psi = random_pure_state(12, 600 + seed);
    const SubsystemLayout layout({{"X", 4}, {"Y", 3}});
    const DensityMatrix rho(psi.projector(), layout);
    CHECK(von_neumann_entropy(rho.reduce({"X"})) ==
          doctest::Approx(von_neumann_entropy(rho.reduce({"Y"}))).epsilon(1e-8));
  }
}

TEST_CASE("random density sampler") {
  const SubsystemLayout layout({{"X", 2}, {"Y", 2}});
  SUBCASE("purifying dimension 1 gives a pure state") {
    const auto rho = random_density_matrix(layout, 1, 12345);
    CHECK(von_neumann_entropy(rho) <= 1e-8);
  }
  SUBCASE("full purifier gives positive entropy for every seed tried") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho = random_density_matrix(layout, 4, 9000 + seed);
      CHECK(von_neumann_entropy(rho) > 0.0);
    }
  }
  SUBCASE("same seed is bitwise identical") {
    const auto a = random_density_matrix(layout, 4, 777);
    const auto b = random_density_matrix(layout, 4, 777);
    CHECK(a.matrix().entries() == b.matrix().entries());
  }
  SUBCASE("invariants hold") {
    const auto rho = random_density_matrix(layout, 3, 31);
    CHECK(rho.matrix().hermiticity_defect() <= 1e-12);
    CHECK(std::abs(rho.matrix().trace() - complexd(1.0)) <= 1e-12);
    for (double v : hermitian_eigenvalues(rho.matrix())) CHECK(v >= -1e-10);
  }
}
