#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qsslab/verifier.hpp"
#include "support.hpp"

using namespace qss;
using qss::testing::kLog2Three;

TEST_CASE("cgl23 satisfies the entropic definition") {
  const auto scheme = cgl23_scheme();
  const auto report = verify_definition1(scheme, scheme.ensemble_default);

  CHECK(report.i_rs_bits == doctest::Approx(2.0 * kLog2Three).epsilon(1e-9));
  CHECK(report.definition1_verdict);
  REQUIRE(report.definition1.size() == 7);  // all nonempty subsets of 3 players

  for (const auto& rec : report.definition1) {
    if (rec.authorized) {
      CHECK(rec.mutual_information_bits == doctest::Approx(2.0 * kLog2Three).epsilon(1e-9));
    } else {
      CHECK(rec.subset.size() == 1);
      CHECK(std::abs(rec.mutual_information_bits) <= 1e-9);
    }
    CHECK(rec.verdict == rec.coherent_verdict);  // the two criteria agree
  }
}

TEST_CASE("definition-1 records are ordered by size then lexicographically") {
  const auto scheme = cgl23_scheme();
  const auto report = verify_definition1(scheme, scheme.ensemble_default);
  const std::vector<std::vector<std::string>> expected = {
      {"P1"}, {"P2"}, {"P3"}, {"P1", "P2"}, {"P1", "P3"}, {"P2", "P3"}, {"P1", "P2", "P3"}};
  REQUIRE(report.definition1.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(report.definition1[i].subset == expected[i]);
}

TEST_CASE("fast mode agrees with the exhaustive verdict") {
  const auto scheme = threshold_scheme(2, 3, 3);
  const auto full = verify_definition1(scheme, scheme.ensemble_default);
  const auto fast = verify_definition1(scheme, scheme.ensemble_default, kVerifierTol, true);
  CHECK(full.definition1_verdict == fast.definition1_verdict);
  // Fast mode covers minimal authorized (3) + maximal unauthorized (3).
  CHECK(fast.definition1.size() == 6);
  for (const auto& rec : fast.definition1) CHECK(rec.subset.size() <= 2);
}

TEST_CASE("single-player identity scheme verifies trivially") {
  const auto scheme = testing::identity_scheme(2);
  const auto report = verify_definition1(scheme, scheme.ensemble_default);
  CHECK(report.definition1_verdict);
  REQUIRE(report.definition1.size() == 1);
  CHECK(report.definition1.front().authorized);
}

TEST_CASE("coherent information equals the secret entropy on authorized sets") {
  for (const auto& scheme : {cgl23_scheme(), threshold_scheme(2, 3, 3)}) {
    const auto report = verify_definition1(scheme, scheme.ensemble_default);
    for (const auto& rec : report.definition1)
      if (rec.authorized)
        CHECK(rec.coherent_information_bits ==
              doctest::Approx(report.secret_entropy_bits).epsilon(1e-8));
  }
}

TEST_CASE("coexistence audit passes on built-ins") {
  for (const auto& scheme : {cgl23_scheme(), threshold_scheme(2, 3, 3)}) {
    CHECK(check_coexistence(scheme, scheme.ensemble_default).empty());
  }
}

TEST_CASE("coexistence audit passes with random ensembles") {
  const auto scheme = cgl23_scheme();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto ensemble = testing::random_ensemble(3, 4, 500 + seed);
    CHECK(check_coexistence(scheme, ensemble).empty());
  }
}

TEST_CASE("the basis cloner violates coexistence and fails verification") {
  const auto cloner = testing::basis_cloner_scheme();
  const auto violations = check_coexistence(cloner, cloner.ensemble_default);
  REQUIRE(violations.size() == 2);  // both authorized singletons
  for (const auto& v : violations)
    CHECK(v.mutual_information_bits == doctest::Approx(kLog2Three).epsilon(1e-9));

  const auto report = verify_definition1(cloner, cloner.ensemble_default);
  CHECK_FALSE(report.definition1_verdict);  // basis copying is not full recovery
  for (const auto& rec : report.definition1) {
    if (rec.authorized && rec.subset.size() == 1) CHECK_FALSE(rec.verdict);
    // The mutual-information and coherent-information criteria agree even
    // on failing schemes.
    CHECK(rec.verdict == rec.coherent_verdict);
  }
}

TEST_CASE("theorem-6 bounds are tight on cgl23 singleton pairs") {
  const auto scheme = cgl23_scheme();
  const auto records = check_theorem6(scheme, scheme.ensemble_default);
  REQUIRE(records.size() == 6);
  for (const auto& rec : records) {
    CHECK(rec.verdict);
    CHECK(rec.s_b_bits == doctest::Approx(rec.s_secret_bits).epsilon(1e-9));  // tight
    CHECK(rec.s_a_bits >= rec.s_secret_bits - 1e-9);
    CHECK(rec.identity_residual_bits <= 1e-9);
  }
}

TEST_CASE("theorem-6 records are vacuous for a dictator structure") {
  auto scheme = testing::identity_scheme(2);
  CHECK(check_theorem6(scheme, scheme.ensemble_default).empty());
}

TEST_CASE("rates of cgl23 with the maximally mixed secret") {
  const auto scheme = cgl23_scheme();
  const auto r = rates(scheme, scheme.ensemble_default);
  REQUIRE(r.defined);
  CHECK(r.r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.r_bar == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.max_share_entropy_bits == doctest::Approx(kLog2Three).epsilon(1e-9));
  CHECK(r.max_minus_secret_bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("rates of cgl23 with the |0>/|+> ensemble") {
  const auto scheme = cgl23_scheme();
  StateVector zero(3), plus(3);
  zero[0] = 1.0;
  plus[0] = 1.0 / std::sqrt(2.0);
  plus[1] = 1.0 / std::sqrt(2.0);
  const SecretEnsemble mixed(3, {{0.5, zero}, {0.5, plus}});
  const auto r = rates(scheme, mixed);
  REQUIRE(r.defined);
  // Frozen oracle: S(S) = 0.6008760366928562 over shares at log2(3) each.
  CHECK(r.secret_entropy_bits == doctest::Approx(0.6008760366928562).epsilon(1e-9));
  CHECK(r.max_share_entropy_bits == doctest::Approx(kLog2Three).epsilon(1e-9));
  CHECK(r.r == doctest::Approx(0.37911056975761775).epsilon(1e-8));
}

TEST_CASE("rates are undefined for a pure product scheme") {
  auto scheme = testing::identity_scheme(2);
  StateVector zero(2);
  zero[0] = 1.0;
  const SecretEnsemble pure(2, {{1.0, zero}});
  const auto r = rates(scheme, pure);
  CHECK_FALSE(r.defined);
}

TEST_CASE("single-player identity scheme with mixed secret has rate 1") {
  const auto scheme = testing::identity_scheme(2);
  const auto r = rates(scheme, scheme.ensemble_default);
  REQUIRE(r.defined);
  CHECK(r.r == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("r is never above r_bar") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto scheme = cgl23_scheme();
    const auto ensemble = testing::random_ensemble(3, 3, 700 + seed);
    const auto r = rates(scheme, ensemble);
    if (r.defined) CHECK(r.r <= r.r_bar + 1e-12);
  }
}

TEST_CASE("recovery synthesis on cgl23") {
  const auto scheme = cgl23_scheme();
  SUBCASE("authorized pair recovers with near-perfect fidelity") {
    const auto map = synthesize_recovery(scheme, scheme.ensemble_default, {"P1", "P2"});
    CHECK(map.fidelity >= 1.0 - 1e-9);
    CHECK(map.relative_state_defect <= 1e-8);
    CHECK(check_isometry(map.isometry, 1e-8));
    CHECK(map.isometry.rows() == 9);
    CHECK(map.isometry.cols() == 9);
  }
  SUBCASE("full coalition recovers too") {
    const auto map = synthesize_recovery(scheme, scheme.ensemble_default, {"P1", "P2", "P3"});
    CHECK(map.fidelity >= 1.0 - 1e-9);
    CHECK(check_isometry(map.isometry, 1e-8));
  }
  SUBCASE("unauthorized singleton is rejected with the leaking complement named") {
    try {
      synthesize_recovery(scheme, scheme.ensemble_default, {"P1"});
      FAIL("expected recovery_error");
    } catch (const recovery_error& e) {
      const std::string what = e.what();
      CHECK(what.find("P2") != std::string::npos);
      CHECK(what.find("P3") != std::string::npos);
    }
  }
}

TEST_CASE("recovery on the identity scheme is the identity up to phase") {
  const auto scheme = testing::identity_scheme(2);
  const auto map = synthesize_recovery(scheme, scheme.ensemble_default, {"P1"});
  CHECK(map.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(map.isometry.rows() == 2);
  REQUIRE(map.isometry.cols() == 2);
  // Columns match the identity up to a global phase.
  const complexd phase = map.isometry(0, 0);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
  CHECK(std::abs(map.isometry(1, 1) - phase) < 1e-9);
  CHECK(std::abs(map.isometry(0, 1)) < 1e-9);
  CHECK(std::abs(map.isometry(1, 0)) < 1e-9);
}

TEST_CASE("recovery for a cloner-authorized set hits the coexistence wall") {
  const auto cloner = testing::basis_cloner_scheme();
  CHECK_THROWS_AS(synthesize_recovery(cloner, cloner.ensemble_default, {"P1"}), recovery_error);
}

TEST_CASE("recovery across threshold(2,3,3) authorized sets") {
  const auto scheme = threshold_scheme(2, 3, 3);
  for (const auto& subset :
       std::vector<std::vector<std::string>>{{"P1", "P2"}, {"P1", "P3"}, {"P2", "P3"}}) {
    const auto map = synthesize_recovery(scheme, scheme.ensemble_default, subset);
    CHECK(map.fidelity >= 1.0 - 1e-9);
  }
}

TEST_CASE("full verification composes all sections") {
  const auto scheme = cgl23_scheme();
  const auto report = full_verification(scheme, scheme.ensemble_default);
  CHECK(report.overall);
  CHECK(report.definition1_verdict);
  CHECK(report.coexistence_violations.empty());
  CHECK(report.theorem6_verdict);
  CHECK(report.rates.defined);
}
