#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "evfuse/divergence.hpp"
#include "evfuse/reference_data.hpp"
#include "support/test_util.hpp"

using namespace evfuse;
using Catch::Matchers::WithinAbs;
using testsupport::thrown_code;

TEST_CASE("gjs divergence over probability distributions") {
  SECTION("identical distributions diverge by zero") {
    const ProbabilityDistribution p{0.2, 0.5, 0.3};
    const std::vector<ProbabilityDistribution> ps{p, p, p, p};
    CHECK_THAT(gjs_divergence(ps, WeightVector{0.1, 0.2, 0.3, 0.4}), WithinAbs(0.0, 1e-10));
  }

  SECTION("weighted trio") {
    const std::vector<ProbabilityDistribution> ps{
        {0.7, 0.1, 0.2}, {0.6, 0.1, 0.3}, {0.3, 0.2, 0.5}};
    const double g = gjs_divergence(ps, WeightVector{0.5, 0.4, 0.1});
    CHECK_THAT(g, WithinAbs(0.04277528155904098, 1e-12));
    CHECK_THAT(g, WithinAbs(0.0428, 5e-4));
  }

  SECTION("disjoint pair attains the log2 k bound") {
    const std::vector<ProbabilityDistribution> ps{{1.0, 0.0}, {0.0, 1.0}};
    CHECK_THAT(gjs_divergence(ps, WeightVector{0.5, 0.5}), WithinAbs(1.0, 1e-6));
  }

  SECTION("errors") {
    const std::vector<ProbabilityDistribution> mixed{{0.5, 0.5}, {0.2, 0.3, 0.5}};
    CHECK(thrown_code([&] { gjs_divergence(mixed, WeightVector{0.5, 0.5}); }) ==
          Errc::length_mismatch);
    const std::vector<ProbabilityDistribution> pair{{0.5, 0.5}, {0.4, 0.6}};
    CHECK(thrown_code([&] { gjs_divergence(pair, WeightVector{0.5, 0.4}); }) ==
          Errc::unnormalized_weights);
    CHECK(thrown_code([&] { gjs_divergence(pair, WeightVector{0.5, 0.3, 0.2}); }) ==
          Errc::length_mismatch);
  }
}

TEST_CASE("gbjs divergence worked examples") {
  SECTION("identical BBAs, equal weights: exactly zero") {
    const auto ex = refdata::example_identical();
    CHECK_THAT(gbjs_equal_weights(refdata::example_bbas(ex)), WithinAbs(0.0, 1e-10));
  }

  SECTION("weighted trio of singleton BBAs") {
    const auto ex = refdata::example_weighted();
    const auto ms = refdata::example_bbas(ex);
    const WeightVector w(ex.weights);
    const double g = gbjs_divergence(ms, w);
    CHECK_THAT(g, WithinAbs(0.04277528155904098, 1e-12));
    CHECK_THAT(g, WithinAbs(ex.published_value, 5e-4));

    SECTION("invariant under joint permutations of (BBA, weight) pairs") {
      std::vector<std::size_t> order{0, 1, 2};
      do {
        std::vector<MassFunction> pm;
        std::vector<double> pw;
        for (auto i : order) {
          pm.push_back(ms[i]);
          pw.push_back(ex.weights[i]);
        }
        CHECK_THAT(gbjs_divergence(pm, WeightVector(pw)), WithinAbs(g, 1e-12));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  SECTION("conflict triples with compound focal sets") {
    const auto quad = refdata::conflict_quadruple();
    const std::vector<MassFunction> t123{quad[0], quad[1], quad[2]};
    const std::vector<MassFunction> t124{quad[0], quad[1], quad[3]};
    const std::vector<MassFunction> t234{quad[1], quad[2], quad[3]};

    const double g123 = gbjs_equal_weights(t123);
    const double g124 = gbjs_equal_weights(t124);
    const double g234 = gbjs_equal_weights(t234);

    CHECK_THAT(g123, WithinAbs(0.018777582386933778, 1e-12));
    CHECK_THAT(g124, WithinAbs(0.814820162161345, 1e-12));
    CHECK_THAT(g234, WithinAbs(0.7616598410853038, 1e-12));

    CHECK_THAT(g123, WithinAbs(0.0188, 5e-4));
    CHECK_THAT(g124, WithinAbs(0.8148, 5e-4));
    CHECK_THAT(g234, WithinAbs(0.7617, 5e-4));

    CHECK_THAT(std::sqrt(g123), WithinAbs(0.1370, 5e-4));
    CHECK_THAT(std::sqrt(g124), WithinAbs(0.9027, 5e-4));
    CHECK_THAT(std::sqrt(g234), WithinAbs(0.8727, 5e-4));

    // square roots observe the triangle inequality on this instance
    CHECK(std::sqrt(g124) <= std::sqrt(g123) + std::sqrt(g234));
  }
}

TEST_CASE("gbjs equal weights is the uniform special case") {
  const auto quad = refdata::conflict_quadruple();
  const std::vector<MassFunction> ms{quad[0], quad[1], quad[2]};
  CHECK_THAT(gbjs_equal_weights(ms),
             WithinAbs(gbjs_divergence(ms, WeightVector::uniform(3)), 0.0));

  SECTION("single BBA diverges by zero (log2 1 bound)") {
    CHECK_THAT(gbjs_equal_weights(std::vector<MassFunction>{quad[0]}), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("entropy form agrees with the expanded form") {
  const auto ex = refdata::example_weighted();
  const auto ms = refdata::example_bbas(ex);
  const WeightVector w(ex.weights);
  CHECK_THAT(gbjs_divergence_expanded(ms, w), WithinAbs(gbjs_divergence(ms, w), 1e-9));

  const auto quad = refdata::conflict_quadruple();
  CHECK_THAT(gbjs_divergence_expanded(quad, WeightVector::uniform(4)),
             WithinAbs(gbjs_divergence(quad, WeightVector::uniform(4)), 1e-9));
}

TEST_CASE("singleton-focal gbjs degenerates to gjs") {
  const auto ex = refdata::example_weighted();
  const auto ms = refdata::example_bbas(ex);
  const WeightVector w(ex.weights);

  std::vector<ProbabilityDistribution> ps;
  for (const auto& m : ms) {
    std::vector<double> values;
    for (const auto& label : ex.frame.elements()) values.push_back(m.mass(ex.frame.singleton(label)));
    ps.emplace_back(std::move(values));
  }
  CHECK_THAT(gbjs_divergence(ms, w), WithinAbs(gjs_divergence(ps, w), 1e-12));
}

TEST_CASE("gbjs error paths") {
  const auto quad = refdata::conflict_quadruple();
  CHECK(thrown_code([&] { gbjs_divergence(std::vector<MassFunction>{}, WeightVector{1.0}); }) ==
        Errc::empty_evidence_list);
  CHECK(thrown_code([&] {
          gbjs_divergence(std::vector<MassFunction>{quad[0], quad[1]}, WeightVector{0.9, 0.2});
        }) == Errc::unnormalized_weights);
  const auto other = make_mass_function(Frame{"X", "Y"}, {{{"X"}, 1.0}});
  CHECK(thrown_code([&] {
          gbjs_divergence(std::vector<MassFunction>{quad[0], other}, WeightVector{0.5, 0.5});
        }) == Errc::frame_mismatch);
  CHECK(thrown_code([] { WeightVector w{-0.5, 1.5}; }) == Errc::negative_weight);
}
