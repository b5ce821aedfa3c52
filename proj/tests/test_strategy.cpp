#include <doctest.h>

#include <cmath>

#include "qpg/strategy.hpp"

using namespace qpg;

TEST_CASE("canonical operators") {
  const SingleQubitOp u0 = canonical_u(0);
  CHECK(std::abs(u0.m00 - cx{1, 0}) < 1e-15);
  CHECK(std::abs(u0.m11 - cx{1, 0}) < 1e-15);
  CHECK(std::abs(u0.m01) < 1e-15);

  const SingleQubitOp u1 = canonical_u(1);
  CHECK(std::abs(u1.m00 - cx{0, 1}) < 1e-15);
  CHECK(std::abs(u1.m11 - cx{0, -1}) < 1e-15);

  // u(1)^2 = -I, the identity up to a global phase.
  const cx sq00 = u1.m00 * u1.m00;
  const cx sq11 = u1.m11 * u1.m11;
  CHECK(std::abs(sq00 - cx{-1, 0}) < 1e-15);
  CHECK(std::abs(sq11 - cx{-1, 0}) < 1e-15);

  CHECK_THROWS_AS(canonical_u(2), std::invalid_argument);
}

TEST_CASE("paper mixture shape") {
  SUBCASE("full scheme, two players") {
    const QubitLayout layout = build_layout(EntanglementScheme::Full, 2);
    const auto profile = paper_mixture(layout);
    REQUIRE(profile.size() == 2);
    for (const MixedStrategy& mixed : profile) {
      REQUIRE(mixed.support.size() == 2);
      CHECK(mixed.probabilities[0] == doctest::Approx(0.5));
      CHECK(mixed.probabilities[1] == doctest::Approx(0.5));
      CHECK(mixed.support[0].ops.size() == 1);
      mixed.validate(1);
    }
  }

  SUBCASE("all-pairs lifts the mixture to every owned qubit") {
    const QubitLayout layout = build_layout(EntanglementScheme::AllPairs, 3);
    const auto profile = paper_mixture(layout);
    for (const MixedStrategy& mixed : profile) {
      REQUIRE(mixed.support.size() == 2);
      CHECK(mixed.support[0].ops.size() == 2);
      // Branch 0 is all u(0), branch 1 all u(1).
      for (const SingleQubitOp& op : mixed.support[0].ops)
        CHECK(std::abs(op.m00 - cx{1, 0}) < 1e-15);
      for (const SingleQubitOp& op : mixed.support[1].ops)
        CHECK(std::abs(op.m00 - cx{0, 1}) < 1e-15);
      mixed.validate(2);
    }
  }
}

TEST_CASE("mixture validation") {
  MixedStrategy mixed;
  CHECK_THROWS_AS(mixed.validate(1), std::invalid_argument);

  PureStrategy s;
  s.ops.push_back(canonical_u(0));
  mixed.support.push_back(s);
  mixed.probabilities.push_back(0.7);
  CHECK_THROWS_AS(mixed.validate(1), std::invalid_argument);  // weights not 1

  mixed.probabilities[0] = 1.0;
  CHECK_NOTHROW(mixed.validate(1));
  CHECK_THROWS_AS(mixed.validate(2), std::invalid_argument);  // wrong op count
}

TEST_CASE("sampling") {
  const QubitLayout layout = build_layout(EntanglementScheme::Full, 2);
  const auto profile = paper_mixture(layout);

  SUBCASE("single-element support always returns that element") {
    MixedStrategy single = MixedStrategy::pure(profile[0].support[0]);
    RngStream rng(7, 0);
    for (int i = 0; i < 100; ++i) CHECK(sample(single, rng).ops.size() == 1);
  }

  SUBCASE("empirical frequency of the u(0) branch within 3 sigma of one half") {
    RngStream rng(1234, 0);
    const int draws = 100000;
    int zeros = 0;
    for (int i = 0; i < draws; ++i) {
      const PureStrategy s = sample(profile[0], rng);
      if (std::abs(s.ops[0].m00 - cx{1, 0}) < 1e-12) ++zeros;
    }
    const double sigma = std::sqrt(0.25 * draws);
    CHECK(std::abs(zeros - draws / 2.0) < 3 * sigma);
  }

  SUBCASE("identical seeds give identical draw sequences") {
    RngStream a(99, 3), b(99, 3);
    for (int i = 0; i < 1000; ++i)
      CHECK(a.sample_index({0.5, 0.5}) == b.sample_index({0.5, 0.5}));
    // Different stream ids diverge.
    RngStream c(99, 4);
    int diff = 0;
    RngStream a2(99, 3);
    for (int i = 0; i < 1000; ++i)
      if (a2.sample_index({0.5, 0.5}) != c.sample_index({0.5, 0.5})) ++diff;
    CHECK(diff > 0);
  }
}
