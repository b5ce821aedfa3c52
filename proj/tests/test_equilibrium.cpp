#include <doctest.h>

#include <numbers>

#include "qpg/equilibrium.hpp"

using namespace qpg;
using std::numbers::pi;

TEST_CASE("closed_form_payoff covered combinations") {
  CHECK(closed_form_payoff(EntanglementScheme::Full, Interpretation::Direct, 3, 2.0) ==
        doctest::Approx(1.5));
  CHECK(closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::Partial, 5, 2.0) ==
        doctest::Approx(1.5));
  // (1+3a)/4 and (1+7a)/8 at n=3,4.
  for (double a : {1.25, 2.0, 2.5}) {
    CHECK(closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::AllOrNone, 3, a) ==
          doctest::Approx((1 + 3 * a) / 4).epsilon(1e-14));
  }
  CHECK(closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::AllOrNone, 4, 2.0) ==
        doctest::Approx((1 + 7 * 2.0) / 8).epsilon(1e-14));
  CHECK(closed_form_payoff(EntanglementScheme::NeighborRing, Interpretation::AllOrNone, 7, 2.0) ==
        doctest::Approx(1.75));
  CHECK(closed_form_payoff(EntanglementScheme::NeighborRing, Interpretation::Partial, 6, 3.0) ==
        doctest::Approx(2.0));

  SUBCASE("payoff approaches a for large n") {
    const double a = 2.0;
    double prev = 0.0;
    for (int n = 3; n <= 20; ++n) {
      const double p =
          closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::AllOrNone, n, a);
      CHECK(p > prev);
      prev = p;
    }
    CHECK(std::abs(prev - a) < 1e-4);
  }

  SUBCASE("ring equals all-pairs at n=3 for every a") {
    for (double a : {1.1, 1.7, 2.3, 2.9}) {
      CHECK(closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::AllOrNone, 3, a) ==
            doctest::Approx(
                closed_form_payoff(EntanglementScheme::NeighborRing, Interpretation::AllOrNone, 3, a))
                .epsilon(1e-14));
    }
  }

  SUBCASE("uncovered combinations") {
    CHECK_THROWS_AS(
        closed_form_payoff(EntanglementScheme::AllPairs, Interpretation::Majority, 4, 2.0),
        no_closed_form_error);
    CHECK_THROWS_AS(closed_form_payoff(EntanglementScheme::Full, Interpretation::Direct, 3, 3.5),
                    std::invalid_argument);
  }
}

TEST_CASE("engine agrees with closed forms on the paper mixture") {
  struct Config {
    EntanglementScheme scheme;
    Interpretation interp;
  };
  for (const Config& c : {Config{EntanglementScheme::Full, Interpretation::Direct},
                          Config{EntanglementScheme::AllPairs, Interpretation::Partial},
                          Config{EntanglementScheme::AllPairs, Interpretation::AllOrNone},
                          Config{EntanglementScheme::NeighborRing, Interpretation::Partial},
                          Config{EntanglementScheme::NeighborRing, Interpretation::AllOrNone}}) {
    const int n_lo = c.scheme == EntanglementScheme::Full ? 2 : 3;
    for (int n = n_lo; n <= 6; ++n) {
      for (double a : {1.25, 2.0, n - 0.25}) {
        if (!(a > 1.0 && a < n)) continue;
        const GameSpec spec = GameSpec::uniform(n, a, c.scheme, c.interp);
        const QubitLayout layout = build_layout(c.scheme, n);
        const double expect = closed_form_payoff(c.scheme, c.interp, n, a);
        const PayoffReport report =
            expected_payoffs(paper_mixture(layout), spec, layout, SimMethod::exact());
        for (double v : report.expected)
          CHECK(std::abs(v - expect) < 1e-10);
      }
    }
  }
}

TEST_CASE("deviation independence on small configurations") {
  SearchConfig quick;
  quick.grid_points_per_angle = 5;
  quick.random_samples = 40;
  quick.seed = 3;
  quick.combo_cap = 300;

  SUBCASE("full n=3") {
    const GameSpec spec = GameSpec::uniform(3, 2.0, EntanglementScheme::Full,
                                            Interpretation::Direct);
    const QubitLayout layout = build_layout(EntanglementScheme::Full, 3);
    const DeviationReport report = verify_deviation_independence(spec, layout, 0, quick);
    CHECK(report.baseline == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(report.max_abs_deviation < 1e-9);
  }

  SUBCASE("all-pairs all-or-none n=3, independent per-qubit operators") {
    const GameSpec spec = GameSpec::uniform(3, 2.0, EntanglementScheme::AllPairs,
                                            Interpretation::AllOrNone);
    const QubitLayout layout = build_layout(EntanglementScheme::AllPairs, 3);
    const DeviationReport report = verify_deviation_independence(spec, layout, 1, quick);
    CHECK(report.baseline == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(report.max_abs_deviation < 1e-9);
  }

  SUBCASE("deviator playing the mixture itself gains exactly zero") {
    const GameSpec spec = GameSpec::uniform(3, 2.0, EntanglementScheme::Full,
                                            Interpretation::Direct);
    const QubitLayout layout = build_layout(EntanglementScheme::Full, 3);
    const double gap = best_response_gap(spec, layout, paper_mixture(layout), 0, quick);
    CHECK(gap < 1e-9);
  }
}

TEST_CASE("best_response_gap on classical profiles") {
  const GameSpec spec = GameSpec::uniform(3, 2.0, EntanglementScheme::Full,
                                          Interpretation::Direct);
  const QubitLayout layout = build_layout(EntanglementScheme::Full, 3);
  SearchConfig config;
  config.grid_points_per_angle = 9;
  config.random_samples = 100;
  config.seed = 5;

  SUBCASE("all-defect is exploitable under entanglement") {
    // Classically all-defect is a Nash equilibrium, but with the entangler in
    // place a deviator playing u(1) = diag(i,-i) flips every other player to
    // cooperation while defecting itself: payoff a(n-1)/n + 1 against the
    // baseline 1, so the gap is a(n-1)/n = 4/3 here.
    std::vector<MixedStrategy> defect;
    for (int k = 0; k < 3; ++k) {
      PureStrategy s;
      s.ops = {build_operator(pi, 0, pi / 2)};
      defect.push_back(MixedStrategy::pure(std::move(s)));
    }
    const double gap = best_response_gap(spec, layout, defect, 0, config);
    CHECK(gap == doctest::Approx(4.0 / 3).epsilon(1e-6));
  }

  SUBCASE("all-cooperate has defection temptation 1 - a/n") {
    std::vector<MixedStrategy> coop;
    for (int k = 0; k < 3; ++k) {
      PureStrategy s;
      s.ops = {canonical_u(0)};
      coop.push_back(MixedStrategy::pure(std::move(s)));
    }
    const double gap = best_response_gap(spec, layout, coop, 0, config);
    CHECK(gap >= 1.0 - 2.0 / 3.0 - 1e-6);
  }
}

TEST_CASE("ring payoffs do not depend on the player ordering") {
  // Relabeling players around the ring must not change the mixture payoff;
  // with homogeneous players this reduces to every player seeing the same
  // expected payoff.
  for (int n : {3, 4, 5}) {
    const GameSpec spec = GameSpec::uniform(n, 2.0, EntanglementScheme::NeighborRing,
                                            Interpretation::AllOrNone);
    const QubitLayout layout = build_layout(EntanglementScheme::NeighborRing, n);
    const PayoffReport report =
        expected_payoffs(paper_mixture(layout), spec, layout, SimMethod::exact());
    for (double v : report.expected)
      CHECK(v == doctest::Approx(report.expected[0]).epsilon(1e-12));
  }
}
