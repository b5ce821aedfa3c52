#include "qpg/equilibrium.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpg {

namespace {

std::vector<SingleQubitOp> angle_grid(int points) {
  // theta spans [0, pi] inclusive; phi and alpha span [0, 2pi] inclusive so
  // the quarter-turn phases (pi/2 etc.) land exactly on grid nodes.
  std::vector<SingleQubitOp> ops;
  const int g = points;
  if (g < 2) throw std::invalid_argument("angle_grid: need at least 2 points per angle");
  ops.reserve(static_cast<std::size_t>(g) * g * g);
  for (int i = 0; i < g; ++i) {
    const double theta = std::numbers::pi * i / (g - 1);
    for (int j = 0; j < g; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / (g - 1);
      for (int k = 0; k < g; ++k) {
        const double alpha = 2.0 * std::numbers::pi * k / (g - 1);
        ops.push_back(build_operator(theta, phi, alpha));
      }
    }
  }
  return ops;
}

SingleQubitOp random_op(RngStream& rng) {
  return build_operator(rng.uniform(0.0, std::numbers::pi),
                        rng.uniform(0.0, 2.0 * std::numbers::pi),
                        rng.uniform(0.0, 2.0 * std::numbers::pi));
}

/// Deviation candidates for one player: grid cross-combinations when they
/// fit under the cap, otherwise the diagonal grid plus seeded random grid
/// combinations; always topped up with fully random per-qubit draws.
std::vector<PureStrategy> deviation_candidates(int owned, const SearchConfig& config) {
  const std::vector<SingleQubitOp> grid = angle_grid(config.grid_points_per_angle);
  std::vector<PureStrategy> candidates;

  double combos = 1.0;
  for (int q = 0; q < owned; ++q) combos *= static_cast<double>(grid.size());

  if (combos <= static_cast<double>(config.combo_cap)) {
    std::vector<std::size_t> idx(owned, 0);
    const std::size_t total = static_cast<std::size_t>(combos);
    for (std::size_t c = 0; c < total; ++c) {
      PureStrategy s;
      for (int q = 0; q < owned; ++q) s.ops.push_back(grid[idx[q]]);
      candidates.push_back(std::move(s));
      for (int q = owned - 1; q >= 0; --q) {
        if (++idx[q] < grid.size()) break;
        idx[q] = 0;
      }
    }
  } else {
    for (const SingleQubitOp& op : grid) {
      PureStrategy s;
      s.ops.assign(owned, op);
      candidates.push_back(std::move(s));
    }
    RngStream combo_rng(config.seed, 0x67726964ull);
    std::vector<double> uniform_weights(grid.size(), 1.0 / grid.size());
    for (std::size_t c = grid.size(); c < config.combo_cap; ++c) {
      PureStrategy s;
      for (int q = 0; q < owned; ++q)
        s.ops.push_back(grid[combo_rng.sample_index(uniform_weights)]);
      candidates.push_back(std::move(s));
    }
  }

  RngStream random_rng(config.seed, 0x72616e64ull);
  for (int c = 0; c < config.random_samples; ++c) {
    PureStrategy s;
    for (int q = 0; q < owned; ++q) s.ops.push_back(random_op(random_rng));
    candidates.push_back(std::move(s));
  }
  return candidates;
}

double player_payoff(const std::vector<MixedStrategy>& profile, const GameSpec& spec,
                     const QubitLayout& layout, int player, const EngineCaps& caps) {
  return expected_payoffs(profile, spec, layout, SimMethod::exact(), caps).expected[player];
}

}  // namespace

double closed_form_payoff(EntanglementScheme scheme, Interpretation interpretation, int n,
                          double a) {
  if (n < 2) throw std::invalid_argument("closed_form_payoff: n must be >= 2");
  if (!(a > 1.0) || !(a < static_cast<double>(n)))
    throw std::invalid_argument("closed_form_payoff: requires 1 < a < n");

  switch (scheme) {
    case EntanglementScheme::Full:
      if (interpretation == Interpretation::Direct) return (1.0 + a) / 2.0;
      break;
    case EntanglementScheme::AllPairs:
      if (interpretation == Interpretation::Partial) return (1.0 + a) / 2.0;
      if (interpretation == Interpretation::AllOrNone)
        return a - std::ldexp(a - 1.0, -(n - 1));
      break;
    case EntanglementScheme::NeighborRing:
      if (interpretation == Interpretation::Partial) return (1.0 + a) / 2.0;
      if (interpretation == Interpretation::AllOrNone) return (1.0 + 3.0 * a) / 4.0;
      break;
  }
  throw no_closed_form_error("closed_form_payoff: no closed form for " + to_string(scheme) +
                             "/" + to_string(interpretation) +
                             "; evaluate numerically via the engine");
}

DeviationReport verify_deviation_independence(const GameSpec& spec, const QubitLayout& layout,
                                              int player, const SearchConfig& config,
                                              const EngineCaps& caps) {
  if (player < 0 || player >= layout.n)
    throw std::invalid_argument("verify_deviation_independence: player out of range");

  std::vector<MixedStrategy> profile = paper_mixture(layout);
  DeviationReport report;
  report.player = player;
  report.search = config;
  report.baseline = player_payoff(profile, spec, layout, player, caps);

  const int owned = layout.owned_count(player);
  for (const PureStrategy& candidate : deviation_candidates(owned, config)) {
    profile[player] = MixedStrategy::pure(candidate);
    const double payoff = player_payoff(profile, spec, layout, player, caps);
    const double gain = payoff - report.baseline;
    ++report.evaluated;
    if (std::abs(gain) > report.max_abs_deviation) report.max_abs_deviation = std::abs(gain);
    if (report.argmax_ops.empty() || gain > report.max_gain) {
      report.max_gain = gain;
      report.argmax_ops.clear();
      for (const SingleQubitOp& op : candidate.ops)
        report.argmax_ops.push_back({op.theta, op.phi, op.alpha});
    }
  }
  return report;
}

double best_response_gap(const GameSpec& spec, const QubitLayout& layout,
                         const std::vector<MixedStrategy>& profile, int player,
                         const SearchConfig& config, const EngineCaps& caps) {
  if (player < 0 || player >= layout.n)
    throw std::invalid_argument("best_response_gap: player out of range");

  const double baseline = player_payoff(profile, spec, layout, player, caps);
  std::vector<MixedStrategy> deviated = profile;
  double best = 0.0;
  for (const PureStrategy& candidate : deviation_candidates(layout.owned_count(player), config)) {
    deviated[player] = MixedStrategy::pure(candidate);
    best = std::max(best, player_payoff(deviated, spec, layout, player, caps) - baseline);
  }
  return std::max(best, 0.0);
}

}  // namespace qpg
