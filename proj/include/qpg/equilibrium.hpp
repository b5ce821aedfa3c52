#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qpg/engine.hpp"

namespace qpg {

struct SearchConfig {
  int grid_points_per_angle = 9;
  int random_samples = 200;
  std::uint64_t seed = 0;
  // Cap on enumerated cross-combinations of grid operators across the
  // deviator's owned qubits; beyond it the search falls back to the diagonal
  // grid plus seeded random grid combinations.
  std::size_t combo_cap = 2000;
};

struct DeviationReport {
  int player = 0;
  double baseline = 0.0;
  double max_gain = 0.0;           // largest (deviation payoff - baseline)
  double max_abs_deviation = 0.0;  // largest |deviation payoff - baseline|
  std::vector<std::array<double, 3>> argmax_ops;  // (theta, phi, alpha) per owned qubit
  SearchConfig search;
  std::size_t evaluated = 0;
};

/// Closed-form mixed-strategy equilibrium payoff for the combinations the
/// analysis covers; throws no_closed_form_error otherwise.
double closed_form_payoff(EntanglementScheme scheme, Interpretation interpretation, int n,
                          double a);

/// With all other players on the canonical mixture, sweeps the given
/// player's pure strategies (grid plus random draws, independent per owned
/// qubit) and reports the largest payoff deviation from baseline.
DeviationReport verify_deviation_independence(const GameSpec& spec, const QubitLayout& layout,
                                              int player, const SearchConfig& config,
                                              const EngineCaps& caps = {});

/// Largest payoff improvement the player can find over the given baseline
/// profile, clipped below at zero.
double best_response_gap(const GameSpec& spec, const QubitLayout& layout,
                         const std::vector<MixedStrategy>& profile, int player,
                         const SearchConfig& config, const EngineCaps& caps = {});

}  // namespace qpg
