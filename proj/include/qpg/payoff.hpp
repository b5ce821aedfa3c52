#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpg/layout.hpp"

namespace qpg {

/// Mapping from a player's measured owned bits to a contribution amount.
enum class Interpretation { Direct, Partial, AllOrNone, Majority };

std::string to_string(Interpretation interpretation);

/// Linear public-goods game: utility x + y, production g(C) = aC/n.
struct GameSpec {
  int n = 0;
  double a = 0.0;
  std::vector<double> endowments;                        // y_k > 0
  Interpretation interpretation = Interpretation::Direct;
  EntanglementScheme scheme = EntanglementScheme::Full;
  // Pre-planned per-player contribution amounts for the heterogeneous
  // reinterpretation; only valid with AllOrNone.
  std::optional<std::vector<double>> contribution_caps;

  /// Throws std::invalid_argument if any invariant fails.
  void validate() const;

  static GameSpec uniform(int n, double a, EntanglementScheme scheme,
                          Interpretation interpretation);
};

enum class ClassicalRegime {
  NoContributionEfficient,  // a < 1
  SocialDilemma,            // 1 < a < n
  FullContributionEfficient,  // a > n
  Boundary                  // a == 1 or a == n
};

/// Heterogeneous-wealth contribution profile satisfying the voluntary
/// participation constraint (a/n) sum_j c_j >= c_k.
struct ContributionPlan {
  double cutoff = 0.0;                 // C*; infinity-free sentinel: max endowment when narrow
  int m = 0;                           // count of fully contributing players (sorted order)
  std::vector<double> contributions;   // c_k in original player order
  std::vector<int> sorted_order;       // sorted_order[i] = original index of i-th poorest
};

struct VoluntaryCheck {
  bool satisfied = false;
  std::vector<double> margins;  // (a/n)*C - c_k per player
};

/// Contribution of one player given the measured register bits.
double contribution_of(int player, const std::string& bits, const GameSpec& spec,
                       const QubitLayout& layout);

/// P_k = (a/n) * C + (y_k - c_k) for every player.
std::vector<double> payoff_vector(const std::string& bits, const GameSpec& spec,
                                  const QubitLayout& layout);

ClassicalRegime classify_classical(double a, int n);

ContributionPlan plan_heterogeneous(const std::vector<double>& endowments, double a);

VoluntaryCheck check_voluntary(const ContributionPlan& plan, const GameSpec& spec);

}  // namespace qpg
