#include "qpg/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpg {

std::string to_string(Interpretation interpretation) {
  switch (interpretation) {
    case Interpretation::Direct: return "direct";
    case Interpretation::Partial: return "partial";
    case Interpretation::AllOrNone: return "all_or_none";
    case Interpretation::Majority: return "majority";
  }
  return "?";
}

void GameSpec::validate() const {
  if (n < 2) throw std::invalid_argument("GameSpec: n must be >= 2");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("GameSpec: multiplier a must be positive and finite");
  if (static_cast<int>(endowments.size()) != n)
    throw std::invalid_argument("GameSpec: endowments size must equal n");
  for (double y : endowments)
    if (!(y > 0.0) || !std::isfinite(y))
      throw std::invalid_argument("GameSpec: endowments must be positive and finite");

  const bool pair_based = scheme != EntanglementScheme::Full;
  if (interpretation == Interpretation::Direct && pair_based)
    throw std::invalid_argument("GameSpec: direct interpretation requires the full scheme");
  if (interpretation != Interpretation::Direct && !pair_based)
    throw std::invalid_argument(
        "GameSpec: partial/all-or-none/majority interpretations require a pair-based scheme");

  if (contribution_caps) {
    if (interpretation != Interpretation::AllOrNone)
      throw std::invalid_argument(
          "GameSpec: contribution caps are only supported with all-or-none");
    if (static_cast<int>(contribution_caps->size()) != n)
      throw std::invalid_argument("GameSpec: contribution_caps size must equal n");
    for (int k = 0; k < n; ++k) {
      const double cap = (*contribution_caps)[k];
      if (cap < 0.0 || cap > endowments[k] || !std::isfinite(cap))
        throw std::invalid_argument("GameSpec: caps must satisfy 0 <= cap_k <= y_k");
    }
  }
}

GameSpec GameSpec::uniform(int n, double a, EntanglementScheme scheme,
                           Interpretation interpretation) {
  GameSpec spec;
  spec.n = n;
  spec.a = a;
  spec.endowments.assign(n, 1.0);
  spec.scheme = scheme;
  spec.interpretation = interpretation;
  spec.validate();
  return spec;
}

double contribution_of(int player, const std::string& bits, const GameSpec& spec,
                       const QubitLayout& layout) {
  if (static_cast<int>(bits.size()) != layout.total_qubits)
    throw std::invalid_argument("contribution_of: bitstring length mismatch");
  if (player < 0 || player >= spec.n)
    throw std::invalid_argument("contribution_of: player index out of range");

  const auto& owned = layout.ownership[player];
  int zeros = 0;
  for (int q : owned)
    if (bits[q] == '0') ++zeros;

  const double y = spec.endowments[player];
  switch (spec.interpretation) {
    case Interpretation::Direct:
      return bits[owned.front()] == '0' ? y : 0.0;
    case Interpretation::Partial:
      return y * static_cast<double>(zeros) / static_cast<double>(owned.size());
    case Interpretation::AllOrNone: {
      const double amount = spec.contribution_caps ? (*spec.contribution_caps)[player] : y;
      return zeros > 0 ? amount : 0.0;
    }
    case Interpretation::Majority:
      return 2 * zeros > static_cast<int>(owned.size()) ? y : 0.0;
  }
  return 0.0;
}

std::vector<double> payoff_vector(const std::string& bits, const GameSpec& spec,
                                  const QubitLayout& layout) {
  std::vector<double> contributions(spec.n);
  double total = 0.0;
  for (int k = 0; k < spec.n; ++k) {
    contributions[k] = contribution_of(k, bits, spec, layout);
    total += contributions[k];
  }
  const double share = spec.a * total / spec.n;
  std::vector<double> payoffs(spec.n);
  for (int k = 0; k < spec.n; ++k)
    payoffs[k] = share + spec.endowments[k] - contributions[k];
  return payoffs;
}

ClassicalRegime classify_classical(double a, int n) {
  if (!(a > 0.0)) throw std::invalid_argument("classify_classical: a must be positive");
  if (n < 2) throw std::invalid_argument("classify_classical: n must be >= 2");
  if (a == 1.0 || a == static_cast<double>(n)) return ClassicalRegime::Boundary;
  if (a < 1.0) return ClassicalRegime::NoContributionEfficient;
  if (a < static_cast<double>(n)) return ClassicalRegime::SocialDilemma;
  return ClassicalRegime::FullContributionEfficient;
}

ContributionPlan plan_heterogeneous(const std::vector<double>& endowments, double a) {
  const int n = static_cast<int>(endowments.size());
  if (n < 2) throw std::invalid_argument("plan_heterogeneous: need at least 2 players");
  for (double y : endowments)
    if (!(y > 0.0)) throw std::invalid_argument("plan_heterogeneous: endowments must be positive");
  if (!(a > 1.0) || !(a < static_cast<double>(n)))
    throw std::invalid_argument("plan_heterogeneous: requires 1 < a < n");

  ContributionPlan plan;
  plan.sorted_order.resize(n);
  std::iota(plan.sorted_order.begin(), plan.sorted_order.end(), 0);
  std::stable_sort(plan.sorted_order.begin(), plan.sorted_order.end(),
                   [&](int i, int j) { return endowments[i] < endowments[j]; });

  const double mean = std::accumulate(endowments.begin(), endowments.end(), 0.0) / n;
  const double y_max = endowments[plan.sorted_order.back()];

  // Narrow wealth: everyone contributes everything.
  if (a * mean >= y_max - 1e-12) {
    plan.cutoff = y_max;
    plan.m = n;
    plan.contributions = endowments;
    return plan;
  }

  // Scan m downward; feasible when the denominator is positive and the m
  // poorest all fit under the cutoff.
  std::ostringstream trail;
  for (int m = n - 1; m >= 1; --m) {
    const double denom = n - a * n + a * m;
    if (denom <= 0.0) {
      trail << "m=" << m << ": nonpositive denominator " << denom << "; ";
      continue;
    }
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += endowments[plan.sorted_order[i]];
    const double cutoff = a * sum / denom;
    bool fits = true;
    for (int i = 0; i < m; ++i)
      if (endowments[plan.sorted_order[i]] > cutoff + 1e-12) fits = false;
    if (!fits) {
      trail << "m=" << m << ": C*=" << cutoff << " below some of the m poorest; ";
      continue;
    }
    plan.cutoff = cutoff;
    plan.m = m;
    plan.contributions.resize(n);
    for (int k = 0; k < n; ++k)
      plan.contributions[k] = std::min(endowments[k], cutoff);
    return plan;
  }
  throw infeasible_plan_error("plan_heterogeneous: no feasible m found (" + trail.str() + ")");
}

VoluntaryCheck check_voluntary(const ContributionPlan& plan, const GameSpec& spec) {
  if (static_cast<int>(plan.contributions.size()) != spec.n)
    throw std::invalid_argument("check_voluntary: plan size mismatch");

  const double total =
      std::accumulate(plan.contributions.begin(), plan.contributions.end(), 0.0);
  const double share = spec.a * total / spec.n;

  VoluntaryCheck result;
  result.satisfied = true;
  result.margins.resize(spec.n);
  for (int k = 0; k < spec.n; ++k) {
    result.margins[k] = share - plan.contributions[k];
    if (result.margins[k] < -1e-9) result.satisfied = false;
  }
  return result;
}

}  // namespace qpg
