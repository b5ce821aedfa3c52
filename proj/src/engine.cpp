#include "qpg/engine.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qpg {

namespace {

constexpr double kProbPrune = 1e-30;  // squared amplitude prune threshold

void check_profile(const std::vector<PureStrategy>& profile, const QubitLayout& layout) {
  if (static_cast<int>(profile.size()) != layout.n)
    throw std::invalid_argument("run_pure: profile size must equal player count");
  for (int k = 0; k < layout.n; ++k)
    if (profile[k].ops.size() != layout.ownership[k].size())
      throw std::invalid_argument("run_pure: operator count does not match ownership");
}

OutcomeDistribution run_register(const std::vector<PureStrategy>& profile,
                                 const QubitLayout& layout, const EngineCaps& caps) {
  const std::size_t dim = std::size_t{1} << layout.total_qubits;
  if (dim > caps.max_amplitudes)
    throw capacity_error("run_pure: register of " + std::to_string(layout.total_qubits) +
                         " qubits exceeds the amplitude cap of " +
                         std::to_string(caps.max_amplitudes));

  StateVector state = StateVector::zero(layout.total_qubits);
  if (layout.scheme == EntanglementScheme::Full)
    state = apply_full_entangler(state, Direction::Forward);
  else
    state = apply_pair_entanglers(state, layout.pairs, Direction::Forward);

  for (int k = 0; k < layout.n; ++k)
    for (std::size_t slot = 0; slot < profile[k].ops.size(); ++slot)
      state = apply_local(state, profile[k].ops[slot], layout.ownership[k][slot]);

  if (layout.scheme == EntanglementScheme::Full)
    state = apply_full_entangler(state, Direction::Adjoint);
  else
    state = apply_pair_entanglers(state, layout.pairs, Direction::Adjoint);

  return measurement_distribution(state);
}

// Each pair evolves independently; the joint distribution is the product of
// the per-pair marginals. Enumeration prunes zero-probability branches.
OutcomeDistribution run_factorized(const std::vector<PureStrategy>& profile,
                                   const QubitLayout& layout) {
  struct PairOutcome {
    int bits;  // two-bit value (first qubit is the high bit)
    double prob;
  };
  std::vector<std::vector<PairOutcome>> per_pair;
  per_pair.reserve(layout.pairs.size());
  for (const auto& [q0, q1] : layout.pairs) {
    const SingleQubitOp& op_a = profile[layout.owner_of[q0]].ops[layout.slot_of[q0]];
    const SingleQubitOp& op_b = profile[layout.owner_of[q1]].ops[layout.slot_of[q1]];
    const std::array<cx, 4> v = pair_final_state(op_a, op_b);
    std::vector<PairOutcome> outcomes;
    for (int i = 0; i < 4; ++i) {
      const double p = std::norm(v[i]);
      if (p > kProbPrune) outcomes.push_back({i, p});
    }
    per_pair.push_back(std::move(outcomes));
  }

  OutcomeDistribution dist;
  std::string bits(static_cast<std::size_t>(layout.total_qubits), '0');
  auto recurse = [&](auto&& self, std::size_t pair_idx, double prob) -> void {
    if (pair_idx == per_pair.size()) {
      dist[bits] += prob;
      return;
    }
    const auto& [q0, q1] = layout.pairs[pair_idx];
    for (const auto& outcome : per_pair[pair_idx]) {
      bits[q0] = (outcome.bits & 2) ? '1' : '0';
      bits[q1] = (outcome.bits & 1) ? '1' : '0';
      self(self, pair_idx + 1, prob * outcome.prob);
    }
  };
  recurse(recurse, 0, 1.0);
  return dist;
}

}  // namespace

std::array<cx, 4> pair_final_state(const SingleQubitOp& op_a, const SingleQubitOp& op_b) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // (A tensor B) applied to (1,0,0,i)/sqrt(2).
  const cx c0{inv_sqrt2, 0.0};
  const cx c3{0.0, inv_sqrt2};
  std::array<cx, 4> v{
      op_a.m00 * op_b.m00 * c0 + op_a.m01 * op_b.m01 * c3,
      op_a.m00 * op_b.m10 * c0 + op_a.m01 * op_b.m11 * c3,
      op_a.m10 * op_b.m00 * c0 + op_a.m11 * op_b.m01 * c3,
      op_a.m10 * op_b.m10 * c0 + op_a.m11 * op_b.m11 * c3,
  };
  // J_2^dagger = (I - i X tensor X)/sqrt(2); X tensor X swaps indices 0<->3, 1<->2.
  const cx mi{0.0, -1.0};
  return {inv_sqrt2 * (v[0] + mi * v[3]), inv_sqrt2 * (v[1] + mi * v[2]),
          inv_sqrt2 * (v[2] + mi * v[1]), inv_sqrt2 * (v[3] + mi * v[0])};
}

OutcomeDistribution run_pure(const std::vector<PureStrategy>& profile, const GameSpec& spec,
                             const QubitLayout& layout, const EngineCaps& caps, SimPath path) {
  spec.validate();
  check_profile(profile, layout);

  const bool pair_based = layout.scheme != EntanglementScheme::Full;
  if (path == SimPath::Factorized && !pair_based)
    throw std::invalid_argument("run_pure: factorized path requires a pair-based scheme");
  if (path == SimPath::Auto) path = pair_based ? SimPath::Factorized : SimPath::Register;

  return path == SimPath::Factorized ? run_factorized(profile, layout)
                                     : run_register(profile, layout, caps);
}

PayoffReport expected_payoffs(const std::vector<MixedStrategy>& profile, const GameSpec& spec,
                              const QubitLayout& layout, const SimMethod& method,
                              const EngineCaps& caps) {
  spec.validate();
  if (static_cast<int>(profile.size()) != layout.n)
    throw std::invalid_argument("expected_payoffs: profile size must equal player count");
  for (int k = 0; k < layout.n; ++k) profile[k].validate(layout.owned_count(k));

  PayoffReport report;
  report.method = method.kind;

  if (method.kind == SimMethod::Kind::Exact) {
    std::size_t combos = 1;
    for (const MixedStrategy& mixed : profile) {
      combos *= mixed.support.size();
      if (combos > caps.max_work)
        throw capacity_error(
            "expected_payoffs: support product exceeds the work cap; use Monte Carlo");
    }

    std::vector<double> expected(layout.n, 0.0);
    std::vector<int> idx(layout.n, 0);
    std::size_t work = 0;
    for (std::size_t combo = 0; combo < combos; ++combo) {
      double weight = 1.0;
      std::vector<PureStrategy> pure(layout.n);
      for (int k = 0; k < layout.n; ++k) {
        weight *= profile[k].probabilities[idx[k]];
        pure[k] = profile[k].support[idx[k]];
      }
      if (weight > 0.0) {
        const OutcomeDistribution dist = run_pure(pure, spec, layout, caps);
        work += dist.size();
        if (work > caps.max_work)
          throw capacity_error(
              "expected_payoffs: enumerated outcomes exceed the work cap; use Monte Carlo");
        for (const auto& [bits, p] : dist) {
          const std::vector<double> payoffs = payoff_vector(bits, spec, layout);
          for (int k = 0; k < layout.n; ++k) expected[k] += weight * p * payoffs[k];
        }
      }
      for (int k = layout.n - 1; k >= 0; --k) {
        if (++idx[k] < static_cast<int>(profile[k].support.size())) break;
        idx[k] = 0;
      }
    }
    report.expected = std::move(expected);
    return report;
  }

  // Monte Carlo: sample a pure profile (one substream per player), then a
  // measured outcome. Distributions and payoffs are cached per support combo.
  if (method.samples == 0)
    throw std::invalid_argument("expected_payoffs: Monte Carlo needs samples > 0");

  std::vector<RngStream> player_streams;
  player_streams.reserve(layout.n);
  for (int k = 0; k < layout.n; ++k)
    player_streams.emplace_back(method.seed, static_cast<std::uint64_t>(k));
  RngStream outcome_stream(method.seed, 0x6f7574636f6d65ull);

  struct Cached {
    std::vector<double> cumulative;
    std::vector<std::vector<double>> payoffs;  // per outcome
  };
  std::map<std::vector<int>, Cached> cache;

  std::vector<double> sum(layout.n, 0.0), sum_sq(layout.n, 0.0);
  std::vector<int> idx(layout.n);
  for (std::uint64_t s = 0; s < method.samples; ++s) {
    for (int k = 0; k < layout.n; ++k)
      idx[k] = player_streams[k].sample_index(profile[k].probabilities);

    auto it = cache.find(idx);
    if (it == cache.end()) {
      std::vector<PureStrategy> pure(layout.n);
      for (int k = 0; k < layout.n; ++k) pure[k] = profile[k].support[idx[k]];
      const OutcomeDistribution dist = run_pure(pure, spec, layout, caps);
      Cached entry;
      double acc = 0.0;
      for (const auto& [bits, p] : dist) {
        acc += p;
        entry.cumulative.push_back(acc);
        entry.payoffs.push_back(payoff_vector(bits, spec, layout));
      }
      it = cache.emplace(idx, std::move(entry)).first;
    }

    const Cached& entry = it->second;
    const double u = outcome_stream.uniform(0.0, 1.0);
    std::size_t outcome = 0;
    while (outcome + 1 < entry.cumulative.size() && u >= entry.cumulative[outcome]) ++outcome;
    for (int k = 0; k < layout.n; ++k) {
      const double x = entry.payoffs[outcome][k];
      sum[k] += x;
      sum_sq[k] += x * x;
    }
  }

  const double inv_n = 1.0 / static_cast<double>(method.samples);
  report.samples = method.samples;
  report.seed = method.seed;
  report.expected.resize(layout.n);
  report.std_error.resize(layout.n);
  for (int k = 0; k < layout.n; ++k) {
    report.expected[k] = sum[k] * inv_n;
    double var = 0.0;
    if (method.samples > 1) {
      var = (sum_sq[k] - sum[k] * sum[k] * inv_n) /
            static_cast<double>(method.samples - 1);
      var = std::max(var, 0.0);
    }
    report.std_error[k] = std::sqrt(var * inv_n);
  }
  return report;
}

}  // namespace qpg
