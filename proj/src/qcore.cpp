#include "qpg/qcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpg {

namespace {

constexpr double kAmpPrune = 1e-15;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double wrap_2pi(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

}  // namespace

StateVector::StateVector(int m) : num_qubits(m) {
  if (m < 1) throw std::invalid_argument("StateVector: num_qubits must be >= 1");
  amplitudes.assign(std::size_t{1} << m, cx{0.0, 0.0});
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const cx& a : amplitudes) s += std::norm(a);
  return s;
}

StateVector StateVector::zero(int m) {
  StateVector v(m);
  v.amplitudes[0] = cx{1.0, 0.0};
  return v;
}

SingleQubitOp build_operator(double theta, double phi, double alpha) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(alpha))
    throw std::invalid_argument("build_operator: non-finite parameter");
  if (theta < 0.0 || theta > std::numbers::pi + 1e-12)
    throw std::invalid_argument("build_operator: theta must lie in [0, pi]");

  SingleQubitOp op;
  op.theta = std::min(theta, std::numbers::pi);
  op.phi = wrap_2pi(phi);
  op.alpha = wrap_2pi(alpha);

  const double c = std::cos(op.theta / 2.0);
  const double s = std::sin(op.theta / 2.0);
  op.m00 = std::polar(c, op.phi);
  op.m01 = std::polar(s, op.alpha);
  op.m10 = -std::polar(s, -op.alpha);
  op.m11 = std::polar(c, -op.phi);
  return op;
}

StateVector apply_local(const StateVector& state, const SingleQubitOp& op, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits)
    throw std::invalid_argument("apply_local: qubit index out of range");

  StateVector out = state;
  const std::size_t stride = std::size_t{1} << (state.num_qubits - 1 - qubit);
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cx a0 = state.amplitudes[i];
      const cx a1 = state.amplitudes[i + stride];
      out.amplitudes[i] = op.m00 * a0 + op.m01 * a1;
      out.amplitudes[i + stride] = op.m10 * a0 + op.m11 * a1;
    }
  }
  return out;
}

StateVector apply_full_entangler(const StateVector& state, Direction direction) {
  const cx unit = direction == Direction::Forward ? cx{0.0, 1.0} : cx{0.0, -1.0};
  const std::size_t mask = state.dim() - 1;

  StateVector out = state;
  for (std::size_t s = 0; s < state.dim(); ++s) {
    out.amplitudes[s] =
        kInvSqrt2 * (state.amplitudes[s] + unit * state.amplitudes[s ^ mask]);
  }
  return out;
}

StateVector apply_pair_entanglers(const StateVector& state,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  Direction direction) {
  std::vector<bool> used(static_cast<std::size_t>(state.num_qubits), false);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= state.num_qubits || b < 0 || b >= state.num_qubits)
      throw std::invalid_argument("apply_pair_entanglers: qubit index out of range");
    if (a == b || used[a] || used[b])
      throw std::invalid_argument("apply_pair_entanglers: pairs must be disjoint");
    used[a] = used[b] = true;
  }

  const cx unit = direction == Direction::Forward ? cx{0.0, 1.0} : cx{0.0, -1.0};
  StateVector out = state;
  for (const auto& [a, b] : pairs) {
    const std::size_t mask = (std::size_t{1} << (state.num_qubits - 1 - a)) |
                             (std::size_t{1} << (state.num_qubits - 1 - b));
    StateVector next = out;
    for (std::size_t s = 0; s < out.dim(); ++s) {
      next.amplitudes[s] = kInvSqrt2 * (out.amplitudes[s] + unit * out.amplitudes[s ^ mask]);
    }
    out = std::move(next);
  }
  return out;
}

std::string index_to_bits(std::size_t s, int m) {
  std::string bits(static_cast<std::size_t>(m), '0');
  for (int q = 0; q < m; ++q) {
    if ((s >> (m - 1 - q)) & 1u) bits[q] = '1';
  }
  return bits;
}

OutcomeDistribution measurement_distribution(const StateVector& state) {
  const double n2 = state.squared_norm();
  if (std::abs(n2 - 1.0) > 1e-9)
    throw invalid_state_error("measurement_distribution: state not normalized");

  OutcomeDistribution dist;
  for (std::size_t s = 0; s < state.dim(); ++s) {
    if (std::abs(state.amplitudes[s]) <= kAmpPrune) continue;
    dist[index_to_bits(s, state.num_qubits)] = std::norm(state.amplitudes[s]);
  }
  return dist;
}

}  // namespace qpg
