#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpg/errors.hpp"

namespace qpg {

using cx = std::complex<double>;

/// Complex amplitudes over the 2^m computational basis states of an
/// m-qubit register. Qubit 0 is the MOST significant bit of the basis
/// index, so the bitstring of index s reads qubit 0 first.
struct StateVector {
  int num_qubits = 0;
  std::vector<cx> amplitudes;

  StateVector() = default;
  explicit StateVector(int m);

  std::size_t dim() const { return amplitudes.size(); }
  double squared_norm() const;

  /// Value of qubit q in basis index s.
  int bit(std::size_t s, int q) const {
    return static_cast<int>((s >> (num_qubits - 1 - q)) & 1u);
  }

  /// |0...0> on m qubits.
  static StateVector zero(int m);
};

/// Single-qubit unitary parameterized by angles (theta, phi, alpha):
///   [[ e^{i phi} cos(theta/2),  e^{i alpha} sin(theta/2) ],
///    [ -e^{-i alpha} sin(theta/2),  e^{-i phi} cos(theta/2) ]]
/// With this phase convention U(0, pi/2, 0) = diag(i, -i), the canonical
/// "defect-leaning" mixture operator.
struct SingleQubitOp {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)
  double alpha = 0.0;  // [0, 2*pi)
  cx m00, m01, m10, m11;
};

enum class Direction { Forward, Adjoint };

/// Probability of each measured bitstring; zero-probability entries omitted.
using OutcomeDistribution = std::map<std::string, double>;

SingleQubitOp build_operator(double theta, double phi, double alpha);

StateVector apply_local(const StateVector& state, const SingleQubitOp& op, int qubit);

/// Full-register entangler J_m = (I + i X^{tensor m}) / sqrt(2), applied
/// structurally: the X^{tensor m} term complements every bit of the basis
/// index. Adjoint flips the sign of the imaginary term.
StateVector apply_full_entangler(const StateVector& state, Direction direction);

/// Independent two-qubit entanglers J_2 on each listed (disjoint) qubit pair.
StateVector apply_pair_entanglers(const StateVector& state,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  Direction direction);

/// Measurement probabilities |psi_s|^2. Requires the state normalized
/// within 1e-9; amplitudes below 1e-15 in magnitude are pruned.
OutcomeDistribution measurement_distribution(const StateVector& state);

/// Bitstring (qubit 0 first) of basis index s on m qubits.
std::string index_to_bits(std::size_t s, int m);

}  // namespace qpg
