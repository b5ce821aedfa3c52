#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qpg/layout.hpp"
#include "qpg/payoff.hpp"
#include "qpg/qcore.hpp"
#include "qpg/strategy.hpp"

namespace qpg {

struct EngineCaps {
  std::size_t max_amplitudes = std::size_t{1} << 22;  // register path
  std::size_t max_work = std::size_t{1} << 24;        // exact enumeration, weighted outcomes
};

/// Which simulation route run_pure takes. Auto picks the factorized path for
/// pair-based schemes and the register path for the full scheme.
enum class SimPath { Auto, Register, Factorized };

struct SimMethod {
  enum class Kind { Exact, MonteCarlo } kind = Kind::Exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static SimMethod exact() { return {Kind::Exact, 0, 0}; }
  static SimMethod monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::MonteCarlo, samples, seed};
  }
};

struct PayoffReport {
  std::vector<double> expected;
  SimMethod::Kind method = SimMethod::Kind::Exact;
  std::uint64_t samples = 0;          // MC only
  std::vector<double> std_error;      // MC only
  std::uint64_t seed = 0;             // MC only
};

/// J_2^dagger (A tensor B) (1,0,0,i)/sqrt(2): the final two-qubit state of
/// one entangled pair after local operations.
std::array<cx, 4> pair_final_state(const SingleQubitOp& op_a, const SingleQubitOp& op_b);

/// Runs the protocol J -> local operators -> J^dagger -> measure on |0...0>
/// for one pure strategy profile and returns the exact outcome distribution.
OutcomeDistribution run_pure(const std::vector<PureStrategy>& profile, const GameSpec& spec,
                             const QubitLayout& layout, const EngineCaps& caps = {},
                             SimPath path = SimPath::Auto);

/// Expected per-player payoffs of a mixed-strategy profile, either by exact
/// enumeration over the support product or by seeded Monte Carlo sampling of
/// the full protocol (strategy draw plus measurement).
PayoffReport expected_payoffs(const std::vector<MixedStrategy>& profile, const GameSpec& spec,
                              const QubitLayout& layout, const SimMethod& method,
                              const EngineCaps& caps = {});

}  // namespace qpg
