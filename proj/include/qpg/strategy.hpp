#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpg/layout.hpp"
#include "qpg/qcore.hpp"

namespace qpg {

/// One operator per owned qubit, in ownership order, for a single player.
struct PureStrategy {
  std::vector<SingleQubitOp> ops;
};

/// Finite probability mixture over pure strategies for a single player.
struct MixedStrategy {
  std::vector<PureStrategy> support;
  std::vector<double> probabilities;

  void validate(int owned_count) const;

  static MixedStrategy pure(PureStrategy strategy);
};

/// Seedable per-player RNG substreams. Streams are mt19937_64 generators
/// whose seeds are derived from the master seed with splitmix64, so a run
/// is bit-reproducible for a given (seed, stream id) regardless of how
/// many streams are drawn from.
struct RngStream {
  std::mt19937_64 gen;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  /// Index into a discrete distribution with the given weights (sum 1).
  int sample_index(const std::vector<double>& weights);
  double uniform(double lo, double hi);
};

std::uint64_t splitmix64(std::uint64_t x);

/// u(0) = identity, u(1) = diag(i, -i); the two-point basis of the
/// canonical mixed strategy.
SingleQubitOp canonical_u(int b);

/// Per player: apply u(0) on every owned qubit with probability 1/2,
/// otherwise u(1) on every owned qubit.
std::vector<MixedStrategy> paper_mixture(const QubitLayout& layout);

PureStrategy sample(const MixedStrategy& mixed, RngStream& rng);

}  // namespace qpg
