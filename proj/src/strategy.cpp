#include "qpg/strategy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpg {

void MixedStrategy::validate(int owned_count) const {
  if (support.empty()) throw std::invalid_argument("MixedStrategy: empty support");
  if (support.size() != probabilities.size())
    throw std::invalid_argument("MixedStrategy: support/probability size mismatch");
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0 || !std::isfinite(p))
      throw std::invalid_argument("MixedStrategy: probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("MixedStrategy: probabilities must sum to 1");
  for (const PureStrategy& s : support)
    if (static_cast<int>(s.ops.size()) != owned_count)
      throw std::invalid_argument("MixedStrategy: operator count does not match ownership");
}

MixedStrategy MixedStrategy::pure(PureStrategy strategy) {
  MixedStrategy mixed;
  mixed.support.push_back(std::move(strategy));
  mixed.probabilities.push_back(1.0);
  return mixed;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : gen(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id + 1))) {}

int RngStream::sample_index(const std::vector<double>& weights) {
  const double u = uniform(0.0, 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

double RngStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

SingleQubitOp canonical_u(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("canonical_u: b must be 0 or 1");
  return b == 0 ? build_operator(0.0, 0.0, 0.0)
                : build_operator(0.0, std::numbers::pi / 2.0, 0.0);
}

std::vector<MixedStrategy> paper_mixture(const QubitLayout& layout) {
  std::vector<MixedStrategy> profile;
  profile.reserve(layout.n);
  for (int k = 0; k < layout.n; ++k) {
    MixedStrategy mixed;
    for (int b = 0; b < 2; ++b) {
      PureStrategy s;
      s.ops.assign(layout.ownership[k].size(), canonical_u(b));
      mixed.support.push_back(std::move(s));
      mixed.probabilities.push_back(0.5);
    }
    profile.push_back(std::move(mixed));
  }
  return profile;
}

PureStrategy sample(const MixedStrategy& mixed, RngStream& rng) {
  if (mixed.support.empty()) throw std::invalid_argument("sample: empty support");
  return mixed.support[rng.sample_index(mixed.probabilities)];
}

}  // namespace qpg
