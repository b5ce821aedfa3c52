#include "qpg/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace qpg {

double expected_trials(const CostQuery& query) {
  if (!(query.beta > 0.0) || query.beta > 1.0 || !std::isfinite(query.beta))
    throw std::invalid_argument("expected_trials: beta must lie in (0, 1]");
  if (query.n < 2) throw std::invalid_argument("expected_trials: n must be >= 2");

  switch (query.scheme) {
    case EntanglementScheme::Full:
      return std::pow(query.beta, -query.n);
    case EntanglementScheme::AllPairs:
      return query.n * (query.n - 1) / (2.0 * query.beta);
    case EntanglementScheme::NeighborRing:
      return query.n / query.beta;
  }
  throw std::invalid_argument("expected_trials: unknown scheme");
}

}  // namespace qpg
