#pragma once

#include "qpg/layout.hpp"

namespace qpg {

struct CostQuery {
  EntanglementScheme scheme = EntanglementScheme::Full;
  int n = 0;
  double beta = 1.0;  // single-trial success probability, (0, 1]
};

/// Mean number of trials to distribute the scheme's entanglement resources:
/// beta^{-n} for the full scheme, n(n-1)/(2 beta) for all pairs, n/beta for
/// the neighbor ring.
double expected_trials(const CostQuery& query);

}  // namespace qpg
