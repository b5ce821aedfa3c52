#include "qpg/layout.hpp"

#include <stdexcept>

namespace qpg {

std::string to_string(EntanglementScheme scheme) {
  switch (scheme) {
    case EntanglementScheme::Full: return "full";
    case EntanglementScheme::AllPairs: return "all_pairs";
    case EntanglementScheme::NeighborRing: return "neighbor_ring";
  }
  return "?";
}

namespace {

void finish_ownership(QubitLayout& layout, const std::vector<std::pair<int, int>>& player_pairs) {
  // Pair p owns register slots 2p, 2p+1; lower-indexed player gets the first.
  layout.ownership.assign(layout.n, {});
  layout.owner_of.assign(layout.total_qubits, -1);
  layout.slot_of.assign(layout.total_qubits, -1);
  layout.pairs.clear();
  for (std::size_t p = 0; p < player_pairs.size(); ++p) {
    const int q0 = static_cast<int>(2 * p);
    const int q1 = q0 + 1;
    layout.pairs.emplace_back(q0, q1);
    layout.owner_of[q0] = player_pairs[p].first;
    layout.owner_of[q1] = player_pairs[p].second;
  }
  for (int q = 0; q < layout.total_qubits; ++q) {
    const int owner = layout.owner_of[q];
    layout.slot_of[q] = static_cast<int>(layout.ownership[owner].size());
    layout.ownership[owner].push_back(q);
  }
}

}  // namespace

QubitLayout build_layout(EntanglementScheme scheme, int n) {
  if (n < 2) throw std::invalid_argument("build_layout: need at least 2 players");

  QubitLayout layout;
  layout.scheme = scheme;
  layout.n = n;

  switch (scheme) {
    case EntanglementScheme::Full: {
      layout.total_qubits = n;
      layout.ownership.assign(n, {});
      layout.owner_of.assign(n, -1);
      layout.slot_of.assign(n, 0);
      for (int k = 0; k < n; ++k) {
        layout.ownership[k] = {k};
        layout.owner_of[k] = k;
      }
      break;
    }
    case EntanglementScheme::AllPairs: {
      layout.total_qubits = n * (n - 1);
      std::vector<std::pair<int, int>> player_pairs;
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) player_pairs.emplace_back(j, k);
      finish_ownership(layout, player_pairs);
      break;
    }
    case EntanglementScheme::NeighborRing: {
      if (n == 2)
        throw unsupported_configuration_error(
            "build_layout: neighbor ring needs at least 3 players (n=2 degenerates "
            "to a doubled pair)");
      layout.total_qubits = 2 * n;
      std::vector<std::pair<int, int>> player_pairs;
      for (int k = 0; k < n; ++k) player_pairs.emplace_back(k, (k + 1) % n);
      finish_ownership(layout, player_pairs);
      break;
    }
  }
  return layout;
}

}  // namespace qpg
