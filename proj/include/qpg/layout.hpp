#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpg/errors.hpp"

namespace qpg {

enum class EntanglementScheme { Full, AllPairs, NeighborRing };

std::string to_string(EntanglementScheme scheme);

/// Register layout for one of the three entanglement schemes.
///
/// Qubits and players are 0-indexed. For pair-based schemes the register is
/// pair-major: the qubits of pair p sit at positions 2p and 2p+1, and within
/// each player pair (j, k), j < k, player j owns the first qubit.
struct QubitLayout {
  EntanglementScheme scheme = EntanglementScheme::Full;
  int n = 0;
  int total_qubits = 0;
  std::vector<std::pair<int, int>> pairs;        // qubit index pairs
  std::vector<std::vector<int>> ownership;       // per player, owned qubit indices
  std::vector<int> owner_of;                     // per qubit, owning player
  std::vector<int> slot_of;                      // per qubit, position in owner's list

  int owned_count(int player) const { return static_cast<int>(ownership[player].size()); }
};

QubitLayout build_layout(EntanglementScheme scheme, int n);

}  // namespace qpg
