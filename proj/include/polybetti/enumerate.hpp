#pragma once

#include <vector>

#include "polybetti/cells.hpp"
#include "polybetti/lattice.hpp"

namespace polybetti {

// Canonical representatives of all free polyominoes with up to maxCells
// cells, ordered by (cell count, canonical cell list).
std::vector<CellCollection> enumerate_polyominoes(int maxCells);
std::vector<CellCollection> enumerate_convex(int maxCells);
// One representative per isomorphism class admitting a stack orientation;
// the representative is returned in a stack orientation.
std::vector<CellCollection> enumerate_stack(int maxCells);

// Posets up to isomorphism with 1..maxElements elements, deterministic order.
std::vector<Poset> enumerate_posets(int maxElements);

} // namespace polybetti
