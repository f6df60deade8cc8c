#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "polybetti/cells.hpp"
#include "polybetti/semigroup.hpp"

namespace polybetti {

// A 2-minor attached to an inner interval [(i,j),(k,l)] of a cell
// collection: the binomial x_{il}x_{kj} - x_{kl}x_{ij}.
struct InnerMinor {
    GridPoint lo;                     // (i,j)
    GridPoint hi;                     // (k,l), i<k and j<l
    std::array<GridPoint, 2> plus;    // (i,l),(k,j)
    std::array<GridPoint, 2> minus;   // (k,l),(i,j)
};

// One generator s_i t_j per vertex (i,j); membership decided by
// transportation feasibility.
AffineSemigroup semigroup_of(const CellCollection& c);

// All inner 2-minors in lexicographic interval order.
std::vector<InnerMinor> inner_minors(const CellCollection& c);

// Multidegree of the minor inside the m+n ambient lattice of semigroup_of.
std::vector<int> minor_multidegree(const InnerMinor& f, int rows, int cols);

struct BipartiteGraph {
    int rows{};
    int cols{};
    std::vector<std::pair<int, int>> edges;  // (i,j), 1-based
};

BipartiteGraph bipartite_graph(const CellCollection& c);

// For a cyclic integer sequence f(1..r+1) with f(r+1)=f(1), injective on
// [r], r>=3: indices (s,t) with f(s)<f(t)<f(s+1) or f(s+1)<f(t)<f(s).
// 1-based, first match in lexicographic (s,t) order.
std::pair<int, int> find_chord_pivot(const std::vector<int>& f);

struct SampledChord {
    std::vector<std::pair<int, int>> cycle;  // P-vertices along the cycle
    std::pair<int, int> pivot;               // (s,t) from find_chord_pivot
    std::pair<int, int> chord;               // the vertex (i_t, j_s)
};

struct ChordalityCertificate {
    bool quadratic{};  // every cycle of length >= 6 has a chord
    std::vector<std::pair<int, int>> chordlessCycle;  // witness edge sequence if !quadratic
    std::vector<SampledChord> sampledChords;
    long long inducedCyclesChecked{};
};

// Certifies the quadratic Groebner criterion: true iff the graph has no
// chordless cycle of length >= 6.  If sampleChords > 0, additionally walks
// up to that many (not necessarily chordless) long cycles and exhibits the
// chord found through find_chord_pivot whenever it lies in the edge set.
ChordalityCertificate quadratic_gb_certificate(const BipartiteGraph& g, int sampleChords = 0);

} // namespace polybetti
