#pragma once

#include <map>
#include <string>
#include <vector>

#include "polybetti/homology.hpp"

namespace polybetti {

struct SweepMismatch {
    std::string item;
    std::string detail;
};

struct SweepReport {
    std::string theorem;
    int bound{};
    std::size_t universeSize{};
    std::map<std::string, long long> counters;
    std::vector<SweepMismatch> mismatches;
    double seconds{};

    bool ok() const { return mismatches.empty(); }
};

struct SweepOptions {
    FieldSpec field = FieldSpec::qq();
    int bettiDegreeCap = 6;  // upper degree for the vanishing scan in `main`
};

// Exhaustive oracle-vs-predicate verification over enumerated universes.
// Theorems: main (linear relatedness + Koszul pairs + the degree>4
// vanishing), linear, gorenstein_stack, stack, hibione, hibitwo.
SweepReport verify_theorem(const std::string& name, int bound, const SweepOptions& opts = {});

std::vector<std::string> known_theorems();

} // namespace polybetti
