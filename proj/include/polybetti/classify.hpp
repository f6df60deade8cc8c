#pragma once

#include <string>
#include <vector>

#include "polybetti/cells.hpp"
#include "polybetti/homology.hpp"
#include "polybetti/semigroup.hpp"

namespace polybetti {

enum class MainCase {
    AllOrOneCornerPresent,      // (i)
    TwoAdjacentMissing,         // (ii)
    ThreeMissingWithSpanCondition,  // (iii)
    Fails,
};

struct MainVerdict {
    bool linearlyRelated{};
    MainCase mainCase{MainCase::Fails};
    std::string failReason;
    ShapeProfile profile;
};

// Combinatorial linear-relatedness test for a convex polyomino: inner-corner
// shape requirement plus the three missing-corner cases.
MainVerdict classify_linearly_related(const CellCollection& c);

// Straight strip of cells (a bounding box side of vertex length 2).
bool is_linear_resolution_shape(const CellCollection& c);

// Width equals height on the polyomino and on every strict-drop truncation.
bool gorenstein_stack_predicate(const CellCollection& c);

// Isomorphic to the L-tromino or the 2x2 square.
bool is_extremal_stack_shape(const CellCollection& c);

struct ResolutionVerdict {
    HVector hVector;
    bool isGorenstein{};
    bool hasLinearResolution{};
    bool isExtremalGorenstein{};
};

// h-vector driven resolution predicates; requires a convex polyomino.
ResolutionVerdict resolution_verdict(const CellCollection& c);

struct CheckResult {
    std::string name;
    bool applicable{};
    std::string predicate;  // combinatorial side
    std::string oracle;     // homological / h-vector side
    bool agree{};
    std::string details;
};

struct CrossReport {
    std::vector<CheckResult> checks;
    bool all_agree() const;
};

// Runs predicate and oracle side by side for every theorem applying to c.
CrossReport cross_verify(const CellCollection& c, const FieldSpec& field);

} // namespace polybetti
