#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace polybetti {

struct GridPoint {
    int x{};
    int y{};
    auto operator<=>(const GridPoint&) const = default;
};

// A finite set of unit cells, each identified by its lower-left corner.
// Normalized on construction: the smallest vertex coordinate in each axis
// is 1, so the vertex bounding box is [(1,1),(m,n)].
class CellCollection {
public:
    explicit CellCollection(std::vector<GridPoint> cells);

    const std::vector<GridPoint>& cells() const { return cells_; }
    const std::vector<GridPoint>& vertex_set() const { return vertices_; }
    int bbox_m() const { return m_; }
    int bbox_n() const { return n_; }

    bool has_cell(int x, int y) const;
    bool has_vertex(int x, int y) const;

    bool operator==(const CellCollection& o) const { return cells_ == o.cells_; }

private:
    std::vector<GridPoint> cells_;     // sorted, unique, normalized
    std::vector<GridPoint> vertices_;  // sorted union of cell corners
    int m_{}, n_{};
};

// Spans and corner flags of a convex polyomino read off its bounding box,
// in the layout of the classification predicate:
//   i1,i2 = min/max x with (x,1) in V     (bottom row)
//   i3,i4 = min/max x with (x,n) in V     (top row)
//   j1,j2 = min/max y with (1,y) in V     (left column)
//   j3,j4 = min/max y with (m,y) in V     (right column)
struct ShapeProfile {
    std::array<bool, 4> corner_present{};        // (1,1),(m,1),(1,n),(m,n)
    std::array<bool, 4> inner_corner_present{};  // (2,2),(m-1,2),(2,n-1),(m-1,n-1)
    int i1{}, i2{}, i3{}, i4{};
    int j1{}, j2{}, j3{}, j4{};
};

// Stack decomposition of a stack polyomino.  truncations[k] is the width of
// the polyomino with its k bottom rows removed; jumps starts at index 0 (the
// untruncated polyomino) followed by every k >= 1 where the width strictly
// drops.
struct StackProfile {
    int width{};
    int height{};
    std::vector<int> truncations;
    std::vector<int> jumps;
};

// Parsing.  Grid format: lines over {'#','.'}, top row first, all lines the
// same length (pad with trailing '.').  JSON format: {"cells": [[x,y],...]}.
CellCollection parse_grid(const std::string& text);
CellCollection parse_cells_json(const std::string& text);
// Auto-detects the two formats (JSON iff first non-space char is '{').
CellCollection parse_and_normalize(const std::string& text);

std::string to_grid(const CellCollection& c);

bool is_polyomino(const CellCollection& c);
// Row and column convexity; requires a polyomino.
bool is_convex(const CellCollection& c);

// All 8 dihedral images, normalized.
std::array<CellCollection, 8> transforms(const CellCollection& c);
// Lexicographically least normalized cell set over the dihedral orbit.
CellCollection canonical_form(const CellCollection& c);
bool isomorphic(const CellCollection& a, const CellCollection& b);

// Sub-collection induced by strictly increasing vertex column/row selections
// (1-based).  Cell (k,l) is present iff all four corresponding corners lie
// in V(c).  The result may be disconnected; it must be nonempty.
CellCollection induced_collection(const CellCollection& c,
                                  const std::vector<int>& cols,
                                  const std::vector<int>& rows);

ShapeProfile shape_profile(const CellCollection& c);

bool is_stack_polyomino(const CellCollection& c);
// Requires a stack polyomino (column convex, full bottom row).
StackProfile stack_profile(const CellCollection& c);
// The collection with the k bottom cell rows removed, renormalized.
CellCollection remove_bottom_rows(const CellCollection& c, int k);

} // namespace polybetti
