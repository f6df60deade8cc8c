#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "polybetti/cells.hpp"

using namespace polybetti;

namespace {

CellCollection random_collection(std::mt19937& rng, int gridSize, int maxCells) {
    std::uniform_int_distribution<int> coord(1, gridSize);
    std::set<std::pair<int, int>> picked;
    int want = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxCells));
    while (static_cast<int>(picked.size()) < want) picked.insert({coord(rng), coord(rng)});
    std::vector<GridPoint> cells;
    for (auto [x, y] : picked) cells.push_back({x, y});
    return CellCollection(std::move(cells));
}

CellCollection rectangle(int a, int b) {
    std::vector<GridPoint> cells;
    for (int x = 1; x <= a; ++x)
        for (int y = 1; y <= b; ++y) cells.push_back({x, y});
    return CellCollection(std::move(cells));
}

const char* kNotGrid = "..##.\n.####\n.####\n####.\n";

} // namespace

TEST_CASE("grid parsing and normalization") {
    auto single = parse_grid("#");
    CHECK(single.cells() == std::vector<GridPoint>{{1, 1}});
    CHECK(single.bbox_m() == 2);
    CHECK(single.bbox_n() == 2);

    auto domino = parse_grid("##");
    CHECK(domino.cells() == std::vector<GridPoint>{{1, 1}, {2, 1}});
    CHECK(domino.bbox_m() == 3);
    CHECK(domino.bbox_n() == 2);

    auto notFixture = parse_grid(kNotGrid);
    CHECK(notFixture.cells().size() == 14);
    CHECK(notFixture.bbox_m() == 6);
    CHECK(notFixture.bbox_n() == 5);

    // round trip through the serializer
    CHECK(parse_grid(to_grid(notFixture)) == notFixture);

    // normalization is idempotent and translation invariant
    CellCollection shifted({{5, 7}, {6, 7}});
    CHECK(shifted == domino);
}

TEST_CASE("grid parsing errors") {
    CHECK_THROWS_AS(parse_grid(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("...\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("##\n#\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("#x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_and_normalize("   "), std::invalid_argument);
}

TEST_CASE("json parsing") {
    auto c = parse_cells_json(R"({"cells": [[2,3],[3,3]]})");
    CHECK(c.cells() == std::vector<GridPoint>{{1, 1}, {2, 1}});
    CHECK_THROWS_AS(parse_cells_json(R"({"cells": []})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells_json(R"({"cells": [[0,1]]})"), std::invalid_argument);
    CHECK(parse_and_normalize(R"({"cells": [[1,1]]})").cells().size() == 1);
}

TEST_CASE("is_polyomino") {
    CHECK(is_polyomino(CellCollection({{1, 1}})));
    CHECK_FALSE(is_polyomino(CellCollection({{1, 1}, {3, 1}})));
    // corner contact only
    CHECK_FALSE(is_polyomino(CellCollection({{1, 1}, {2, 2}})));
    CHECK(is_polyomino(rectangle(3, 2)));
}

TEST_CASE("is_convex") {
    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    CHECK(is_convex(plus));
    CHECK(is_convex(CellCollection({{1, 1}})));
    // S-shaped column gap
    CellCollection bent({{1, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}});
    CHECK_FALSE(is_convex(bent));
    CHECK_THROWS_AS(is_convex(CellCollection({{1, 1}, {3, 3}})), std::invalid_argument);
}

TEST_CASE("vertex sets") {
    CHECK(CellCollection({{1, 1}}).vertex_set().size() == 4);
    CHECK(CellCollection({{1, 1}, {2, 1}}).vertex_set().size() == 6);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 3; ++b)
            CHECK(rectangle(a, b).vertex_set().size() == (a + 1) * (b + 1));
}

TEST_CASE("canonical form is constant on dihedral orbits") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto c = random_collection(rng, 4, 6);
        auto canon = canonical_form(c);
        CHECK(canonical_form(canon) == canon);  // idempotent
        for (const auto& img : transforms(c)) CHECK(canonical_form(img) == canon);
    }
    CHECK(isomorphic(CellCollection({{1, 1}, {2, 1}}), CellCollection({{1, 1}, {1, 2}})));
    // all 8 transforms of the L-tromino collapse to one form
    CellCollection l({{1, 1}, {2, 1}, {2, 2}});
    for (const auto& img : transforms(l)) CHECK(isomorphic(img, l));
    CHECK(canonical_form(CellCollection({{1, 1}})) == CellCollection({{1, 1}}));
}

TEST_CASE("induced collections") {
    // figure: 7-cell polyomino, columns 1,3,4 and all rows give the 4-cell staircase
    CellCollection left({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
    auto right = induced_collection(left, {1, 3, 4}, {1, 2, 3, 4});
    CHECK(right == CellCollection({{1, 1}, {1, 2}, {2, 2}, {2, 3}}));

    // selecting everything is the identity
    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    CHECK(induced_collection(plus, {1, 2, 3, 4}, {1, 2, 3, 4}) == plus);

    // corner selection of the non-linearly-related fixture is the skew tetromino
    auto notFixture = parse_grid(kNotGrid);
    auto skew = induced_collection(notFixture, {1, 2, 5, 6}, {1, 2, 4, 5});
    CHECK(skew == CellCollection({{1, 1}, {2, 1}, {2, 2}, {3, 2}}));

    CHECK_THROWS_AS(induced_collection(plus, {1, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(induced_collection(plus, {0, 2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(induced_collection(plus, {1, 9}, {1, 2}), std::invalid_argument);
}

TEST_CASE("convexity is hereditary for induced polyominoes") {
    std::mt19937 rng(21);
    auto notFixture = parse_grid(kNotGrid);
    std::vector<CellCollection> pool{rectangle(4, 3), notFixture};
    for (const auto& c : pool) {
        if (!is_polyomino(c) || !is_convex(c)) continue;
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> cols, rows;
            for (int x = 1; x <= c.bbox_m(); ++x)
                if (rng() % 2) cols.push_back(x);
            for (int y = 1; y <= c.bbox_n(); ++y)
                if (rng() % 2) rows.push_back(y);
            if (cols.size() < 2 || rows.size() < 2) continue;
            try {
                auto sub = induced_collection(c, cols, rows);
                if (is_polyomino(sub)) CHECK(is_convex(sub));
            } catch (const std::invalid_argument&) {
                // empty selection, fine
            }
        }
    }
}

TEST_CASE("shape profile") {
    auto rect = rectangle(4, 3);
    auto p = shape_profile(rect);
    for (bool b : p.corner_present) CHECK(b);
    CHECK(p.i1 == 1);
    CHECK(p.i2 == 5);
    CHECK(p.i3 == 1);
    CHECK(p.i4 == 5);
    CHECK(p.j1 == 1);
    CHECK(p.j2 == 4);
    CHECK(p.j3 == 1);
    CHECK(p.j4 == 4);

    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    auto pp = shape_profile(plus);
    for (bool b : pp.corner_present) CHECK_FALSE(b);
    // corner flag (1,1) tracks membership of (1,1) in the vertex set
    CHECK(pp.corner_present[0] == plus.has_vertex(1, 1));

    auto notFixture = parse_grid(kNotGrid);
    auto np = shape_profile(notFixture);
    CHECK(np.corner_present == std::array<bool, 4>{true, false, false, false});
    CHECK(np.i1 == 1);
    CHECK(np.i2 == 5);
    CHECK(np.i3 == 3);
    CHECK(np.i4 == 5);
    CHECK(np.j1 == 1);
    CHECK(np.j2 == 2);
    CHECK(np.j3 == 2);
    CHECK(np.j4 == 4);

    CellCollection bent({{1, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}});
    CHECK_THROWS_AS(shape_profile(bent), std::invalid_argument);
}

TEST_CASE("stack profiles") {
    auto single = CellCollection({{1, 1}});
    CHECK(is_stack_polyomino(single));
    auto sp = stack_profile(single);
    CHECK(sp.width == 1);
    CHECK(sp.height == 1);
    CHECK(sp.truncations == std::vector<int>{1});
    CHECK(sp.jumps == std::vector<int>{0});

    auto right = parse_grid("...#.\n...##\n.####\n#####\n");
    CHECK(is_stack_polyomino(right));
    auto rp = stack_profile(right);
    CHECK(rp.width == 5);
    CHECK(rp.height == 4);
    CHECK(rp.truncations == std::vector<int>{5, 4, 2, 1});
    CHECK(rp.jumps == std::vector<int>{0, 1, 2, 3});

    auto left = parse_grid("..#.\n#.##\n####\n");
    CHECK(is_stack_polyomino(left));
    CHECK(is_polyomino(left));
    CHECK_FALSE(is_convex(left));

    // truncations weakly decrease and start at the width
    for (const auto& fix : {right, left}) {
        auto prof = stack_profile(fix);
        CHECK(prof.truncations.front() == prof.width);
        for (std::size_t k = 1; k < prof.truncations.size(); ++k)
            CHECK(prof.truncations[k] <= prof.truncations[k - 1]);
    }

    CHECK_FALSE(is_stack_polyomino(CellCollection({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}})));
    CHECK_THROWS_AS(stack_profile(CellCollection({{1, 1}, {1, 2}, {2, 2}})),
                    std::invalid_argument);
}
