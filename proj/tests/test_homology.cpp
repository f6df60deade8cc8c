#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "polybetti/cells.hpp"
#include "polybetti/homology.hpp"
#include "polybetti/toric.hpp"

using namespace polybetti;

namespace {

CellCollection rectangle(int a, int b) {
    std::vector<GridPoint> cells;
    for (int x = 1; x <= a; ++x)
        for (int y = 1; y <= b; ++y) cells.push_back({x, y});
    return CellCollection(std::move(cells));
}

SimplicialComplex explicit_complex(int vertices, std::vector<std::vector<int>> maximalFaces) {
    // close under subsets
    std::set<std::vector<int>> all;
    all.insert(std::vector<int>{});
    for (auto& f : maximalFaces) {
        std::sort(f.begin(), f.end());
        const std::size_t subsets = 1ull << f.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<int> sub;
            for (std::size_t b = 0; b < f.size(); ++b)
                if ((mask >> b) & 1u) sub.push_back(f[b]);
            all.insert(sub);
        }
    }
    SimplicialComplex cx;
    cx.vertexCount = vertices;
    cx.faces.assign(all.begin(), all.end());
    return cx;
}

const FieldSpec kFields[2] = {FieldSpec::qq(), FieldSpec::gf(32003)};

} // namespace

TEST_CASE("reduced homology conventions") {
    for (const auto& field : kFields) {
        auto simplex = explicit_complex(3, {{0, 1, 2}});
        for (int i = -1; i <= 2; ++i) CHECK(reduced_homology_rank(simplex, i, field) == 0);

        auto hollow = explicit_complex(3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(reduced_homology_rank(hollow, 0, field) == 0);
        CHECK(reduced_homology_rank(hollow, 1, field) == 1);

        auto twoEdges = explicit_complex(4, {{0, 1}, {2, 3}});
        CHECK(reduced_homology_rank(twoEdges, 0, field) == 1);
        CHECK(reduced_homology_rank(twoEdges, 1, field) == 0);

        SimplicialComplex emptyOnly;
        emptyOnly.vertexCount = 0;
        emptyOnly.faces = {{}};
        CHECK(reduced_homology_rank(emptyOnly, -1, field) == 1);

        auto point = explicit_complex(1, {{0}});
        CHECK(reduced_homology_rank(point, -1, field) == 0);
        CHECK(reduced_homology_rank(point, 0, field) == 0);
    }
}

TEST_CASE("divisor complex of a minor degree is two disjoint edges") {
    CellCollection single({{1, 1}});
    auto sg = semigroup_of(single);
    MembershipCache cache(sg);
    std::vector<int> h{1, 1, 1, 1};
    auto cx = divisor_complex(cache, h);
    CHECK(cx.vertexCount == 4);
    CHECK(cx.face_count(-1) == 1);
    CHECK(cx.face_count(0) == 4);
    CHECK(cx.face_count(1) == 2);
    CHECK(cx.dim() == 1);
    CHECK(reduced_homology_rank(cx, 0, FieldSpec::qq()) == 1);
}

TEST_CASE("divisor complex of twice a generator is a point") {
    CellCollection single({{1, 1}});
    auto sg = semigroup_of(single);
    MembershipCache cache(sg);
    std::vector<int> h{2, 0, 2, 0};
    auto cx = divisor_complex(cache, h);
    CHECK(cx.vertexCount == 1);
    CHECK(cx.faces.size() == 2);
    CHECK_THROWS_AS(divisor_complex(cache, std::vector<int>{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("euler characteristic equals alternating homology sum") {
    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    auto sg = semigroup_of(plus);
    MembershipCache cache(sg);
    for (int d : {2, 3}) {
        for (const auto& h : elements_of_degree(sg, d)) {
            auto cx = divisor_complex(cache, h);
            long long chi = 0;
            for (int i = -1; i <= cx.dim(); ++i) {
                long long r = reduced_homology_rank(cx, i, FieldSpec::qq());
                chi += (i % 2 == 0 ? 1 : -1) * r * (i >= 0 ? 1 : -1) * (i == -1 ? -1 : 1);
            }
            // recompute cleanly
            chi = 0;
            for (int i = -1; i <= cx.dim(); ++i) {
                long long r = reduced_homology_rank(cx, i, FieldSpec::qq());
                chi += ((i % 2 + 2) % 2 == 0 ? r : -r);
            }
            CHECK(chi == cx.reduced_euler_characteristic());
        }
    }
}

TEST_CASE("homology ranks are invariant under vertex relabeling") {
    auto hollowSquare = explicit_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::mt19937 rng(5);
    std::vector<int> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 8; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        SimplicialComplex relabeled;
        relabeled.vertexCount = 4;
        for (auto f : hollowSquare.faces) {
            for (auto& v : f) v = perm[static_cast<std::size_t>(v)];
            std::sort(f.begin(), f.end());
            relabeled.faces.push_back(std::move(f));
        }
        for (int i = -1; i <= 1; ++i)
            CHECK(reduced_homology_rank(relabeled, i, FieldSpec::qq()) ==
                  reduced_homology_rank(hollowSquare, i, FieldSpec::qq()));
    }
}

TEST_CASE("fast first-homology path matches the generic path") {
    std::vector<CellCollection> pool = {
        CellCollection({{1, 1}, {2, 1}}),
        CellCollection({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}}),  // corner-angle shape
        CellCollection({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}),
        rectangle(2, 2),
    };
    for (const auto& c : pool) {
        auto sg = semigroup_of(c);
        MembershipCache cache(sg);
        for (int d : {3, 4}) {
            for (const auto& h : elements_of_degree(sg, d)) {
                auto cx = divisor_complex(cache, h);
                for (const auto& field : kFields)
                    CHECK(divisor_h1_rank(cache, h, field) ==
                          reduced_homology_rank(cx, 1, field));
            }
        }
    }
}

TEST_CASE("betti table of the domino matches the determinantal resolution") {
    // 2-minors of a 2x3 matrix: 3 generators, 2 linear first syzygies
    auto t = betti_table(CellCollection({{1, 1}, {2, 1}}), 5, FieldSpec::qq());
    CHECK(t.ideal_total(0, 2) == 3);
    CHECK(t.ideal_total(1, 3) == 2);
    CHECK(t.ideal_total(1, 4) == 0);
    CHECK(t.ideal_total(2, 4) == 0);
    CHECK(t.ideal_total(2, 5) == 0);
    CHECK(t.algebra_total(0, 0) == 1);
}

TEST_CASE("betti table of a single cell is principal") {
    auto t = betti_table(CellCollection({{1, 1}}), 6, FieldSpec::qq());
    CHECK(t.ideal_total(0, 2) == 1);
    for (int j = 3; j <= 6; ++j) CHECK(t.ideal_total(1, j) == 0);
}

TEST_CASE("first syzygies of a convex fixture vanish beyond degree 4") {
    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    CHECK(first_syzygy_degrees(plus, 5, 6, FieldSpec::qq()).empty());
}

TEST_CASE("linear relatedness oracle") {
    auto notFixture = parse_grid("..##.\n.####\n.####\n####.\n");
    auto v = is_linearly_related_oracle(notFixture, FieldSpec::qq());
    CHECK_FALSE(v.linearlyRelated);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->total == 4);

    CHECK(is_linearly_related_oracle(rectangle(3, 2), FieldSpec::qq()).linearlyRelated);
    CHECK(is_linearly_related_oracle(rectangle(4, 3), FieldSpec::qq()).linearlyRelated);
    CHECK(is_linearly_related_oracle(CellCollection({{1, 1}}), FieldSpec::qq()).linearlyRelated);
}

TEST_CASE("betti numbers only shrink on induced collections") {
    auto notFixture = parse_grid("..##.\n.####\n.####\n####.\n");
    auto ambient = betti_table(notFixture, 4, FieldSpec::qq());
    std::mt19937 rng(9);
    int tested = 0;
    for (int trial = 0; trial < 10 && tested < 5; ++trial) {
        std::vector<int> cols, rows;
        for (int x = 1; x <= notFixture.bbox_m(); ++x)
            if (rng() % 2) cols.push_back(x);
        for (int y = 1; y <= notFixture.bbox_n(); ++y)
            if (rng() % 2) rows.push_back(y);
        if (cols.size() < 2 || rows.size() < 2) continue;
        try {
            auto sub = induced_collection(notFixture, cols, rows);
            auto inner = betti_table(sub, 4, FieldSpec::qq());
            for (int i = 0; i <= 1; ++i)
                for (int j = 2; j <= 4; ++j)
                    CHECK(inner.ideal_total(i, j) <= ambient.ideal_total(i, j));
            ++tested;
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("ranks agree between QQ and GF(32003) on fixtures") {
    std::vector<CellCollection> pool = {
        CellCollection({{1, 1}, {2, 1}}),
        CellCollection({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}),
    };
    for (const auto& c : pool) {
        auto tq = betti_table(c, 4, FieldSpec::qq());
        auto tp = betti_table(c, 4, FieldSpec::gf(32003));
        CHECK(tq.totals == tp.totals);
    }
}
