#include <doctest.h>

#include <random>
#include <stdexcept>

#include "polybetti/cells.hpp"
#include "polybetti/errors.hpp"
#include "polybetti/semigroup.hpp"
#include "polybetti/toric.hpp"

using namespace polybetti;

namespace {

CellCollection rectangle(int a, int b) {
    std::vector<GridPoint> cells;
    for (int x = 1; x <= a; ++x)
        for (int y = 1; y <= b; ++y) cells.push_back({x, y});
    return CellCollection(std::move(cells));
}

std::vector<int> sum_of_generators(const AffineSemigroup& sg, const std::vector<int>& picks) {
    std::vector<int> h(sg.ambient_dim(), 0);
    for (int g : picks)
        for (int k = 0; k < sg.ambient_dim(); ++k) h[k] += sg.generators()[g][k];
    return h;
}

} // namespace

TEST_CASE("semigroup of a collection has one generator per vertex") {
    CellCollection single({{1, 1}});
    auto sg = semigroup_of(single);
    CHECK(sg.generators().size() == 4);
    CHECK(sg.ambient_dim() == 4);
    CHECK(sg.kind() == MembershipKind::BipartiteFlow);

    CellCollection domino({{1, 1}, {2, 1}});
    CHECK(semigroup_of(domino).generators().size() == 6);

    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    CHECK(semigroup_of(plus).generators().size() == plus.vertex_set().size());
    CHECK(plus.vertex_set().size() == 12);
}

TEST_CASE("membership by transportation feasibility") {
    CellCollection l({{1, 1}, {2, 1}, {2, 2}});
    auto sg = semigroup_of(l);

    std::vector<int> zero(sg.ambient_dim(), 0);
    CHECK(sg.contains(zero));
    for (const auto& g : sg.generators()) CHECK(sg.contains(g));

    // vertex (1,3) is not in V(L), so s1 + t3 is not reachable
    std::vector<int> h(sg.ambient_dim(), 0);
    h[0] = 1;
    h[l.bbox_m() + 2] = 1;
    CHECK_FALSE(sg.contains(h));

    // row and column sums must balance
    std::vector<int> unbalanced(sg.ambient_dim(), 0);
    unbalanced[0] = 1;
    CHECK_FALSE(sg.contains(unbalanced));

    CHECK_THROWS_AS(sg.contains(std::vector<int>(3, 0)), std::invalid_argument);
}

TEST_CASE("membership is closed under addition") {
    CellCollection plus({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}});
    auto sg = semigroup_of(plus);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> picksA, picksB;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
            picksA.push_back(static_cast<int>(rng() % sg.generators().size()));
        for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
            picksB.push_back(static_cast<int>(rng() % sg.generators().size()));
        auto a = sum_of_generators(sg, picksA);
        auto b = sum_of_generators(sg, picksB);
        REQUIRE(sg.contains(a));
        REQUIRE(sg.contains(b));
        std::vector<int> s(sg.ambient_dim());
        for (int k = 0; k < sg.ambient_dim(); ++k) s[k] = a[k] + b[k];
        CHECK(sg.contains(s));
    }
}

TEST_CASE("membership cache agrees with direct queries") {
    CellCollection domino({{1, 1}, {2, 1}});
    auto sg = semigroup_of(domino);
    MembershipCache cache(sg);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> h(sg.ambient_dim());
        for (auto& x : h) x = static_cast<int>(rng() % 4);
        CHECK(cache.contains(h) == sg.contains(h));
        CHECK(cache.contains(h) == sg.contains(h));  // cached path
    }
}

TEST_CASE("generic search backend matches the flow backend") {
    CellCollection l({{1, 1}, {2, 1}, {2, 2}});
    auto flow = semigroup_of(l);
    auto search = AffineSemigroup::generic(flow.generators());
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<int> h(flow.ambient_dim());
        for (auto& x : h) x = static_cast<int>(rng() % 3);
        CHECK(flow.contains(h) == search.contains(h));
    }
}

TEST_CASE("hilbert function values") {
    auto single = semigroup_of(CellCollection({{1, 1}}));
    for (int d = 0; d <= 5; ++d)
        CHECK(hilbert_function(single, d) == static_cast<long long>(d + 1) * (d + 1));

    auto square = semigroup_of(rectangle(2, 2));
    CHECK(hilbert_function(square, 0) == 1);
    CHECK(hilbert_function(square, 1) == 9);
    CHECK(hilbert_function(square, 2) == 36);

    // degree 1 always counts the generators
    CHECK(hilbert_function(square, 1) == static_cast<long long>(square.generators().size()));
}

TEST_CASE("degree bookkeeping") {
    auto sg = semigroup_of(CellCollection({{1, 1}, {2, 1}}));
    auto g = sg.generators()[2];
    CHECK(sg.degree_of(g) == 1);
    auto d = sg.make_degree(g);
    CHECK(d.total == 1);
    for (const auto& h : elements_of_degree(sg, 3))
        CHECK(sg.degree_of(h) == 3);
}

TEST_CASE("h-vectors of small polyomino rings") {
    auto single = h_vector(semigroup_of(CellCollection({{1, 1}})));
    CHECK(single.h == std::vector<long long>{1, 1});
    CHECK(single.krullDim == 3);

    auto square = h_vector(semigroup_of(rectangle(2, 2)));
    CHECK(square.h == std::vector<long long>{1, 4, 1});
    CHECK(square.krullDim == 5);

    auto domino = h_vector(semigroup_of(CellCollection({{1, 1}, {2, 1}})));
    CHECK(domino.h == std::vector<long long>{1, 2});
    CHECK(domino.krullDim == 4);

    CHECK(is_palindromic(square));
    CHECK(is_extremal_h_vector(square));
    CHECK_FALSE(is_palindromic(domino));
    CHECK(is_linear_h_vector(domino));
    CHECK_FALSE(is_linear_h_vector(square));
}

TEST_CASE("h-vector reconstructs the Hilbert function") {
    for (auto c : {rectangle(2, 2), rectangle(3, 1), rectangle(2, 3)}) {
        auto sg = semigroup_of(c);
        auto hv = h_vector(sg);
        auto prefix = hilbert_series_prefix(sg, 6);
        for (int d = 0; d <= 6; ++d) CHECK(hilbert_from_h_vector(hv, d) == prefix[d]);
    }
}

TEST_CASE("closure caps raise") {
    auto sg = semigroup_of(rectangle(2, 2));
    HilbertOptions opts;
    opts.maxElements = 4;
    CHECK_THROWS_AS(hilbert_function(sg, 3, opts), CapExceeded);
}
