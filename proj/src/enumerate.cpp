#include "polybetti/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polybetti/errors.hpp"

namespace polybetti {

std::vector<CellCollection> enumerate_polyominoes(int maxCells) {
    if (maxCells < 1 || maxCells > 12) throw CapExceeded("polyomino bound out of range");
    std::vector<CellCollection> out;
    std::set<std::vector<GridPoint>> current;
    current.insert(CellCollection({{1, 1}}).cells());
    for (int size = 1; size <= maxCells; ++size) {
        for (const auto& cells : current) out.push_back(CellCollection(cells));
        if (size == maxCells) break;
        std::set<std::vector<GridPoint>> next;
        for (const auto& cells : current) {
            for (const auto& cell : cells) {
                const GridPoint nbrs[4] = {{cell.x + 1, cell.y},
                                           {cell.x - 1, cell.y},
                                           {cell.x, cell.y + 1},
                                           {cell.x, cell.y - 1}};
                for (const auto& q : nbrs) {
                    if (std::binary_search(cells.begin(), cells.end(), q)) continue;
                    std::vector<GridPoint> grown = cells;
                    grown.push_back(q);
                    next.insert(canonical_form(CellCollection(std::move(grown))).cells());
                }
            }
        }
        current = std::move(next);
    }
    return out;
}

std::vector<CellCollection> enumerate_convex(int maxCells) {
    std::vector<CellCollection> out;
    for (auto& p : enumerate_polyominoes(maxCells))
        if (is_convex(p)) out.push_back(std::move(p));
    return out;
}

std::vector<CellCollection> enumerate_stack(int maxCells) {
    std::vector<CellCollection> out;
    for (const auto& p : enumerate_convex(maxCells)) {
        for (const auto& img : transforms(p))
            if (is_stack_polyomino(img)) {
                out.push_back(img);
                break;
            }
    }
    return out;
}

std::vector<Poset> enumerate_posets(int maxElements) {
    if (maxElements < 1 || maxElements > 7) throw CapExceeded("poset bound out of range");
    std::vector<Poset> out;
    // grow by adding a maximal element whose strict down-set is any order
    // ideal of the smaller poset
    std::map<std::string, Poset> current;
    Poset one = Poset::antichain(1);
    current.emplace(one.canonical_key(), one);
    for (int size = 1; size <= maxElements; ++size) {
        for (const auto& [key, p] : current) out.push_back(p);
        if (size == maxElements) break;
        std::map<std::string, Poset> next;
        for (const auto& [key, p] : current) {
            DistLattice ideals = order_ideal_lattice(p, 12);
            for (std::uint32_t mask : ideals.ideal_masks()) {
                std::vector<std::pair<int, int>> rel = p.strict_pairs();
                for (int q = 1; q <= p.size(); ++q)
                    if ((mask >> (q - 1)) & 1u) rel.emplace_back(q, p.size() + 1);
                Poset grown(p.size() + 1, std::move(rel));
                next.emplace(grown.canonical_key(), grown);
            }
        }
        current = std::move(next);
    }
    return out;
}

} // namespace polybetti
