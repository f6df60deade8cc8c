#include "polybetti/cells.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polybetti {

CellCollection::CellCollection(std::vector<GridPoint> cells) {
    if (cells.empty()) throw std::invalid_argument("cell collection must be nonempty");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    int minx = std::numeric_limits<int>::max(), miny = minx;
    for (const auto& c : cells) {
        minx = std::min(minx, c.x);
        miny = std::min(miny, c.y);
    }
    for (auto& c : cells) {
        c.x += 1 - minx;
        c.y += 1 - miny;
    }
    std::sort(cells.begin(), cells.end());
    cells_ = std::move(cells);

    std::set<GridPoint> verts;
    for (const auto& c : cells_) {
        verts.insert({c.x, c.y});
        verts.insert({c.x + 1, c.y});
        verts.insert({c.x, c.y + 1});
        verts.insert({c.x + 1, c.y + 1});
    }
    vertices_.assign(verts.begin(), verts.end());
    m_ = 0;
    n_ = 0;
    for (const auto& v : vertices_) {
        m_ = std::max(m_, v.x);
        n_ = std::max(n_, v.y);
    }
}

bool CellCollection::has_cell(int x, int y) const {
    return std::binary_search(cells_.begin(), cells_.end(), GridPoint{x, y});
}

bool CellCollection::has_vertex(int x, int y) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), GridPoint{x, y});
}

CellCollection parse_grid(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("empty grid");

    const std::size_t width = lines.front().size();
    std::vector<GridPoint> cells;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != width)
            throw std::invalid_argument("grid rows have unequal width (pad with trailing '.')");
        for (std::size_t col = 0; col < lines[r].size(); ++col) {
            char ch = lines[r][col];
            if (ch == '#')
                cells.push_back({static_cast<int>(col) + 1,
                                 static_cast<int>(lines.size() - r)});
            else if (ch != '.')
                throw std::invalid_argument(std::string("invalid grid character '") + ch + "'");
        }
    }
    if (cells.empty()) throw std::invalid_argument("grid contains no cells");
    return CellCollection(std::move(cells));
}

CellCollection parse_cells_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].empty())
        throw std::invalid_argument("expected nonempty \"cells\" array");
    std::vector<GridPoint> cells;
    for (const auto& e : j["cells"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("cell entries must be [x,y] integer pairs");
        int x = e[0].get<int>(), y = e[1].get<int>();
        if (x <= 0 || y <= 0) throw std::invalid_argument("cell coordinates must be positive");
        cells.push_back({x, y});
    }
    return CellCollection(std::move(cells));
}

CellCollection parse_and_normalize(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw std::invalid_argument("empty input");
    if (text[pos] == '{') return parse_cells_json(text);
    return parse_grid(text);
}

std::string to_grid(const CellCollection& c) {
    int w = c.bbox_m() - 1, h = c.bbox_n() - 1;
    std::vector<std::string> rows(h, std::string(w, '.'));
    for (const auto& cell : c.cells()) rows[h - cell.y][cell.x - 1] = '#';
    std::string out;
    for (const auto& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

bool is_polyomino(const CellCollection& c) {
    const auto& cells = c.cells();
    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        const GridPoint p = cells[i];
        const GridPoint nbrs[4] = {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
        for (const auto& q : nbrs) {
            auto it = std::lower_bound(cells.begin(), cells.end(), q);
            if (it == cells.end() || !(*it == q)) continue;
            auto j = static_cast<std::size_t>(it - cells.begin());
            if (!seen[j]) {
                seen[j] = true;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == cells.size();
}

bool is_convex(const CellCollection& c) {
    if (!is_polyomino(c)) throw std::invalid_argument("is_convex requires a polyomino");
    std::map<int, std::pair<int, int>> rows, cols;  // y -> [min,max] x, and dual
    std::map<int, int> rowCount, colCount;
    for (const auto& cell : c.cells()) {
        auto [rit, rnew] = rows.try_emplace(cell.y, std::pair{cell.x, cell.x});
        if (!rnew) {
            rit->second.first = std::min(rit->second.first, cell.x);
            rit->second.second = std::max(rit->second.second, cell.x);
        }
        auto [cit, cnew] = cols.try_emplace(cell.x, std::pair{cell.y, cell.y});
        if (!cnew) {
            cit->second.first = std::min(cit->second.first, cell.y);
            cit->second.second = std::max(cit->second.second, cell.y);
        }
        ++rowCount[cell.y];
        ++colCount[cell.x];
    }
    for (const auto& [y, span] : rows)
        if (rowCount[y] != span.second - span.first + 1) return false;
    for (const auto& [x, span] : cols)
        if (colCount[x] != span.second - span.first + 1) return false;
    return true;
}

std::array<CellCollection, 8> transforms(const CellCollection& c) {
    auto apply = [&](auto&& f) {
        std::vector<GridPoint> out;
        out.reserve(c.cells().size());
        for (const auto& cell : c.cells()) {
            GridPoint a = f(GridPoint{cell.x, cell.y});
            GridPoint b = f(GridPoint{cell.x + 1, cell.y + 1});
            out.push_back({std::min(a.x, b.x), std::min(a.y, b.y)});
        }
        return CellCollection(std::move(out));
    };
    return {
        apply([](GridPoint p) { return GridPoint{p.x, p.y}; }),
        apply([](GridPoint p) { return GridPoint{-p.y, p.x}; }),   // rot 90
        apply([](GridPoint p) { return GridPoint{-p.x, -p.y}; }),  // rot 180
        apply([](GridPoint p) { return GridPoint{p.y, -p.x}; }),   // rot 270
        apply([](GridPoint p) { return GridPoint{-p.x, p.y}; }),   // mirror x
        apply([](GridPoint p) { return GridPoint{p.x, -p.y}; }),   // mirror y
        apply([](GridPoint p) { return GridPoint{p.y, p.x}; }),    // transpose
        apply([](GridPoint p) { return GridPoint{-p.y, -p.x}; }),  // anti-transpose
    };
}

CellCollection canonical_form(const CellCollection& c) {
    auto images = transforms(c);
    const CellCollection* best = &images[0];
    for (const auto& img : images)
        if (img.cells() < best->cells()) best = &img;
    return *best;
}

bool isomorphic(const CellCollection& a, const CellCollection& b) {
    return canonical_form(a) == canonical_form(b);
}

CellCollection induced_collection(const CellCollection& c,
                                  const std::vector<int>& cols,
                                  const std::vector<int>& rows) {
    auto check = [](const std::vector<int>& v, int hi, const char* what) {
        if (v.empty()) throw std::invalid_argument(std::string(what) + " selection is empty");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > hi)
                throw std::invalid_argument(std::string(what) + " index out of range");
            if (i > 0 && v[i] <= v[i - 1])
                throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
        }
    };
    check(cols, c.bbox_m(), "column");
    check(rows, c.bbox_n(), "row");

    auto inducedVertex = [&](std::size_t k, std::size_t l) {
        return c.has_vertex(cols[k], rows[l]);
    };
    std::vector<GridPoint> cells;
    for (std::size_t k = 0; k + 1 < cols.size(); ++k)
        for (std::size_t l = 0; l + 1 < rows.size(); ++l)
            if (inducedVertex(k, l) && inducedVertex(k + 1, l) && inducedVertex(k, l + 1) &&
                inducedVertex(k + 1, l + 1))
                cells.push_back({static_cast<int>(k) + 1, static_cast<int>(l) + 1});
    if (cells.empty()) throw std::invalid_argument("induced collection has no cells");
    return CellCollection(std::move(cells));
}

ShapeProfile shape_profile(const CellCollection& c) {
    if (!is_convex(c)) throw std::invalid_argument("shape_profile requires a convex polyomino");
    const int m = c.bbox_m(), n = c.bbox_n();
    ShapeProfile p;
    p.corner_present = {c.has_vertex(1, 1), c.has_vertex(m, 1), c.has_vertex(1, n),
                        c.has_vertex(m, n)};
    p.inner_corner_present = {c.has_vertex(2, 2), c.has_vertex(m - 1, 2), c.has_vertex(2, n - 1),
                              c.has_vertex(m - 1, n - 1)};
    p.i1 = m + 1; p.i2 = 0; p.i3 = m + 1; p.i4 = 0;
    p.j1 = n + 1; p.j2 = 0; p.j3 = n + 1; p.j4 = 0;
    for (const auto& v : c.vertex_set()) {
        if (v.y == 1) { p.i1 = std::min(p.i1, v.x); p.i2 = std::max(p.i2, v.x); }
        if (v.y == n) { p.i3 = std::min(p.i3, v.x); p.i4 = std::max(p.i4, v.x); }
        if (v.x == 1) { p.j1 = std::min(p.j1, v.y); p.j2 = std::max(p.j2, v.y); }
        if (v.x == m) { p.j3 = std::min(p.j3, v.y); p.j4 = std::max(p.j4, v.y); }
    }
    return p;
}

namespace {

int bottom_row_width(const CellCollection& c) {
    int count = 0;
    for (const auto& cell : c.cells())
        if (cell.y == 1) ++count;
    return count;
}

int max_column_height(const CellCollection& c) {
    std::map<int, int> colCount;
    for (const auto& cell : c.cells()) ++colCount[cell.x];
    int h = 0;
    for (const auto& [x, cnt] : colCount) h = std::max(h, cnt);
    return h;
}

bool column_convex(const CellCollection& c) {
    std::map<int, std::pair<int, int>> cols;
    std::map<int, int> colCount;
    for (const auto& cell : c.cells()) {
        auto [it, fresh] = cols.try_emplace(cell.x, std::pair{cell.y, cell.y});
        if (!fresh) {
            it->second.first = std::min(it->second.first, cell.y);
            it->second.second = std::max(it->second.second, cell.y);
        }
        ++colCount[cell.x];
    }
    for (const auto& [x, span] : cols)
        if (colCount[x] != span.second - span.first + 1) return false;
    return true;
}

} // namespace

bool is_stack_polyomino(const CellCollection& c) {
    return column_convex(c) && bottom_row_width(c) == c.bbox_m() - 1;
}

CellCollection remove_bottom_rows(const CellCollection& c, int k) {
    std::vector<GridPoint> cells;
    for (const auto& cell : c.cells())
        if (cell.y > k) cells.push_back(cell);
    if (cells.empty()) throw std::invalid_argument("no cells remain after truncation");
    return CellCollection(std::move(cells));
}

StackProfile stack_profile(const CellCollection& c) {
    if (!is_stack_polyomino(c))
        throw std::invalid_argument("not a stack polyomino (column convex, full bottom row)");
    StackProfile p;
    p.width = bottom_row_width(c);
    p.height = max_column_height(c);
    CellCollection trunc = c;
    p.truncations.push_back(p.width);
    for (int k = 1; k < p.height; ++k) {
        trunc = remove_bottom_rows(trunc, 1);
        p.truncations.push_back(bottom_row_width(trunc));
    }
    p.jumps.push_back(0);  // index 0 denotes the untruncated polyomino
    for (int k = 1; k < p.height; ++k)
        if (p.truncations[k] < p.truncations[k - 1]) p.jumps.push_back(k);
    return p;
}

} // namespace polybetti
