#include "polybetti/toric.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "polybetti/errors.hpp"

namespace polybetti {

AffineSemigroup semigroup_of(const CellCollection& c) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(c.vertex_set().size());
    for (const auto& v : c.vertex_set()) edges.emplace_back(v.x, v.y);
    return AffineSemigroup::bipartite(c.bbox_m(), c.bbox_n(), std::move(edges));
}

std::vector<InnerMinor> inner_minors(const CellCollection& c) {
    std::vector<InnerMinor> out;
    const int m = c.bbox_m(), n = c.bbox_n();
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < n; ++j) {
            if (!c.has_vertex(i, j)) continue;
            for (int k = i + 1; k <= m; ++k)
                for (int l = j + 1; l <= n; ++l) {
                    if (c.has_vertex(k, j) && c.has_vertex(i, l) && c.has_vertex(k, l))
                        out.push_back(InnerMinor{
                            {i, j},
                            {k, l},
                            {GridPoint{i, l}, GridPoint{k, j}},
                            {GridPoint{k, l}, GridPoint{i, j}},
                        });
                }
        }
    return out;
}

std::vector<int> minor_multidegree(const InnerMinor& f, int rows, int cols) {
    std::vector<int> d(rows + cols, 0);
    d[f.lo.x - 1] += 1;
    d[f.hi.x - 1] += 1;
    d[rows + f.lo.y - 1] += 1;
    d[rows + f.hi.y - 1] += 1;
    return d;
}

BipartiteGraph bipartite_graph(const CellCollection& c) {
    BipartiteGraph g;
    g.rows = c.bbox_m();
    g.cols = c.bbox_n();
    for (const auto& v : c.vertex_set()) g.edges.emplace_back(v.x, v.y);
    return g;
}

std::pair<int, int> find_chord_pivot(const std::vector<int>& f) {
    const int r = static_cast<int>(f.size()) - 1;
    if (r < 3) throw std::invalid_argument("sequence needs r >= 3");
    if (f.front() != f.back()) throw std::invalid_argument("sequence must close up: f(r+1) = f(1)");
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (f[i] == f[j]) throw std::invalid_argument("sequence must be injective on [r]");

    for (int s = 1; s <= r; ++s) {
        const int a = f[s - 1], b = f[s];  // f(s), f(s+1)
        for (int t = 1; t <= r; ++t) {
            if (t == s || t == s + 1 || (s == r && t == 1)) continue;
            const int v = f[t - 1];
            if ((a < v && v < b) || (b < v && v < a)) return {s, t};
        }
    }
    throw std::logic_error("no chord pivot found; preconditions violated");
}

namespace {

struct CycleSearch {
    int n{};                                // total vertices, left block first
    int rows{};
    std::vector<std::uint64_t> adj;
    long long budget = 20'000'000;

    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }

    // First chordless cycle of length >= 6, as a vertex list, if any.
    std::optional<std::vector<int>> find_long_induced_cycle(long long* visited) {
        std::vector<int> path;
        for (int v = 0; v < n; ++v) {
            path.assign(1, v);
            std::uint64_t used = 1ull << v;
            if (auto cyc = extend(path, used, visited)) return cyc;
        }
        return std::nullopt;
    }

    std::optional<std::vector<int>> extend(std::vector<int>& path, std::uint64_t used,
                                           long long* visited) {
        if (--budget < 0) throw CapExceeded("cycle enumeration budget exhausted");
        const int start = path.front(), last = path.back();
        for (int w = start + 1; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (!edge(last, w)) continue;
            // chord against any path vertex strictly between start and last
            std::uint64_t internal = used & ~(1ull << last) & ~(1ull << start);
            if (adj[w] & internal) continue;
            if (path.size() >= 2 && edge(w, start)) {
                // closes a chordless cycle
                if (path.size() + 1 >= 4 && path[1] < w) {
                    ++*visited;
                    if (path.size() + 1 >= 6) {
                        std::vector<int> cyc = path;
                        cyc.push_back(w);
                        return cyc;
                    }
                }
                continue;  // extending past w would re-create the chord w-start
            }
            path.push_back(w);
            if (auto cyc = extend(path, used | (1ull << w), visited)) return cyc;
            path.pop_back();
        }
        return std::nullopt;
    }

    // Plain simple-cycle walk used only for chord sampling.
    void sample_cycles(int want, std::vector<std::vector<int>>& out) {
        std::vector<int> path;
        for (int v = 0; v < n && static_cast<int>(out.size()) < want; ++v) {
            path.assign(1, v);
            sample_extend(path, 1ull << v, want, out);
        }
    }

    void sample_extend(std::vector<int>& path, std::uint64_t used, int want,
                       std::vector<std::vector<int>>& out) {
        if (static_cast<int>(out.size()) >= want) return;
        if (--budget < 0) return;
        const int start = path.front(), last = path.back();
        for (int w = start + 1; w < n; ++w) {
            if (static_cast<int>(out.size()) >= want) return;
            if ((used >> w) & 1) continue;
            if (!edge(last, w)) continue;
            if (edge(w, start) && path.size() + 1 >= 6 && path[1] < w) {
                std::vector<int> cyc = path;
                cyc.push_back(w);
                out.push_back(std::move(cyc));
                if (static_cast<int>(out.size()) >= want) return;
            }
            path.push_back(w);
            sample_extend(path, used | (1ull << w), want, out);
            path.pop_back();
        }
    }
};

// Rotates a cycle vertex list so it starts at a left vertex and lists the
// P-vertices (edges) along the way.
std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& cyc, int rows) {
    std::vector<int> nodes = cyc;
    if (nodes.front() >= rows) {
        std::rotate(nodes.begin(), nodes.begin() + 1, nodes.end());
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        int u = nodes[k], v = nodes[(k + 1) % nodes.size()];
        if (u >= rows) std::swap(u, v);
        edges.emplace_back(u + 1, v - rows + 1);
    }
    return edges;
}

} // namespace

ChordalityCertificate quadratic_gb_certificate(const BipartiteGraph& g, int sampleChords) {
    const int n = g.rows + g.cols;
    if (n > 63) throw CapExceeded("graph too large for the cycle search");
    CycleSearch cs;
    cs.n = n;
    cs.rows = g.rows;
    cs.adj.assign(n, 0);
    std::vector<std::uint64_t> edgeSet(g.rows + 1, 0);
    for (auto [i, j] : g.edges) {
        int u = i - 1, v = g.rows + j - 1;
        cs.adj[u] |= 1ull << v;
        cs.adj[v] |= 1ull << u;
        edgeSet[i] |= 1ull << j;
    }

    ChordalityCertificate cert;
    auto witness = cs.find_long_induced_cycle(&cert.inducedCyclesChecked);
    cert.quadratic = !witness.has_value();
    if (witness) cert.chordlessCycle = cycle_edges(*witness, g.rows);

    if (sampleChords > 0) {
        std::vector<std::vector<int>> cycles;
        cs.budget = 5'000'000;
        cs.sample_cycles(sampleChords, cycles);
        for (const auto& cyc : cycles) {
            auto edges = cycle_edges(cyc, g.rows);
            // i-sequence of the cycle: first components of every other vertex
            std::vector<int> f;
            for (std::size_t k = 0; k < edges.size(); k += 2) f.push_back(edges[k].first);
            f.push_back(f.front());
            auto [s, t] = find_chord_pivot(f);
            int ci = f[t - 1];
            int cj = edges[2 * (s - 1)].second;  // j_s
            if (cj >= 1 && ci >= 1 && ci <= g.rows && ((edgeSet[ci] >> cj) & 1))
                cert.sampledChords.push_back(SampledChord{edges, {s, t}, {ci, cj}});
        }
    }
    return cert;
}

} // namespace polybetti
