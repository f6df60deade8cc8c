#include "polybetti/homology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "polybetti/errors.hpp"
#include "polybetti/field.hpp"
#include "polybetti/matrix.hpp"
#include "polybetti/toric.hpp"

namespace polybetti {

namespace {

struct FaceHash {
    std::size_t operator()(const std::vector<int>& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

long long SimplicialComplex::face_count(int d) const {
    long long c = 0;
    for (const auto& f : faces)
        if (static_cast<int>(f.size()) == d + 1) ++c;
    return c;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    // sum of (-1)^dim over all faces including the empty one; equals
    // sum_i (-1)^i dim H~_i by Euler-Poincare
    long long chi = 0;
    for (const auto& f : faces) chi += (f.size() % 2 == 0) ? -1 : 1;
    return chi;
}

SimplicialComplex divisor_complex(MembershipCache& cache, const std::vector<int>& h) {
    const auto& sg = cache.semigroup();
    if (!cache.contains(h)) throw std::invalid_argument("h is not a semigroup element");

    std::vector<int> verts;
    const auto& gens = sg.generators();
    std::vector<int> residual(h);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        bool ok = true;
        for (int k = 0; k < sg.ambient_dim(); ++k) {
            residual[k] = h[k] - gens[g][k];
            if (residual[k] < 0) ok = false;
        }
        if (ok && cache.contains(residual)) verts.push_back(static_cast<int>(g));
    }

    SimplicialComplex cx;
    cx.vertexCount = static_cast<int>(verts.size());
    cx.vertexLabels = verts;
    cx.faces.push_back({});  // the empty face

    // depth-first enumeration; supersets of non-faces are never faces, so
    // pruning on the extension test is sound
    std::vector<int> face;
    std::vector<int> res(h);
    std::function<void(int)> grow = [&](int fromIdx) {
        for (int vi = fromIdx; vi < cx.vertexCount; ++vi) {
            const auto& g = gens[verts[vi]];
            bool ok = true;
            for (int k = 0; k < sg.ambient_dim(); ++k) {
                res[k] -= g[k];
                if (res[k] < 0) ok = false;
            }
            if (ok && cache.contains(res)) {
                face.push_back(vi);
                cx.faces.push_back(face);
                if (cx.faces.size() > 4'000'000) throw CapExceeded("face enumeration cap");
                grow(vi + 1);
                face.pop_back();
            }
            for (int k = 0; k < sg.ambient_dim(); ++k) res[k] += g[k];
        }
    };
    grow(0);

    std::sort(cx.faces.begin(), cx.faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cx;
}

namespace {

template <class F>
long long homology_rank_impl(const SimplicialComplex& cx, int i, F field) {
    if (i < -1) return 0;
    // group faces by dimension
    std::unordered_map<std::vector<int>, int, FaceHash> index[2];  // dims i-1 and i
    long long cDim[3] = {0, 0, 0};  // |C_{i-1}|, |C_i|, |C_{i+1}|
    std::vector<const std::vector<int>*> facesAt[3];
    for (const auto& f : cx.faces) {
        int d = static_cast<int>(f.size()) - 1;
        if (d < i - 1 || d > i + 1) continue;
        int slot = d - (i - 1);
        ++cDim[slot];
        facesAt[slot].push_back(&f);
    }
    if (cDim[1] == 0) return 0;
    for (int slot = 0; slot < 2; ++slot) {
        int id = 0;
        for (const auto* f : facesAt[slot]) index[slot].emplace(*f, id++);
    }

    auto boundary_rank = [&](int topSlot) -> long long {
        // matrix of d: C_topSlot -> C_{topSlot-1}
        if (cDim[topSlot] == 0 || cDim[topSlot - 1] == 0) return 0;
        Matrix<F> M(field, static_cast<std::size_t>(cDim[topSlot - 1]),
                    static_cast<std::size_t>(cDim[topSlot]));
        for (long long col = 0; col < cDim[topSlot]; ++col) {
            const auto& f = *facesAt[topSlot][static_cast<std::size_t>(col)];
            for (std::size_t p = 0; p < f.size(); ++p) {
                std::vector<int> sub;
                sub.reserve(f.size() - 1);
                for (std::size_t q = 0; q < f.size(); ++q)
                    if (q != p) sub.push_back(f[q]);
                auto it = index[topSlot - 1].find(sub);
                if (it == index[topSlot - 1].end()) continue;  // unreachable for subset-closed face lists
                auto e = (p % 2 == 0) ? field.one() : field.neg(field.one());
                M.at(static_cast<std::size_t>(it->second), static_cast<std::size_t>(col)) = e;
            }
            if (f.empty()) { /* no subfaces */ }
        }
        return static_cast<long long>(M.rank());
    };

    long long rankDi = boundary_rank(1);   // d_i : C_i -> C_{i-1}
    long long rankDi1 = boundary_rank(2);  // d_{i+1} : C_{i+1} -> C_i
    return cDim[1] - rankDi - rankDi1;
}

} // namespace

long long reduced_homology_rank(const SimplicialComplex& cx, int i, const FieldSpec& field) {
    if (field.rational) return homology_rank_impl(cx, i, RationalField{});
    return homology_rank_impl(cx, i, PrimeField{field.prime});
}

namespace {

struct Skeleton {
    std::vector<int> verts;                    // generator indices
    std::vector<std::pair<int, int>> edges;    // local vertex index pairs
    long long cycleDim{};
};

Skeleton two_skeleton(MembershipCache& cache, const std::vector<int>& h) {
    const auto& sg = cache.semigroup();
    const auto& gens = sg.generators();
    const int dim = sg.ambient_dim();

    Skeleton sk;
    std::vector<int> res(dim);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        bool ok = true;
        for (int k = 0; k < dim; ++k) {
            res[k] = h[k] - gens[g][k];
            if (res[k] < 0) ok = false;
        }
        if (ok && cache.contains(res)) sk.verts.push_back(static_cast<int>(g));
    }
    const int V = static_cast<int>(sk.verts.size());

    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int comps = V;

    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v) {
            bool ok = true;
            for (int k = 0; k < dim; ++k) {
                res[k] = h[k] - gens[sk.verts[u]][k] - gens[sk.verts[v]][k];
                if (res[k] < 0) ok = false;
            }
            if (!ok || !cache.contains(res)) continue;
            sk.edges.emplace_back(u, v);
            int a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    sk.cycleDim = static_cast<long long>(sk.edges.size()) - V + comps;
    return sk;
}

template <class F>
long long h1_rank_impl(MembershipCache& cache, const std::vector<int>& h, F field) {
    Skeleton sk = two_skeleton(cache, h);
    if (sk.cycleDim == 0) return 0;

    const auto& sg = cache.semigroup();
    const auto& gens = sg.generators();
    const int dim = sg.ambient_dim();
    const int V = static_cast<int>(sk.verts.size());

    std::unordered_map<long long, std::size_t> edgeIndex;
    for (std::size_t e = 0; e < sk.edges.size(); ++e)
        edgeIndex.emplace(static_cast<long long>(sk.edges[e].first) * V + sk.edges[e].second, e);

    SpanBasis<F> span(field, sk.edges.size());
    std::vector<int> res(dim);
    // triangles feed an incremental rank of d_2; stop once span saturates
    // the cycle space
    for (std::size_t e = 0; e < sk.edges.size() && span.rank() < static_cast<std::size_t>(sk.cycleDim); ++e) {
        auto [u, v] = sk.edges[e];
        for (int w = v + 1; w < V; ++w) {
            bool ok = true;
            for (int k = 0; k < dim; ++k) {
                res[k] = h[k] - gens[sk.verts[u]][k] - gens[sk.verts[v]][k] - gens[sk.verts[w]][k];
                if (res[k] < 0) ok = false;
            }
            if (!ok || !cache.contains(res)) continue;
            auto uv = edgeIndex.find(static_cast<long long>(u) * V + v);
            auto uw = edgeIndex.find(static_cast<long long>(u) * V + w);
            auto vw = edgeIndex.find(static_cast<long long>(v) * V + w);
            if (uw == edgeIndex.end() || vw == edgeIndex.end()) continue;  // not a face then
            std::vector<typename F::Elem> row(sk.edges.size(), field.zero());
            row[vw->second] = field.one();
            row[uw->second] = field.neg(field.one());
            row[uv->second] = field.one();
            span.add(std::move(row));
            if (span.rank() >= static_cast<std::size_t>(sk.cycleDim)) break;
        }
    }
    return sk.cycleDim - static_cast<long long>(span.rank());
}

} // namespace

long long divisor_h1_rank(MembershipCache& cache, const std::vector<int>& h,
                          const FieldSpec& field) {
    if (field.rational) return h1_rank_impl(cache, h, RationalField{});
    return h1_rank_impl(cache, h, PrimeField{field.prime});
}

long long BettiTable::algebra_total(int i, int j) const {
    auto it = totals.find({i, j});
    return it == totals.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
    int m = 0;
    for (const auto& [key, val] : totals)
        if (val > 0) m = std::max(m, key.first);
    return m;
}

BettiTable betti_table(const CellCollection& c, int maxTotalDegree, const FieldSpec& field,
                       const HilbertOptions& opts) {
    if (maxTotalDegree < 2) throw std::invalid_argument("degree cap must be >= 2");
    auto sg = semigroup_of(c);
    MembershipCache cache(sg);

    BettiTable table;
    table.degreeCap = maxTotalDegree;
    table.fieldName = field.name();

    for (int d = 0; d <= maxTotalDegree; ++d) {
        for (const auto& h : elements_of_degree(sg, d, opts)) {
            SimplicialComplex cx = divisor_complex(cache, h);
            for (int i = 0; i <= cx.dim() + 1; ++i) {
                long long b = reduced_homology_rank(cx, i - 1, field);
                if (b != 0) {
                    table.multigraded.push_back(BettiEntry{i, sg.make_degree(h), b});
                    table.totals[{i, d}] += b;
                }
            }
        }
    }
    return table;
}

namespace {

std::vector<MultiDegree> syzygy_degree_scan(const CellCollection& c, int lo, int hi,
                                            const FieldSpec& field, bool stopAtFirst) {
    auto sg = semigroup_of(c);
    MembershipCache cache(sg);
    std::vector<MultiDegree> out;
    for (int d = lo; d <= hi; ++d) {
        for (const auto& h : elements_of_degree(sg, d)) {
            if (divisor_h1_rank(cache, h, field) > 0) {
                out.push_back(sg.make_degree(h));
                if (stopAtFirst) return out;
            }
        }
    }
    return out;
}

} // namespace

LinearRelatednessVerdict is_linearly_related_oracle(const CellCollection& c,
                                                    const FieldSpec& field) {
    auto bad = syzygy_degree_scan(c, 4, 4, field, true);
    LinearRelatednessVerdict v;
    v.linearlyRelated = bad.empty();
    if (!bad.empty()) v.witness = bad.front();
    return v;
}

std::vector<MultiDegree> first_syzygy_degrees(const CellCollection& c, int lo, int hi,
                                              const FieldSpec& field) {
    return syzygy_degree_scan(c, lo, hi, field, false);
}

} // namespace polybetti
