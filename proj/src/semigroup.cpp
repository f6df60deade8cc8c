#include "polybetti/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "polybetti/errors.hpp"
#include "polybetti/field.hpp"
#include "polybetti/matrix.hpp"

namespace polybetti {

namespace {

// Byte-packs a nonnegative small vector for hashing.  Coordinates are capped
// well below 255 by the degree horizons in use.
std::string pack_key(const std::vector<int>& v) {
    std::string key(v.size(), '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > 250) throw CapExceeded("coordinate outside packable range");
        key[i] = static_cast<char>(v[i]);
    }
    return key;
}

std::vector<int> unpack_key(const std::string& key) {
    std::vector<int> v(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) v[i] = static_cast<unsigned char>(key[i]);
    return v;
}

} // namespace

AffineSemigroup AffineSemigroup::bipartite(int rows, int cols,
                                           std::vector<std::pair<int, int>> edges) {
    if (rows <= 0 || cols <= 0 || edges.empty())
        throw std::invalid_argument("bipartite semigroup needs rows, cols and edges");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    AffineSemigroup sg;
    sg.kind_ = MembershipKind::BipartiteFlow;
    sg.rows_ = rows;
    sg.cols_ = cols;
    sg.ambientDim_ = rows + cols;
    sg.edges_ = std::move(edges);
    sg.adj_.assign(rows + 1, {});
    for (auto [i, j] : sg.edges_) {
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::invalid_argument("edge endpoint out of range");
        std::vector<int> g(sg.ambientDim_, 0);
        g[i - 1] = 1;
        g[rows + j - 1] = 1;
        sg.gens_.push_back(std::move(g));
        sg.adj_[i].push_back(j);
    }
    return sg;
}

AffineSemigroup AffineSemigroup::hibi(int posetSize,
                                      std::vector<std::pair<int, int>> strictLess,
                                      std::vector<std::vector<int>> idealIndicators) {
    AffineSemigroup sg;
    sg.kind_ = MembershipKind::HibiMonotone;
    sg.posetSize_ = posetSize;
    sg.ambientDim_ = posetSize + 1;
    sg.strictLess_ = std::move(strictLess);
    for (auto& ind : idealIndicators) {
        if (static_cast<int>(ind.size()) != posetSize)
            throw std::invalid_argument("indicator size mismatch");
        ind.push_back(1);
        sg.gens_.push_back(std::move(ind));
    }
    return sg;
}

AffineSemigroup AffineSemigroup::generic(std::vector<std::vector<int>> generators) {
    if (generators.empty()) throw std::invalid_argument("semigroup needs generators");
    AffineSemigroup sg;
    sg.kind_ = MembershipKind::GenericSearch;
    sg.ambientDim_ = static_cast<int>(generators[0].size());
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != sg.ambientDim_)
            throw std::invalid_argument("generator dimension mismatch");
    sg.gens_ = std::move(generators);
    std::sort(sg.gens_.begin(), sg.gens_.end());
    sg.gens_.erase(std::unique(sg.gens_.begin(), sg.gens_.end()), sg.gens_.end());
    return sg;
}

int AffineSemigroup::degree_of(const std::vector<int>& h) const {
    if (static_cast<int>(h.size()) != ambientDim_)
        throw std::invalid_argument("dimension mismatch");
    switch (kind_) {
        case MembershipKind::BipartiteFlow:
            return std::accumulate(h.begin(), h.begin() + rows_, 0);
        case MembershipKind::HibiMonotone:
            return h.back();
        case MembershipKind::GenericSearch: {
            int gsum = std::accumulate(gens_[0].begin(), gens_[0].end(), 0);
            for (const auto& g : gens_)
                if (std::accumulate(g.begin(), g.end(), 0) != gsum)
                    throw std::invalid_argument("degree undefined: generators of unequal weight");
            int s = std::accumulate(h.begin(), h.end(), 0);
            if (gsum == 0 || s % gsum != 0)
                throw std::invalid_argument("element weight not a multiple of generator weight");
            return s / gsum;
        }
    }
    return 0;
}

MultiDegree AffineSemigroup::make_degree(std::vector<int> h) const {
    MultiDegree d;
    d.total = degree_of(h);
    d.v = std::move(h);
    return d;
}

bool AffineSemigroup::contains(const std::vector<int>& h) const {
    if (static_cast<int>(h.size()) != ambientDim_)
        throw std::invalid_argument("dimension mismatch");
    for (int x : h)
        if (x < 0) return false;
    switch (kind_) {
        case MembershipKind::BipartiteFlow: return contains_flow(h);
        case MembershipKind::HibiMonotone: return contains_hibi(h);
        case MembershipKind::GenericSearch: return contains_search(h);
    }
    return false;
}

// Transportation feasibility: a nonnegative integer matrix supported on the
// edge set with prescribed row and column sums exists iff max-flow saturates
// the supply.  Integrality comes for free from integer capacities.
bool AffineSemigroup::contains_flow(const std::vector<int>& h) const {
    long long rowSum = 0, colSum = 0;
    for (int i = 0; i < rows_; ++i) rowSum += h[i];
    for (int j = 0; j < cols_; ++j) colSum += h[rows_ + j];
    if (rowSum != colSum) return false;
    if (rowSum == 0) return true;

    const int n = rows_ + cols_ + 2;
    const int src = 0, snk = n - 1;
    std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
    for (int i = 0; i < rows_; ++i) cap[src][1 + i] = h[i];
    for (int j = 0; j < cols_; ++j) cap[1 + rows_ + j][snk] = h[rows_ + j];
    for (int i = 1; i <= rows_; ++i)
        for (int j : adj_[i]) cap[i][rows_ + j] = rowSum;  // effectively unbounded

    long long flow = 0;
    while (true) {
        std::vector<int> parent(n, -1);
        parent[src] = src;
        std::queue<int> bfs;
        bfs.push(src);
        while (!bfs.empty() && parent[snk] < 0) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < n; ++v)
                if (parent[v] < 0 && cap[u][v] > 0) {
                    parent[v] = u;
                    bfs.push(v);
                }
        }
        if (parent[snk] < 0) break;
        long long aug = rowSum;
        for (int v = snk; v != src; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
        for (int v = snk; v != src; v = parent[v]) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
    return flow == rowSum;
}

// h = (w_1..w_d, delta) is a sum of delta order-ideal indicators iff the
// multiplicity function w is order-reversing and bounded by delta: the
// layers {p : w_p >= k}, k = 1..delta, are then a chain of order ideals
// summing to h.
bool AffineSemigroup::contains_hibi(const std::vector<int>& h) const {
    const int delta = h.back();
    for (int p = 0; p < posetSize_; ++p)
        if (h[p] > delta) return false;
    for (auto [a, b] : strictLess_)
        if (h[a] < h[b]) return false;
    return true;
}

bool AffineSemigroup::contains_search(const std::vector<int>& h) const {
    long long budget = 10'000'000;
    // generators tried in descending index order; representations are found
    // as index-monotone chains, so each multiset is visited once
    std::vector<int> cur = h;
    auto allZero = [&] {
        return std::all_of(cur.begin(), cur.end(), [](int x) { return x == 0; });
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t maxIdx) -> bool {
        if (allZero()) return true;
        if (--budget < 0) throw CapExceeded("membership search budget exhausted");
        for (std::size_t gi = maxIdx; gi-- > 0;) {
            const auto& g = gens_[gi];
            bool fits = true;
            for (int k = 0; k < ambientDim_; ++k)
                if (cur[k] < g[k]) { fits = false; break; }
            if (!fits) continue;
            for (int k = 0; k < ambientDim_; ++k) cur[k] -= g[k];
            if (rec(gi + 1)) return true;
            for (int k = 0; k < ambientDim_; ++k) cur[k] += g[k];
        }
        return false;
    };
    return rec(gens_.size());
}

bool MembershipCache::contains(const std::vector<int>& h) {
    for (int x : h)
        if (x < 0) return false;
    std::string key = pack_key(h);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = sg_.contains(h);
    memo_.emplace(std::move(key), r);
    return r;
}

namespace {

std::vector<std::unordered_set<std::string>> closure_levels(const AffineSemigroup& sg, int d,
                                                            const HilbertOptions& opts) {
    std::vector<std::unordered_set<std::string>> levels(d + 1);
    levels[0].insert(pack_key(std::vector<int>(sg.ambient_dim(), 0)));
    for (int t = 1; t <= d; ++t) {
        auto& cur = levels[t];
        for (const auto& key : levels[t - 1]) {
            std::vector<int> base = unpack_key(key);
            for (const auto& g : sg.generators()) {
                std::vector<int> next = base;
                for (int k = 0; k < sg.ambient_dim(); ++k) next[k] += g[k];
                cur.insert(pack_key(next));
                if (cur.size() > opts.maxElements)
                    throw CapExceeded("closure level exceeds element cap");
            }
        }
    }
    return levels;
}

} // namespace

std::vector<long long> hilbert_series_prefix(const AffineSemigroup& sg, int d,
                                             const HilbertOptions& opts) {
    auto levels = closure_levels(sg, d, opts);
    std::vector<long long> counts(d + 1);
    for (int t = 0; t <= d; ++t) counts[t] = static_cast<long long>(levels[t].size());
    return counts;
}

long long hilbert_function(const AffineSemigroup& sg, int d, const HilbertOptions& opts) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    return hilbert_series_prefix(sg, d, opts)[d];
}

std::vector<std::vector<int>> elements_of_degree(const AffineSemigroup& sg, int d,
                                                 const HilbertOptions& opts) {
    auto levels = closure_levels(sg, d, opts);
    std::vector<std::vector<int>> out;
    out.reserve(levels[d].size());
    for (const auto& key : levels[d]) out.push_back(unpack_key(key));
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

HVector h_vector(const AffineSemigroup& sg, const HilbertOptions& opts) {
    // Krull dimension = rank of the generator matrix
    RationalField F;
    Matrix<RationalField> gm(F, sg.generators().size(), sg.ambient_dim());
    for (std::size_t r = 0; r < sg.generators().size(); ++r)
        for (int c = 0; c < sg.ambient_dim(); ++c)
            gm.at(r, c) = F.from_int(sg.generators()[r][c]);
    const int D = static_cast<int>(gm.rank());

    const int cap = 2 * static_cast<int>(sg.generators().size());
    std::vector<std::unordered_set<std::string>> levels(1);
    levels[0].insert(std::string(sg.ambient_dim(), '\0'));
    std::vector<long long> hf{1};

    auto extend = [&](int t) {
        levels.emplace_back();
        auto& cur = levels[t];
        for (const auto& key : levels[t - 1]) {
            std::vector<int> base(key.size());
            for (std::size_t i = 0; i < key.size(); ++i) base[i] = static_cast<unsigned char>(key[i]);
            for (const auto& g : sg.generators()) {
                std::vector<int> next = base;
                for (int k = 0; k < sg.ambient_dim(); ++k) next[k] += g[k];
                cur.insert(pack_key(next));
                if (cur.size() > opts.maxElements)
                    throw CapExceeded("closure level exceeds element cap");
            }
        }
        hf.push_back(static_cast<long long>(cur.size()));
    };

    std::vector<long long> h{1};
    int zeroRun = 0;
    for (int i = 1; zeroRun < 3; ++i) {
        if (i > cap) throw CapExceeded("h-vector did not stabilize within the degree cap");
        extend(i);
        long long hi = 0;
        for (int k = 0; k <= std::min(i, D); ++k)
            hi += (k % 2 ? -1 : 1) * binomial(D, k) * hf[i - k];
        h.push_back(hi);
        zeroRun = (hi == 0) ? zeroRun + 1 : 0;
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return HVector{std::move(h), D};
}

bool is_palindromic(const HVector& hv) {
    auto r = hv.h;
    std::reverse(r.begin(), r.end());
    return r == hv.h;
}

bool is_linear_h_vector(const HVector& hv) { return hv.h.size() <= 2; }

bool is_extremal_h_vector(const HVector& hv) {
    return hv.h.size() == 3 && hv.h[0] == 1 && hv.h[2] == 1 && hv.h[1] > 1;
}

long long hilbert_from_h_vector(const HVector& hv, int t) {
    long long s = 0;
    for (std::size_t i = 0; i < hv.h.size(); ++i)
        s += hv.h[i] * binomial(t - static_cast<long long>(i) + hv.krullDim - 1, hv.krullDim - 1);
    return s;
}

} // namespace polybetti
