#include "polybetti/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "polybetti/errors.hpp"

namespace polybetti {

Poset::Poset(int n, std::vector<std::pair<int, int>> relations) : n_(n) {
    if (n < 0 || n > 31) throw std::invalid_argument("poset size out of range");
    lessMat_.assign(static_cast<std::size_t>(n) * n, false);
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw std::invalid_argument("bad relation pair");
        lessMat_[idx(a, b)] = true;
    }
    // transitive closure
    for (int k = 1; k <= n; ++k)
        for (int a = 1; a <= n; ++a)
            if (less(a, k))
                for (int b = 1; b <= n; ++b)
                    if (less(k, b)) lessMat_[idx(a, b)] = true;
    for (int a = 1; a <= n; ++a)
        if (less(a, a)) throw std::invalid_argument("relation has a cycle");
    // irredundant covers
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int c = 1; c <= n && direct; ++c)
                if (less(a, c) && less(c, b)) direct = false;
            if (direct) covers_.emplace_back(a, b);
        }
}

Poset Poset::antichain(int n) { return Poset(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> cov;
    for (int i = 1; i < n; ++i) cov.emplace_back(i, i + 1);
    return Poset(n, std::move(cov));
}

Poset Poset::disjoint_union(const Poset& a, const Poset& b) {
    std::vector<std::pair<int, int>> cov = a.covers();
    for (auto [x, y] : b.covers()) cov.emplace_back(x + a.size(), y + a.size());
    return Poset(a.size() + b.size(), std::move(cov));
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

std::string Poset::canonical_key() const {
    if (n_ > 8) throw CapExceeded("canonical form guarded to posets with <= 8 elements");
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc(static_cast<std::size_t>(n_) * n_, '0');
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                if (less(a, b))
                    enc[static_cast<std::size_t>(perm[a - 1]) * n_ + perm[b - 1]] = '1';
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n_) + ":" + best;
}

bool poset_isomorphic(const Poset& a, const Poset& b) {
    return a.size() == b.size() && a.canonical_key() == b.canonical_key();
}

bool DistLattice::leq(int a, int b) const {
    return (ideals_[a] & ~ideals_[b]) == 0;
}

int DistLattice::join(int a, int b) const { return index_of(ideals_[a] | ideals_[b]); }
int DistLattice::meet(int a, int b) const { return index_of(ideals_[a] & ideals_[b]); }

int DistLattice::index_of(std::uint32_t mask) const {
    auto cmp = [](std::uint32_t x, std::uint32_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    };
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), mask, cmp);
    if (it == ideals_.end() || *it != mask) throw std::logic_error("not a lattice element");
    return static_cast<int>(it - ideals_.begin());
}

DistLattice order_ideal_lattice(const Poset& p, int cap) {
    if (p.size() > cap) throw CapExceeded("poset exceeds the ideal-lattice cap");
    DistLattice l;
    l.base_ = p;
    const int n = p.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool down = true;
        for (auto [a, b] : p.covers())
            if ((mask >> (b - 1)) & 1u)
                if (!((mask >> (a - 1)) & 1u)) { down = false; break; }
        if (down) l.ideals_.push_back(mask);
    }
    std::sort(l.ideals_.begin(), l.ideals_.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    return l;
}

Poset join_irreducibles(const DistLattice& l) {
    const int N = l.size();
    std::vector<int> irr;
    for (int e = 0; e < N; ++e) {
        // count lower covers of e
        int covers = 0;
        for (int f = 0; f < N; ++f) {
            if (f == e || !l.leq(f, e)) continue;
            bool isCover = true;
            for (int g = 0; g < N && isCover; ++g)
                if (g != e && g != f && l.leq(f, g) && l.leq(g, e)) isCover = false;
            if (isCover) ++covers;
        }
        if (covers == 1) irr.push_back(e);
    }
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = 0; j < irr.size(); ++j)
            if (i != j && l.leq(irr[i], irr[j]))
                rel.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return Poset(static_cast<int>(irr.size()), std::move(rel));
}

bool lattice_isomorphic(const DistLattice& a, const DistLattice& b) {
    if (a.size() != b.size()) return false;
    return poset_isomorphic(join_irreducibles(a), join_irreducibles(b));
}

bool is_simple(const DistLattice& l) {
    Poset p = join_irreducibles(l);
    for (int x = 1; x <= p.size(); ++x) {
        bool dominates = true;
        for (int y = 1; y <= p.size() && dominates; ++y)
            if (!p.comparable(x, y)) dominates = false;
        if (dominates) return false;
    }
    return true;
}

HVector h_vector_of_poset(const Poset& p) {
    const int n = p.size();
    if (n > 10) throw CapExceeded("linear-extension enumeration guarded to <= 10 elements");

    // natural labeling: topological order, smallest original index first
    std::vector<int> label(n + 1, 0);
    {
        std::vector<int> indeg(n + 1, 0);
        for (auto [a, b] : p.covers()) ++indeg[b];
        std::vector<bool> used(n + 1, false);
        for (int next = 1; next <= n; ++next) {
            int pick = -1;
            for (int v = 1; v <= n; ++v)
                if (!used[v] && indeg[v] == 0) { pick = v; break; }
            used[pick] = true;
            label[pick] = next;
            for (auto [a, b] : p.covers())
                if (a == pick) --indeg[b];
        }
    }

    std::vector<long long> tally(std::max(1, n), 0);
    std::vector<bool> used(n + 1, false);
    std::vector<int> word;
    std::function<void()> rec = [&] {
        if (static_cast<int>(word.size()) == n) {
            int desc = 0;
            for (std::size_t i = 0; i + 1 < word.size(); ++i)
                if (word[i] > word[i + 1]) ++desc;
            ++tally[static_cast<std::size_t>(desc)];
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool minimal = true;
            for (int u = 1; u <= n && minimal; ++u)
                if (!used[u] && p.less(u, v)) minimal = false;
            if (!minimal) continue;
            used[v] = true;
            word.push_back(label[v]);
            rec();
            word.pop_back();
            used[v] = false;
        }
    };
    rec();

    while (tally.size() > 1 && tally.back() == 0) tally.pop_back();
    return HVector{std::move(tally), n + 1};
}

bool is_pure(const Poset& p) {
    const int n = p.size();
    if (n == 0) return true;
    int target = -1;
    std::vector<int> chain;
    bool pure = true;
    std::function<void(int)> rec = [&](int v) {
        if (!pure) return;
        chain.push_back(v);
        bool maximal = true;
        for (int w = 1; w <= n; ++w)
            if (p.less(v, w)) {
                maximal = false;
                // only extend along covers: every maximal chain is cover-saturated
                bool isCover = true;
                for (int u = 1; u <= n && isCover; ++u)
                    if (p.less(v, u) && p.less(u, w)) isCover = false;
                if (isCover) rec(w);
            }
        if (maximal) {
            if (target < 0) target = static_cast<int>(chain.size());
            else if (target != static_cast<int>(chain.size())) pure = false;
        }
        chain.pop_back();
    };
    for (int v = 1; v <= n && pure; ++v) {
        bool minimal = true;
        for (int u = 1; u <= n && minimal; ++u)
            if (p.less(u, v)) minimal = false;
        if (minimal) rec(v);
    }
    return pure;
}

std::vector<JoinMeetBinomial> join_meet_generators(const DistLattice& l) {
    std::vector<JoinMeetBinomial> out;
    for (int a = 0; a < l.size(); ++a)
        for (int b = a + 1; b < l.size(); ++b) {
            if (l.leq(a, b) || l.leq(b, a)) continue;
            out.push_back(JoinMeetBinomial{a, b, l.meet(a, b), l.join(a, b)});
        }
    return out;
}

AffineSemigroup hibi_semigroup(const DistLattice& l) {
    const Poset& p = l.base();
    std::vector<std::pair<int, int>> strictLess;
    for (auto [a, b] : p.strict_pairs()) strictLess.emplace_back(a - 1, b - 1);
    std::vector<std::vector<int>> indicators;
    indicators.reserve(l.ideal_masks().size());
    for (std::uint32_t mask : l.ideal_masks()) {
        std::vector<int> ind(p.size(), 0);
        for (int q = 0; q < p.size(); ++q)
            if ((mask >> q) & 1u) ind[q] = 1;
        indicators.push_back(std::move(ind));
    }
    return AffineSemigroup::hibi(p.size(), std::move(strictLess), std::move(indicators));
}

LatticeClass classify_lattice(const DistLattice& l) {
    if (!is_simple(l)) throw std::invalid_argument("classify_lattice requires a simple lattice");
    Poset p = join_irreducibles(l);
    LatticeClass out;

    // chain plus one incomparable point
    for (int x = 1; x <= p.size() && !out.linearResolution; ++x) {
        bool isolated = true;
        for (int y = 1; y <= p.size() && isolated; ++y)
            if (y != x && p.comparable(x, y)) isolated = false;
        if (!isolated) continue;
        bool chain = true;
        for (int a = 1; a <= p.size() && chain; ++a)
            for (int b = a + 1; b <= p.size() && chain; ++b)
                if (a != x && b != x && !p.comparable(a, b)) chain = false;
        if (chain) out.linearResolution = true;
    }

    static const std::vector<std::string> extremalKeys = [] {
        std::vector<std::string> keys;
        keys.push_back(Poset::antichain(3).canonical_key());
        keys.push_back(Poset::disjoint_union(Poset::chain(2), Poset::chain(2)).canonical_key());
        keys.push_back(Poset(4, {{1, 2}, {3, 4}, {1, 4}}).canonical_key());
        keys.push_back(Poset(4, {{1, 2}, {3, 4}, {1, 4}, {3, 2}}).canonical_key());
        return keys;
    }();
    if (p.size() == 3 || p.size() == 4) {
        auto key = p.canonical_key();
        out.extremalGorenstein =
            std::find(extremalKeys.begin(), extremalKeys.end(), key) != extremalKeys.end();
    }
    return out;
}

Poset parse_poset_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("poset JSON needs an integer \"n\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers"))
        for (const auto& e : j["covers"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("cover entries must be [a,b] pairs");
            covers.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    return Poset(n, std::move(covers));
}

std::string poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["n"] = p.size();
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
    return j.dump();
}

} // namespace polybetti
