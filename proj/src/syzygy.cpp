#include "polybetti/syzygy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polybetti/field.hpp"
#include "polybetti/matrix.hpp"

namespace polybetti {

namespace {

using Monomial = std::vector<int>;  // sorted variable indices, with multiplicity

struct Presentation {
    std::vector<InnerMinor> minors;
    std::vector<GridPoint> vars;    // vertex per variable
    int rows{}, cols{};
    std::map<GridPoint, int> varIndex;

    std::vector<int> var_degree(int v) const {
        std::vector<int> d(rows + cols, 0);
        d[vars[v].x - 1] = 1;
        d[rows + vars[v].y - 1] = 1;
        return d;
    }
    Monomial pair_monomial(const std::array<GridPoint, 2>& pts) const {
        Monomial m{varIndex.at(pts[0]), varIndex.at(pts[1])};
        std::sort(m.begin(), m.end());
        return m;
    }
    int total_degree(const std::vector<int>& h) const {
        int s = 0;
        for (int i = 0; i < rows; ++i) s += h[i];
        return s;
    }
};

struct SliceStats {
    long long relationDim{};
    long long minimalDim{};
};

struct Engine {
    virtual ~Engine() = default;
    virtual SliceStats slice(const std::vector<int>& h) = 0;
    virtual bool koszul_minimal(std::size_t a, std::size_t b) = 0;
};

template <class F>
struct EngineImpl final : Engine {
    const Presentation& pres;
    F field;

    struct Slice {
        std::vector<std::pair<Monomial, int>> basis;
        std::map<std::pair<Monomial, int>, int> basisIndex;
        std::vector<std::vector<typename F::Elem>> kernel;
        std::unique_ptr<SpanBasis<F>> span;  // image of m * Syz_1 in this degree
        SliceStats stats;
    };
    std::map<std::vector<int>, Slice> cache;

    EngineImpl(const Presentation& p, F f) : pres(p), field(f) {}

    void enumerate_monomials(std::vector<int>& d, std::size_t fromVar, Monomial& cur,
                             std::vector<Monomial>& out) const {
        bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
        if (zero) {
            out.push_back(cur);
            return;
        }
        if (fromVar >= pres.vars.size()) return;
        const int rc = pres.vars[fromVar].x - 1;
        const int cc = pres.rows + pres.vars[fromVar].y - 1;
        const int maxCount = std::min(d[rc], d[cc]);
        for (int c = maxCount; c >= 0; --c) {
            d[rc] -= c;
            d[cc] -= c;
            cur.insert(cur.end(), static_cast<std::size_t>(c), static_cast<int>(fromVar));
            enumerate_monomials(d, fromVar + 1, cur, out);
            cur.resize(cur.size() - static_cast<std::size_t>(c));
            d[rc] += c;
            d[cc] += c;
        }
    }

    std::vector<Monomial> monomials_of_degree(const std::vector<int>& d) const {
        int rsum = 0, csum = 0;
        for (int i = 0; i < pres.rows; ++i) rsum += d[i];
        for (int j = 0; j < pres.cols; ++j) csum += d[pres.rows + j];
        std::vector<Monomial> out;
        if (rsum != csum) return out;
        std::vector<int> dd(d);
        Monomial cur;
        enumerate_monomials(dd, 0, cur, out);
        return out;
    }

    const Slice& slice_at(const std::vector<int>& h) {
        auto it = cache.find(h);
        if (it != cache.end()) return it->second;
        Slice s;

        // basis of the degree-h piece of the free presentation module
        for (std::size_t k = 0; k < pres.minors.size(); ++k) {
            std::vector<int> d = h;
            bool ok = true;
            auto fdeg = minor_multidegree(pres.minors[k], pres.rows, pres.cols);
            for (std::size_t q = 0; q < d.size(); ++q) {
                d[q] -= fdeg[q];
                if (d[q] < 0) ok = false;
            }
            if (!ok) continue;
            for (auto& mu : monomials_of_degree(d))
                s.basis.emplace_back(std::move(mu), static_cast<int>(k));
        }
        std::sort(s.basis.begin(), s.basis.end());
        for (std::size_t idx = 0; idx < s.basis.size(); ++idx)
            s.basisIndex.emplace(s.basis[idx], static_cast<int>(idx));

        // presentation map into the degree-h monomials of S
        std::map<Monomial, int> rowIndex;
        std::vector<std::array<std::pair<Monomial, int>, 2>> columns;
        columns.reserve(s.basis.size());
        for (const auto& [mu, k] : s.basis) {
            Monomial plus = mu, minus = mu;
            auto pm = pres.pair_monomial(pres.minors[static_cast<std::size_t>(k)].plus);
            auto mm = pres.pair_monomial(pres.minors[static_cast<std::size_t>(k)].minus);
            plus.insert(plus.end(), pm.begin(), pm.end());
            minus.insert(minus.end(), mm.begin(), mm.end());
            std::sort(plus.begin(), plus.end());
            std::sort(minus.begin(), minus.end());
            rowIndex.try_emplace(plus, static_cast<int>(rowIndex.size()));
            rowIndex.try_emplace(minus, static_cast<int>(rowIndex.size()));
            columns.push_back({std::pair{plus, +1}, std::pair{minus, -1}});
        }
        Matrix<F> M(field, rowIndex.size(), s.basis.size());
        for (std::size_t col = 0; col < columns.size(); ++col)
            for (const auto& [mon, sign] : columns[col]) {
                auto r = static_cast<std::size_t>(rowIndex.at(mon));
                M.at(r, col) = field.add(M.at(r, col), field.from_int(sign));
            }
        s.kernel = M.kernel_basis();
        s.stats.relationDim = static_cast<long long>(s.kernel.size());

        // span of x_v * Syz_1(h - deg x_v) inside this slice
        s.span = std::make_unique<SpanBasis<F>>(field, s.basis.size());
        for (std::size_t v = 0; v < pres.vars.size(); ++v) {
            std::vector<int> h2 = h;
            auto vd = pres.var_degree(static_cast<int>(v));
            bool ok = true;
            for (std::size_t q = 0; q < h2.size(); ++q) {
                h2[q] -= vd[q];
                if (h2[q] < 0) ok = false;
            }
            if (!ok || pres.total_degree(h2) < 2) continue;
            const Slice& sub = slice_at(h2);
            for (const auto& z : sub.kernel) {
                std::vector<typename F::Elem> lifted(s.basis.size(), field.zero());
                for (std::size_t q = 0; q < z.size(); ++q) {
                    if (field.is_zero(z[q])) continue;
                    Monomial mu = sub.basis[q].first;
                    mu.insert(std::lower_bound(mu.begin(), mu.end(), static_cast<int>(v)),
                              static_cast<int>(v));
                    auto idx = s.basisIndex.at({mu, sub.basis[q].second});
                    lifted[static_cast<std::size_t>(idx)] = z[q];
                }
                s.span->add(std::move(lifted));
            }
        }
        s.stats.minimalDim = s.stats.relationDim - static_cast<long long>(s.span->rank());

        auto [pos, inserted] = cache.emplace(h, std::move(s));
        return pos->second;
    }

    SliceStats slice(const std::vector<int>& h) override { return slice_at(h).stats; }

    bool koszul_minimal(std::size_t a, std::size_t b) override {
        auto da = minor_multidegree(pres.minors[a], pres.rows, pres.cols);
        auto db = minor_multidegree(pres.minors[b], pres.rows, pres.cols);
        std::vector<int> h(da.size());
        for (std::size_t q = 0; q < h.size(); ++q) h[q] = da[q] + db[q];
        const Slice& s = slice_at(h);
        if (s.stats.minimalDim == 0) return false;

        std::vector<typename F::Elem> kappa(s.basis.size(), field.zero());
        auto bump = [&](const std::array<GridPoint, 2>& mon, std::size_t comp, int sign) {
            auto mu = pres.pair_monomial(mon);
            auto idx = s.basisIndex.at({mu, static_cast<int>(comp)});
            auto& cell = kappa[static_cast<std::size_t>(idx)];
            cell = field.add(cell, field.from_int(sign));
        };
        // f_a e_b - f_b e_a
        bump(pres.minors[a].plus, b, +1);
        bump(pres.minors[a].minus, b, -1);
        bump(pres.minors[b].plus, a, -1);
        bump(pres.minors[b].minus, a, +1);
        return !s.span->contains(std::move(kappa));
    }
};

Presentation build_presentation(const CellCollection& c) {
    Presentation p;
    p.minors = inner_minors(c);
    p.rows = c.bbox_m();
    p.cols = c.bbox_n();
    p.vars.assign(c.vertex_set().begin(), c.vertex_set().end());
    for (std::size_t v = 0; v < p.vars.size(); ++v)
        p.varIndex.emplace(p.vars[v], static_cast<int>(v));
    return p;
}

} // namespace

struct SyzygyAnalyzer::Impl {
    Presentation pres;
    std::unique_ptr<Engine> engine;
    const AffineSemigroup sg;

    Impl(const CellCollection& c, const FieldSpec& field)
        : pres(build_presentation(c)), sg(semigroup_of(c)) {
        if (field.rational)
            engine = std::make_unique<EngineImpl<RationalField>>(pres, RationalField{});
        else
            engine = std::make_unique<EngineImpl<PrimeField>>(pres, PrimeField{field.prime});
    }
};

SyzygyAnalyzer::SyzygyAnalyzer(const CellCollection& c, const FieldSpec& field)
    : impl_(std::make_unique<Impl>(c, field)) {}
SyzygyAnalyzer::~SyzygyAnalyzer() = default;
SyzygyAnalyzer::SyzygyAnalyzer(SyzygyAnalyzer&&) noexcept = default;

const std::vector<InnerMinor>& SyzygyAnalyzer::minors() const { return impl_->pres.minors; }

SyzygySlice SyzygyAnalyzer::slice(const std::vector<int>& h) {
    auto stats = impl_->engine->slice(h);
    SyzygySlice s;
    s.h = impl_->sg.make_degree(h);
    s.relationDim = stats.relationDim;
    s.minimalDim = stats.minimalDim;
    return s;
}

bool SyzygyAnalyzer::koszul_pair_minimal(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("Koszul pair needs two distinct minors");
    return impl_->engine->koszul_minimal(a, b);
}

std::optional<std::pair<std::size_t, std::size_t>> SyzygyAnalyzer::find_minimal_koszul_pair() {
    const auto n = impl_->pres.minors.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (impl_->engine->koszul_minimal(a, b)) return std::pair{a, b};
    return std::nullopt;
}

SyzygySlice syzygy_slice(const CellCollection& c, const std::vector<int>& h,
                         const FieldSpec& field) {
    SyzygyAnalyzer an(c, field);
    auto sg = semigroup_of(c);
    int deg = sg.degree_of(h);
    if (deg < 3 || deg > 5)
        throw std::invalid_argument("syzygy_slice degree guard: |h| must be 3, 4 or 5");
    return an.slice(h);
}

bool koszul_pair_minimal(const CellCollection& c, std::size_t minorA, std::size_t minorB,
                         const FieldSpec& field) {
    SyzygyAnalyzer an(c, field);
    return an.koszul_pair_minimal(minorA, minorB);
}

bool has_minimal_koszul_pair(const CellCollection& c, const FieldSpec& field) {
    SyzygyAnalyzer an(c, field);
    return an.find_minimal_koszul_pair().has_value();
}

std::optional<std::size_t> find_minor(const std::vector<InnerMinor>& minors, GridPoint lo,
                                      GridPoint hi) {
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minors[k].lo == lo && minors[k].hi == hi) return k;
    return std::nullopt;
}

} // namespace polybetti
