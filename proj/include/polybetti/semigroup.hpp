#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polybetti {

enum class MembershipKind { BipartiteFlow, HibiMonotone, GenericSearch };

// An element of the ambient lattice of a semigroup, together with its total
// degree under the standard grading (every generator has degree 1).
struct MultiDegree {
    std::vector<int> v;
    int total{};
    bool operator==(const MultiDegree&) const = default;
    bool operator<(const MultiDegree& o) const { return v < o.v; }
};

// Affine semigroup given by its minimal generators plus a membership
// strategy.  BipartiteFlow generators are e_i + f_j vectors of an edge set
// (rows block first); HibiMonotone generators are order-ideal indicator
// vectors extended by a homogenizing 1.
class AffineSemigroup {
public:
    static AffineSemigroup bipartite(int rows, int cols,
                                     std::vector<std::pair<int, int>> edges);
    static AffineSemigroup hibi(int posetSize,
                                std::vector<std::pair<int, int>> strictLess,
                                std::vector<std::vector<int>> idealIndicators);
    static AffineSemigroup generic(std::vector<std::vector<int>> generators);

    int ambient_dim() const { return ambientDim_; }
    MembershipKind kind() const { return kind_; }
    const std::vector<std::vector<int>>& generators() const { return gens_; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Total degree of an element (row-block sum for bipartite, homogenizing
    // coordinate for Hibi; for generic kinds all generators must share one
    // coordinate sum).
    int degree_of(const std::vector<int>& h) const;
    MultiDegree make_degree(std::vector<int> h) const;

    // Membership of h as a nonnegative integer combination of generators.
    // Vectors with a negative coordinate are never members.
    bool contains(const std::vector<int>& h) const;

private:
    AffineSemigroup() = default;

    bool contains_flow(const std::vector<int>& h) const;
    bool contains_hibi(const std::vector<int>& h) const;
    bool contains_search(const std::vector<int>& h) const;

    MembershipKind kind_{MembershipKind::GenericSearch};
    int ambientDim_{};
    std::vector<std::vector<int>> gens_;
    // bipartite data
    int rows_{}, cols_{};
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;  // rows -> list of cols
    // hibi data
    int posetSize_{};
    std::vector<std::pair<int, int>> strictLess_;
};

// Memoized membership front end.  One cache per top-level computation keeps
// the public operations pure while reusing the many repeated residual
// queries a divisor-complex scan makes.
class MembershipCache {
public:
    explicit MembershipCache(const AffineSemigroup& sg) : sg_(sg) {}

    const AffineSemigroup& semigroup() const { return sg_; }
    bool contains(const std::vector<int>& h);

private:
    const AffineSemigroup& sg_;
    std::unordered_map<std::string, bool> memo_;
};

struct HilbertOptions {
    std::size_t maxElements = 4'000'000;  // cap on distinct elements per degree
};

// Number of distinct semigroup elements of each total degree 0..d, by
// breadth-first product closure with deduplication.
std::vector<long long> hilbert_series_prefix(const AffineSemigroup& sg, int d,
                                             const HilbertOptions& opts = {});
long long hilbert_function(const AffineSemigroup& sg, int d,
                           const HilbertOptions& opts = {});

// All distinct elements of total degree exactly d, in sorted order.
std::vector<std::vector<int>> elements_of_degree(const AffineSemigroup& sg, int d,
                                                 const HilbertOptions& opts = {});

struct HVector {
    std::vector<long long> h;  // trailing zeros trimmed
    int krullDim{};
    bool operator==(const HVector&) const = default;
};

// Hilbert-series numerator over (1-t)^krullDim, computed from the Hilbert
// function until three consecutive coefficients vanish.
HVector h_vector(const AffineSemigroup& sg, const HilbertOptions& opts = {});

bool is_palindromic(const HVector& h);
// h of the form (1) or (1,q).
bool is_linear_h_vector(const HVector& h);
// h of the form (1,q,1) with q > 1.
bool is_extremal_h_vector(const HVector& h);

// Reconstructed Hilbert function value at degree t from an h-vector.
long long hilbert_from_h_vector(const HVector& hv, int t);

long long binomial(long long n, long long k);

} // namespace polybetti
