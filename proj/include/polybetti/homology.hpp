#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polybetti/cells.hpp"
#include "polybetti/semigroup.hpp"

namespace polybetti {

// Runtime-selected coefficient field: exact rationals by default, GF(p) as
// the fast alternative backend.
struct FieldSpec {
    bool rational = true;
    std::uint64_t prime = 32003;

    static FieldSpec qq() { return FieldSpec{true, 0}; }
    static FieldSpec gf(std::uint64_t p) { return FieldSpec{false, p}; }
    std::string name() const { return rational ? "QQ" : "GF(" + std::to_string(prime) + ")"; }
};

// Face-explicit simplicial complex on vertices 0..vertexCount-1.  The face
// list includes the empty face whenever the complex is nonvoid; faces are
// sorted internally and listed by (size, lex).
struct SimplicialComplex {
    int vertexCount{};
    std::vector<int> vertexLabels;           // external names, empty = identity
    std::vector<std::vector<int>> faces;

    int dim() const;
    long long face_count(int dim) const;     // dim -1 counts the empty face
    long long reduced_euler_characteristic() const;
};

// Squarefree divisor complex of h: faces are the generator subsets whose sum
// divides h inside the semigroup.  Requires h to be a member.
SimplicialComplex divisor_complex(MembershipCache& cache, const std::vector<int>& h);

long long reduced_homology_rank(const SimplicialComplex& cx, int i, const FieldSpec& field);

// dim of the first reduced homology of the divisor complex of h, computed
// from the 2-skeleton with an early-exit triangle rank.
long long divisor_h1_rank(MembershipCache& cache, const std::vector<int>& h,
                          const FieldSpec& field);

struct BettiEntry {
    int i{};            // homological index, algebra-indexed: beta_{i,h}(K[P])
    MultiDegree h;
    long long beta{};
};

struct BettiTable {
    std::vector<BettiEntry> multigraded;             // nonzero entries only
    std::map<std::pair<int, int>, long long> totals; // (i,|h|) -> beta_{ij}(K[P])
    int degreeCap{};
    std::string fieldName;

    long long algebra_total(int i, int j) const;
    // beta_{i,j}(I_P) = beta_{i+1,j}(K[P])
    long long ideal_total(int i, int j) const { return algebra_total(i + 1, j); }
    int max_index() const;
};

BettiTable betti_table(const CellCollection& c, int maxTotalDegree, const FieldSpec& field,
                       const HilbertOptions& opts = {});

struct LinearRelatednessVerdict {
    bool linearlyRelated{};
    std::optional<MultiDegree> witness;  // a degree-4 h with nonvanishing H~_1
};

// beta_{1,h}(I_P) = 0 for all |h| = 4, decided by exact homology of the
// divisor complexes.
LinearRelatednessVerdict is_linearly_related_oracle(const CellCollection& c,
                                                    const FieldSpec& field);

// Multidegrees h with lo <= |h| <= hi and beta_{1,h}(I_P) != 0.
std::vector<MultiDegree> first_syzygy_degrees(const CellCollection& c, int lo, int hi,
                                              const FieldSpec& field);

} // namespace polybetti
