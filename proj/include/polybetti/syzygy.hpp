#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "polybetti/cells.hpp"
#include "polybetti/homology.hpp"
#include "polybetti/semigroup.hpp"
#include "polybetti/toric.hpp"

namespace polybetti {

// Degree-h piece of the first syzygies of the minor presentation of I_P.
// relationDim is the kernel dimension of the presentation map in degree h;
// minimalDim is what survives modulo m * Syz_1, i.e. beta_{1,h}(I_P).
struct SyzygySlice {
    MultiDegree h;
    long long relationDim{};
    long long minimalDim{};
};

// Linear algebra over the minor presentation of one cell collection, with
// slice results cached across degrees.
class SyzygyAnalyzer {
public:
    SyzygyAnalyzer(const CellCollection& c, const FieldSpec& field);
    ~SyzygyAnalyzer();
    SyzygyAnalyzer(SyzygyAnalyzer&&) noexcept;

    const std::vector<InnerMinor>& minors() const;

    SyzygySlice slice(const std::vector<int>& h);

    // Is the Koszul element f_a e_b - f_b e_a a minimal first syzygy?
    bool koszul_pair_minimal(std::size_t a, std::size_t b);

    // First minimal Koszul pair in lexicographic (a,b) order, if any.
    std::optional<std::pair<std::size_t, std::size_t>> find_minimal_koszul_pair();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot wrappers.  The slice degree is guarded to |h| in {3,4,5}.
SyzygySlice syzygy_slice(const CellCollection& c, const std::vector<int>& h,
                         const FieldSpec& field);
bool koszul_pair_minimal(const CellCollection& c, std::size_t minorA, std::size_t minorB,
                         const FieldSpec& field);
bool has_minimal_koszul_pair(const CellCollection& c, const FieldSpec& field);

// Index of the minor with the given interval corners, if present.
std::optional<std::size_t> find_minor(const std::vector<InnerMinor>& minors, GridPoint lo,
                                      GridPoint hi);

} // namespace polybetti
