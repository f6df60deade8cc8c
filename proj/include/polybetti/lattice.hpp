#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polybetti/semigroup.hpp"

namespace polybetti {

// Finite poset on elements 1..n.  Any acyclic strict relation may be fed in;
// it is closed transitively and the cover list is recomputed irredundantly.
class Poset {
public:
    Poset(int n, std::vector<std::pair<int, int>> relations);

    static Poset antichain(int n);
    static Poset chain(int n);
    static Poset disjoint_union(const Poset& a, const Poset& b);

    int size() const { return n_; }
    bool less(int a, int b) const { return lessMat_[idx(a, b)]; }         // strict
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<std::pair<int, int>> strict_pairs() const;

    // Minimal relation-matrix encoding over all permutations; equal keys
    // characterize isomorphism.
    std::string canonical_key() const;

    bool operator==(const Poset& o) const { return n_ == o.n_ && lessMat_ == o.lessMat_; }

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
    }
    int n_{};
    std::vector<bool> lessMat_;
    std::vector<std::pair<int, int>> covers_;
};

bool poset_isomorphic(const Poset& a, const Poset& b);

// Distributive lattice of order ideals, elements stored as bitmasks of the
// base poset, ordered by inclusion.
class DistLattice {
public:
    int size() const { return static_cast<int>(ideals_.size()); }
    const Poset& base() const { return base_; }
    const std::vector<std::uint32_t>& ideal_masks() const { return ideals_; }

    bool leq(int a, int b) const;                 // inclusion of ideals
    int join(int a, int b) const;                 // union
    int meet(int a, int b) const;                 // intersection
    int index_of(std::uint32_t mask) const;

    friend DistLattice order_ideal_lattice(const Poset& p, int cap);

private:
    Poset base_{0, {}};
    std::vector<std::uint32_t> ideals_;           // sorted by (popcount, value)
};

DistLattice order_ideal_lattice(const Poset& p, int cap = 10);

// The induced subposet of join-irreducible elements (exactly one lower
// cover).  Round trip: order_ideal_lattice(join_irreducibles(l)) ~ l.
Poset join_irreducibles(const DistLattice& l);

bool lattice_isomorphic(const DistLattice& a, const DistLattice& b);

// No join-irreducible element is comparable to every other one.
bool is_simple(const DistLattice& l);

// Descent-counted h-vector over all linear extensions (natural labeling).
HVector h_vector_of_poset(const Poset& p);

// Every maximal chain has the same cardinality.
bool is_pure(const Poset& p);

struct JoinMeetBinomial {
    int alpha{}, beta{};   // incomparable pair, lattice element indices
    int meet{}, join{};
};
std::vector<JoinMeetBinomial> join_meet_generators(const DistLattice& l);

// Toric model of K[L]: one generator per order ideal, indicator vector plus
// a homogenizing coordinate.
AffineSemigroup hibi_semigroup(const DistLattice& l);

struct LatticeClass {
    bool linearResolution{};
    bool extremalGorenstein{};
};
// Combinatorial classification of a simple distributive lattice.
LatticeClass classify_lattice(const DistLattice& l);

Poset parse_poset_json(const std::string& text);
std::string poset_to_json(const Poset& p);

} // namespace polybetti
