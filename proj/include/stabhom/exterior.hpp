// Exterior powers Λ^k of coordinate spaces: coordinates of Λ^k F^n are indexed
// by k-subsets of {0..n-1} in lexicographic order of the sorted index tuples,
// and the wedge of k row vectors has the k×k minors as its coordinates.

#pragma once

#include <cstdint>
#include <vector>

#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

class ExteriorBasisMap {
public:
    ExteriorBasisMap(size_t n, size_t k);

    size_t n() const { return n_; }
    size_t k() const { return k_; }
    size_t dim() const { return dim_; } // C(n, k)

    // Lexicographic rank of a strictly increasing index tuple.
    size_t rank(const std::vector<size_t>& subset) const;
    std::vector<size_t> unrank(size_t idx) const;

private:
    size_t n_, k_, dim_;
    std::vector<std::vector<uint64_t>> binom_; // binom_[m][j] = C(m, j)
};

// Coordinates of v_1 ∧ ... ∧ v_k; zero iff the rows are dependent.
Vec wedge_embed(const std::vector<Vec>& vectors, const ExteriorBasisMap& map, const FieldPrime& f);

// Λ^k(L ∩ G_S) inside Λ^k G: wedges of all k-subsets of the canonical basis of
// the section space L ∩ G_S. Minors are evaluated only on S's coordinate
// support since all other columns vanish.
Subspace section_space(const Subspace& l, PartyMask s, size_t k, const PartyStructure& ps);

// L ∩ G_S (the k = 1 section space, without the exterior embedding).
Subspace section_basis(const Subspace& l, PartyMask s, const PartyStructure& ps);

} // namespace stabhom
