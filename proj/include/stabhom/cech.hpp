// Čech complexes over the punctured partition space W, covered by the one-party
// opens. Degree i collects one block per party subset S with |S| = i+1 (subsets
// in lexicographic order); the coboundary D^i acts on row vectors, x ↦ x·D^i,
// with the alternating inclusion signs. Local-degree invariants are read off as
// h^{k,j} = dim H^{j-1}(W) for j >= 1 (the support shift at the closed point).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stabhom/exterior.hpp"
#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

struct CechBlock {
    PartyMask mask = 0;
    size_t offset = 0; // first coordinate of this block within its degree
    Subspace space;    // basis rows in the sheaf's global coordinates
};

class CechComplex {
public:
    size_t parties() const { return degrees_.size(); }
    const FieldPrime& field() const { return field_; }
    const std::vector<CechBlock>& blocks(size_t i) const { return degrees_[i]; }
    size_t dim(size_t i) const { return dims_[i]; }
    // D^i: dim(i) × dim(i+1), defined for i < parties()-1.
    const Matrix& coboundary(size_t i) const { return d_[i]; }

    // Coordinates of a degree-d cochain assembled from per-block ambient
    // vectors; used to move classes between sheaves.
    const CechBlock* block_at(size_t degree, PartyMask mask) const;

private:
    friend class CechBuilder;
    explicit CechComplex(const FieldPrime& f) : field_(f) {}
    FieldPrime field_;
    std::vector<std::vector<CechBlock>> degrees_;
    std::vector<size_t> dims_;
    std::vector<Matrix> d_;
};

// Memoized section spaces L ∩ G_S.
class SectionCache {
public:
    SectionCache(const Subspace& l, const PartyStructure& ps) : l_(&l), ps_(&ps) {}
    const Subspace& get(PartyMask s);
    const Subspace& state() const { return *l_; }
    const PartyStructure& structure() const { return *ps_; }

private:
    const Subspace* l_;
    const PartyStructure* ps_;
    std::map<PartyMask, Subspace> memo_;
};

// All m-subsets of {0..l-1} as masks, lexicographic in the sorted tuples.
std::vector<PartyMask> subsets_of_size(size_t l, size_t m);

// Čech complex of Λ^k FL (blocks Λ^k(L ∩ G_S) in Λ^k G coordinates).
CechComplex cech_complex(const Subspace& l, const PartyStructure& ps, size_t k);
CechComplex cech_complex(SectionCache& sections, size_t k);

// Čech complex of the full-space sheaf FG (blocks G_S); acyclic on W in
// degrees 1..|P|-2, which is what makes coboundary lifts solvable.
CechComplex cech_complex_full(const PartyStructure& ps);

// Čech complex of the quotient sheaf FL/FM (blocks (L∩G_S)/(M∩G_S)); block
// bases are canonical complements of M∩G_S inside L∩G_S.
CechComplex cech_complex_relative(const Subspace& l, const Subspace& m, const PartyStructure& ps);

// dim H^i(W) for i = 0..parties()-1.
std::vector<size_t> cohomology_dims(const CechComplex& c);

struct InvariantTable {
    size_t parties = 0;
    std::vector<std::vector<size_t>> rows; // rows[k][j], k = 0..dim L, j = 0..parties
    size_t h(size_t k, size_t j) const { return k < rows.size() ? rows[k][j] : 0; }
    bool operator==(const InvariantTable&) const = default;
};

struct CohomologyClasses {
    size_t degree = 0; // local degree j; representatives live in W-degree j-1
    Matrix reps;       // rows: independent cocycles spanning ker D modulo im D
};

// Row (h^{k,0}, ..., h^{k,|P|}).
std::vector<size_t> local_invariants(const Subspace& l, const PartyStructure& ps, size_t k);
std::vector<size_t> local_invariants(SectionCache& sections, size_t k);

InvariantTable invariant_table(const Subspace& l, const PartyStructure& ps);

CohomologyClasses cohomology_basis(const Subspace& l, const PartyStructure& ps, size_t k, size_t j);
CohomologyClasses cohomology_basis_of(const CechComplex& c, size_t j);

// Row for the quotient sheaf FL/FM, m ⊆ l.
std::vector<size_t> local_invariants_rel(const Subspace& l, const Subspace& m,
                                         const PartyStructure& ps);

} // namespace stabhom
