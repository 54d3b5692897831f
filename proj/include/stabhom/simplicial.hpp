// Simplicial complexes on the party set: associated polyhedra of closed
// subsets of the partition space, dual polyhedra, joins, and relative
// simplicial cohomology of (Δ_P, Γ). The codim-1 oracle recomputes quotient
// invariants by a route independent of the sheaf pipeline.

#pragma once

#include <cstdint>
#include <vector>

#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

// Downward-closed set of nonempty vertex subsets (faces as bitmasks).
struct Polyhedron {
    size_t n = 0;                 // vertices 0..n-1
    std::vector<PartyMask> faces; // ascending, unique
    bool has_face(PartyMask s) const;
    bool operator==(const Polyhedron&) const = default;
};

// Validates range, nonemptiness and downward closure.
Polyhedron make_polyhedron(size_t n, std::vector<PartyMask> faces);
// Polyhedron generated by arbitrary subsets (closes downward, drops ∅).
Polyhedron downward_closure(size_t n, const std::vector<PartyMask>& generators);
Polyhedron full_simplex(size_t n);
Polyhedron boundary_simplex(size_t n); // all proper nonempty subsets

// Γ_Y for the closed set Y = X_{S_1} ∪ ... ∪ X_{S_r}: faces are the nonempty
// S disjoint from at least one S_i. An empty list gives the empty polyhedron;
// a list containing ∅ gives the full simplex.
Polyhedron polyhedron_of_closed(size_t n, const std::vector<PartyMask>& s_list);

// Dual polyhedron {∅ ≠ S : ∅ ≠ P∖S ∉ Γ}; an involution on proper
// subpolyhedra of Δ_P. The full simplex has no dual.
Polyhedron dual(const Polyhedron& g);

// Join: vertex set is the disjoint union, b's vertices shifted by a.n; faces
// are all unions S ∪ T with S ∈ Γ_a ∪ {∅}, T ∈ Γ_b ∪ {∅}, minus ∅.
Polyhedron join(const Polyhedron& a, const Polyhedron& b);

// The (|P|-1)-sphere {S + T ≠ ∅ : S, T ⊆ P disjoint} on the doubled vertex
// set P + P (second copy shifted by |P|).
Polyhedron gamma_sphere(size_t parties);

// Simplicial cochain complex data: cells[i] lists the degree-i cells (faces
// of size i+1), d[i] the coboundary acting on row vectors, x ↦ x·d[i].
struct CochainComplex {
    std::vector<std::vector<PartyMask>> cells;
    std::vector<Matrix> d;
};

// Complex of the pair (Δ_P, Γ): cells are the faces of Δ_P not in Γ.
CochainComplex relative_cochain_complex(const Polyhedron& g, const FieldPrime& f);
// Complex of Γ itself: cells are the faces of Γ.
CochainComplex cochain_complex_of(const Polyhedron& g, const FieldPrime& f);

std::vector<size_t> complex_cohomology(const CochainComplex& c, const FieldPrime& f);

// dim_F H^i(Δ_P, Γ; F^d) for i = 0..n-1; the coefficient dimension d
// multiplies every dimension (the complex is a direct sum of d copies).
std::vector<size_t> relative_cohomology_dims(const Polyhedron& g, size_t coeff_dim,
                                             const FieldPrime& f);
// Unreduced H^i(Γ; F), i = 0..n-1.
std::vector<size_t> cohomology_dims_of(const Polyhedron& g, const FieldPrime& f);

// Γ = {∅ ≠ S : L ∩ G_S ⊆ M} for a codimension-1 subspace M ⊂ L.
Polyhedron codim1_polyhedron(const Subspace& l, const Subspace& m, const PartyStructure& ps);

// Relative cohomology dims of (Δ_P, Γ) with 1-dimensional coefficients: the
// independent recomputation of local_invariants_rel(l, m) — the quotient row
// at local degree j equals this vector at simplicial degree j-1.
std::vector<size_t> codim1_oracle(const Subspace& l, const Subspace& m, const PartyStructure& ps);

} // namespace stabhom
