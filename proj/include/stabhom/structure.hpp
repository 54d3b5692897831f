// State-manipulation algebra: splitting off single-party summands, extracting
// all-party GHZ summands, internal/external sums, coarsening and discarding
// parties, and the three-party decomposability test. Splits return subspaces
// of the original ambient space; restandardize() rewrites a remainder in fresh
// party-aligned symplectic coordinates so the operations can be iterated.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

// L = L′ ⊕ L″ over G = G′ ⊥ G″, everything inside the original coordinates.
struct Splitting {
    Subspace g_prime;
    Subspace g_doubleprime;
    Subspace l_prime;
    Subspace l_doubleprime;
};

// Certificate for an all-party GHZ summand: per-party vectors f_s ∈ G_s whose
// pairwise differences lie in L, and h ∈ L with ω(f_s, h) = 1 for every s.
struct GhzWitness {
    std::vector<Vec> f; // ambient vectors, f[s] supported on party s
    Vec h;
};

// If L∩G_p ≠ 0, splits it off: G′ ⊆ G_p is a symplectic subspace of dimension
// 2·dim(L∩G_p) containing L∩G_p, G″ = G′^⊥, L″ = L∩G″, and dims add up.
// Returns nothing when L∩G_p = 0.
std::optional<Splitting> split_local(const Subspace& l, const PartyStructure& ps, size_t p);

// Searches for a GHZ witness: a compatible family (f_s) (pairwise differences
// in L) pairing to 1 with a top-degree class h ∈ L. Requires L lagrangian with
// L∩G_p = 0 for every p (run split_local first) and at least two parties.
// Returns nothing when no all-party GHZ summand exists.
std::optional<GhzWitness> find_ghz_witness(const Subspace& l, const PartyStructure& ps);

// Splits off the GHZ summand certified by the witness: G′_s = span{f_s, h_s}
// is a symplectic plane per party, L′ = L∩G′ = span({f_0 − f_t} ∪ {h}) is a
// GHZ lagrangian of G′, and L″ = L∩G″ is lagrangian in G″ = G′^⊥.
Splitting split_ghz(const Subspace& l, const PartyStructure& ps, const GhzWitness& w);

// Rewrites a subspace of the party-aligned symplectic subspace g (typically a
// splitting's G″) in fresh coordinates: per party, a symplectic basis of
// g ∩ G_p becomes the new (e, f) qudit pairs. Parties keep their ids; a party
// with g ∩ G_p = 0 keeps a zero-width block.
std::pair<Subspace, PartyStructure> restandardize(const Subspace& sub, const Subspace& g,
                                                  const PartyStructure& ps);

// Best-effort decomposition by single-party and all-party-GHZ splits, applied
// until neither makes progress. Complete for up to three parties; beyond that
// the remainder may still be decomposable in ways this does not attempt.
struct Decomposition {
    std::vector<std::pair<size_t, size_t>> local; // (party, dimension split off)
    size_t ghz = 0;                               // all-party GHZ summands
    Subspace remainder;
    PartyStructure structure; // coordinates of `remainder`
};

Decomposition try_decompose(const Subspace& l, const PartyStructure& ps);

// Number of all-party GHZ summands (= h^{1,2} for more than two parties,
// h^{1,2}/2 for exactly two, where the two degrees merge).
size_t ghz_count(const Subspace& l, const PartyStructure& ps);

// Same party set, blocks concatenated per party; h^{1,j} values add.
std::pair<Subspace, PartyStructure> internal_sum(const Subspace& l, const PartyStructure& pl,
                                                 const Subspace& m, const PartyStructure& pm);

// Disjoint party sets, concatenated (m's parties follow l's); the bigraded
// invariants multiply as a convolution in both indices.
std::pair<Subspace, PartyStructure> external_sum(const Subspace& l, const PartyStructure& pl,
                                                 const Subspace& m, const PartyStructure& pm);

// Party q of the result owns the blocks of phi^{-1}(q) in original party
// order; parties outside the image keep zero-width blocks. L is unchanged as
// a set, only re-indexed.
std::pair<Subspace, PartyStructure> coarsen(const Subspace& l, const PartyStructure& ps,
                                            const std::vector<size_t>& phi, size_t coarse_parties);

// Keeps L ∩ G_{P∖dropped} and deletes the dropped coordinate blocks; remaining
// parties are renumbered in order.
std::pair<Subspace, PartyStructure> discard(const Subspace& l, const PartyStructure& ps,
                                            PartyMask dropped);

// Three-party test: true iff L = 0, some single-party summand splits off, or
// an EPR summand over a two-party subset splits off (checked via the section
// sum condition and the two-party substate's degree-2 cohomology). Complete
// for states with trivial cohomology per the three-party classification.
bool is_decomposable_3party(const Subspace& l, const PartyStructure& ps);

} // namespace stabhom
