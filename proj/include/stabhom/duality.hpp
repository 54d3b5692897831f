// The pairing ω̂ on local cohomology, evaluated at the Čech level: classes are
// lifted to cochains of the full-space sheaf (always possible since that
// complex is exact over two or more parties) and paired party-wise over a base
// party with oriented-simplex signs. The pairing is homogeneous: local degrees
// must satisfy i + j = |P| + 2. Its global sign depends on the orientation
// convention; every exposed check (perfectness, alternation, symmetry) is
// sign-invariant.

#pragma once

#include <cstdint>
#include <vector>

#include "stabhom/cech.hpp"
#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

// Ascending party order with base party 0; fixes the simplex orientations and
// which fundamental-class evaluation realizes the pairing.
struct Orientation {
    std::vector<size_t> ordering;
    size_t base_party = 0;
    bool operator==(const Orientation&) const = default;
};

Orientation standard_orientation(size_t parties);

struct PairingMatrix {
    size_t left_degree = 0;  // local degree i
    size_t right_degree = 0; // |P| + 2 - i
    Matrix entries;          // h^{1,i}(L) × h^{1,j}(M)
};

// u with u·D = x in `full`, where x is a cocycle of `sheaf` at the given
// W-degree (1 ≤ w_degree ≤ |P|-1) and u lives at W-degree w_degree - 1.
// Failure to solve is an internal inconsistency, not a user error.
Vec lift_coboundary(const CechComplex& sheaf, const CechComplex& full, size_t w_degree,
                    const Vec& x);

// Pairing data for an ω-orthogonal pair of subspaces (for the duality theorem
// take m = l^⊥; for the char-2 alternation statements take m = l).
class DualityContext {
public:
    DualityContext(const Subspace& l, const Subspace& m, const PartyStructure& ps);

    const PartyStructure& structure() const { return ps_; }
    const Orientation& orientation() const { return orient_; }
    const CechComplex& left_complex() const { return fl_; }
    const CechComplex& right_complex() const { return fm_; }
    const CechComplex& full_complex() const { return fg_; }

    // ω̂(x, y) for cocycle coordinate vectors at local degrees i and j,
    // i + j = |P| + 2, each within 2..|P|.
    uint32_t pair_classes(const Vec& x, size_t i, const Vec& y, size_t j) const;

    // Full matrix over the canonical cohomology bases at degrees (i, |P|+2-i).
    PairingMatrix pairing_matrix(size_t i) const;

private:
    PartyStructure ps_;
    SymplecticForm form_;
    Orientation orient_;
    CechComplex fl_, fm_, fg_;
};

struct DualityReport {
    struct Degree {
        size_t degree = 0; // local degree i, paired with |P|+2-i
        size_t left_dim = 0;
        size_t right_dim = 0;
        size_t rank = 0;
    };
    bool perfect = false;
    std::vector<Degree> degrees; // i = 2..|P|
};

// Pairs L against L^⊥ in every local degree 2..|P| and records matrix shapes
// and ranks; perfect iff every matrix is square of full rank.
DualityReport check_perfect(const Subspace& l, const PartyStructure& ps);

// Gram matrix of ω̂ on the self-paired middle degree (|P|+2)/2 of a char-2
// lagrangian with |P| even. The theorems make it alternating and
// nondegenerate; a violation raises logic_error.
Matrix middle_symplectic(const Subspace& l, const PartyStructure& ps);

} // namespace stabhom
