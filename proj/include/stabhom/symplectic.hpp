// Party-indexed symplectic structure on G = ⊕_p G_p. Party p owns a contiguous
// block of 2*n_p coordinates (blocks in party order); inside every block the
// coordinates alternate (e_1, f_1, e_2, f_2, ...). Since all blocks have even
// width, coordinate 2t is globally the e-leg and 2t+1 the f-leg of qudit t, and
// ω(u,v) = Σ_t (u_{2t} v_{2t+1} − u_{2t+1} v_{2t}).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stabhom/ffla.hpp"

namespace stabhom {

// Party subsets are bitmasks over party ids 0..l-1.
using PartyMask = uint32_t;

class PartyStructure {
public:
    PartyStructure(const FieldPrime& f, std::vector<uint32_t> qudits);

    const FieldPrime& field() const { return field_; }
    size_t num_parties() const { return qudits_.size(); }
    uint32_t qudits(size_t p) const { return qudits_[p]; }
    const std::vector<uint32_t>& qudit_counts() const { return qudits_; }
    size_t ambient_dim() const { return offsets_.back(); }
    size_t block_offset(size_t p) const { return offsets_[p]; }
    size_t block_width(size_t p) const { return 2 * qudits_[p]; }

    // Ambient coordinate indices owned by the parties in the mask, ascending.
    std::vector<size_t> coords(PartyMask s) const;
    // Span of the unit vectors at coords(s).
    Subspace coord_subspace(PartyMask s) const;

    bool operator==(const PartyStructure&) const = default;

private:
    FieldPrime field_;
    std::vector<uint32_t> qudits_;
    std::vector<size_t> offsets_; // size l+1, offsets_[l] = ambient dim
};

class SymplecticForm {
public:
    explicit SymplecticForm(const PartyStructure& ps) : ps_(ps) {}

    const PartyStructure& structure() const { return ps_; }

    uint32_t omega(const Vec& u, const Vec& v) const;
    // ω summed over the coordinates of party p only.
    uint32_t omega_party(size_t p, const Vec& u, const Vec& v) const;
    // The row u*Ω, so that omega(u, v) = (u*Ω)·v.
    Vec omega_dual(const Vec& u) const;

    Subspace orthogonal_complement(const Subspace& l) const;
    bool is_isotropic(const Subspace& l) const;
    bool is_lagrangian(const Subspace& l) const;

private:
    PartyStructure ps_;
};

struct Graph {
    size_t n = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges; // u < v, sorted, unique
};

// Validates simplicity and vertex range; normalizes edge order.
Graph make_graph(size_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

// Lagrangian spanned by g_p = e_p + Σ_{q~p} f_q; requires one qudit per party.
Subspace graph_lagrangian(const Graph& g, const FieldPrime& f);

// Named families on vertices 0..n-1 (layouts documented in README):
//   path:  edges (i, i+1)
//   star:  center 0
//   cycle: path plus (n-1, 0)
//   D:     path 0..n-2 plus edge (1, n-1)
//   E6/E7: path 0..k-2 plus edge (2, k-1)
Graph family(const std::string& name, size_t n);

// Seed-deterministic lagrangian: symplectic transvections and per-party qudit
// swaps applied to the reference lagrangian span{e_i}.
Subspace random_lagrangian(const PartyStructure& ps, uint64_t seed);

// Partners c_i inside `within` for independent mutually ω-orthogonal rows b_i:
// ω(b_i, c_j) = δ_ij and ω(c_i, c_j) = 0. Deterministic; throws logic_error if
// ω is degenerate on the relevant span.
Matrix symplectic_partners(const Matrix& iso, const Subspace& within, const SymplecticForm& form);

// Symplectic basis rows (e_1, f_1, e_2, f_2, ...) of a subspace on which ω is
// nondegenerate; ω(e_i, f_i) = 1, all other basis pairings zero.
Matrix symplectic_basis_of(const Subspace& v, const SymplecticForm& form);

} // namespace stabhom
