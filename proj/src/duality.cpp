// Pairing of local cohomology classes at the cochain level. A class at local
// degree i lives in W-degree i-1 of its sheaf complex; it is lifted through
// the coboundary of the full-space complex (exact, so the lift exists) and the
// two lifts are paired party-wise at the base party over all ways of splitting
// the remaining parties into an ordered pair of index sets plus one leftover.

#include "stabhom/duality.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "stabhom/errors.hpp"

namespace stabhom {

namespace {

// Ambient vector of one block component of a cochain given in complex coords.
Vec component_vector(const CechBlock& b, const Vec& cochain, const FieldPrime& f) {
    Vec out(b.space.ambient_dim(), 0);
    for (size_t r = 0; r < b.space.dim(); ++r) {
        uint32_t c = cochain[b.offset + r];
        if (c == 0)
            continue;
        for (size_t col = 0; col < out.size(); ++col)
            out[col] = f.add(out[col], f.mul(c, b.space.basis()(r, col)));
    }
    return out;
}

// Rewrite sheaf-complex coordinates as full-complex coordinates, block by
// block (both complexes list blocks in the same subset order).
Vec to_full_coords(const CechComplex& sheaf, const CechComplex& full, size_t d, const Vec& x) {
    const FieldPrime& f = full.field();
    Vec out(full.dim(d), 0);
    const auto& sub = sheaf.blocks(d);
    const auto& amb = full.blocks(d);
    for (size_t b = 0; b < sub.size(); ++b) {
        if (sub[b].space.dim() == 0)
            continue;
        Vec v = component_vector(sub[b], x, f);
        Vec coef = coefficients(amb[b].space, v);
        for (size_t c = 0; c < coef.size(); ++c)
            out[amb[b].offset + c] = coef[c];
    }
    return out;
}

// Pairs (a, b) with a from s, b from t, a > b: the sign of merging the two
// ascending party tuples into one ascending tuple.
size_t merge_inversions(PartyMask s, PartyMask t) {
    size_t count = 0;
    for (PartyMask rest = s; rest != 0; rest &= rest - 1) {
        unsigned a = static_cast<unsigned>(std::countr_zero(rest));
        count += static_cast<size_t>(std::popcount(t & ((PartyMask(1) << a) - 1)));
    }
    return count;
}

bool is_cocycle(const CechComplex& c, size_t d, const Vec& x, const FieldPrime& f) {
    if (d + 1 >= c.parties())
        return true;
    return mat_mul(Matrix::from_rows({x}), c.coboundary(d), f).is_zero();
}

const Subspace& validated(const Subspace& s, const PartyStructure& ps) {
    if (ps.num_parties() < 2)
        throw precondition_error("pairing needs at least two parties");
    if (s.ambient_dim() != ps.ambient_dim() || s.field().p() != ps.field().p())
        throw precondition_error("state does not match the party structure");
    return s;
}

} // namespace

Orientation standard_orientation(size_t parties) {
    Orientation o;
    o.ordering.resize(parties);
    std::iota(o.ordering.begin(), o.ordering.end(), size_t{0});
    o.base_party = 0;
    return o;
}

Vec lift_coboundary(const CechComplex& sheaf, const CechComplex& full, size_t w_degree,
                    const Vec& x) {
    const size_t l = full.parties();
    if (w_degree < 1 || w_degree >= l)
        throw precondition_error("coboundary lift needs a W-degree in 1..|P|-1");
    if (x.size() != sheaf.dim(w_degree))
        throw precondition_error("cochain length does not match the complex degree");
    Vec xg = to_full_coords(sheaf, full, w_degree, x);
    auto u = solve(full.coboundary(w_degree - 1), xg, full.field());
    if (!u)
        throw std::logic_error("coboundary lift failed on the exact full-space complex");
    return *u;
}

DualityContext::DualityContext(const Subspace& l, const Subspace& m, const PartyStructure& ps)
    : ps_(ps),
      form_(ps_),
      orient_(standard_orientation(ps.num_parties())),
      fl_(cech_complex(validated(l, ps_), ps_, 1)),
      fm_(cech_complex(validated(m, ps_), ps_, 1)),
      fg_(cech_complex_full(ps_)) {
    for (size_t a = 0; a < l.dim(); ++a)
        for (size_t b = 0; b < m.dim(); ++b)
            if (form_.omega(l.basis().row(a), m.basis().row(b)) != 0)
                throw precondition_error("paired subspaces must be ω-orthogonal");
}

uint32_t DualityContext::pair_classes(const Vec& x, size_t i, const Vec& y, size_t j) const {
    const FieldPrime& f = ps_.field();
    const size_t l = ps_.num_parties();
    if (i < 2 || j < 2 || i > l || j > l || i + j != l + 2)
        throw precondition_error("pairing degrees must lie in 2..|P| and sum to |P|+2");
    if (x.size() != fl_.dim(i - 1) || y.size() != fm_.dim(j - 1))
        throw precondition_error("class coordinates do not match the complex dimensions");
    if (!is_cocycle(fl_, i - 1, x, f) || !is_cocycle(fm_, j - 1, y, f))
        throw precondition_error("pairing needs cocycle representatives");

    Vec u = lift_coboundary(fl_, fg_, i - 1, x);
    Vec v = lift_coboundary(fm_, fg_, j - 1, y);

    // Base party 0; S and T run over disjoint subsets of the other parties
    // with |S| = i-2 and |T| = j-2, leaving a single party r uncovered.
    const PartyMask others = (PartyMask(1) << l) - 2;
    uint32_t acc = 0;
    for (PartyMask small : subsets_of_size(l - 1, i - 2)) {
        PartyMask s = small << 1;
        const CechBlock* ub = fg_.block_at(i - 2, s | 1);
        Vec uvec = component_vector(*ub, u, f);
        for (PartyMask pool = others & ~s, rbit = 0; pool != 0; pool &= pool - 1) {
            rbit = pool & (~pool + 1);
            size_t r = static_cast<size_t>(std::countr_zero(rbit));
            PartyMask t = others & ~s & ~rbit;
            uint32_t w = form_.omega_party(0, uvec, component_vector(*fg_.block_at(j - 2, t | 1), v, f));
            if (w == 0)
                continue;
            size_t sign = (i - 1) + r + merge_inversions(s, t);
            acc = f.add(acc, sign % 2 ? f.neg(w) : w);
        }
    }
    return acc;
}

PairingMatrix DualityContext::pairing_matrix(size_t i) const {
    const size_t l = ps_.num_parties();
    if (i < 2 || i > l)
        throw precondition_error("pairing matrices exist for local degrees 2..|P|");
    const size_t j = l + 2 - i;
    CohomologyClasses left = cohomology_basis_of(fl_, i);
    CohomologyClasses right = cohomology_basis_of(fm_, j);
    PairingMatrix out{i, j, Matrix(left.reps.rows(), right.reps.rows())};
    for (size_t r = 0; r < left.reps.rows(); ++r)
        for (size_t c = 0; c < right.reps.rows(); ++c)
            out.entries(r, c) = pair_classes(left.reps.row(r), i, right.reps.row(c), j);
    return out;
}

DualityReport check_perfect(const Subspace& l, const PartyStructure& ps) {
    SymplecticForm form(ps);
    DualityContext ctx(l, form.orthogonal_complement(l), ps);
    DualityReport rep;
    rep.perfect = true;
    for (size_t i = 2; i <= ps.num_parties(); ++i) {
        PairingMatrix pm = ctx.pairing_matrix(i);
        size_t rk = rank_of(pm.entries, ps.field());
        rep.degrees.push_back({i, pm.entries.rows(), pm.entries.cols(), rk});
        if (pm.entries.rows() != pm.entries.cols() || rk != pm.entries.rows())
            rep.perfect = false;
    }
    return rep;
}

Matrix middle_symplectic(const Subspace& l, const PartyStructure& ps) {
    if (ps.field().p() != 2)
        throw precondition_error("the middle self-pairing is symplectic only over F_2");
    const size_t n = ps.num_parties();
    if (n < 2 || n % 2 != 0)
        throw precondition_error("the middle degree is self-paired only for an even party count");
    SymplecticForm form(ps);
    if (!form.is_lagrangian(l))
        throw precondition_error("the middle self-pairing needs a lagrangian state");
    DualityContext ctx(l, l, ps);
    Matrix g = ctx.pairing_matrix((n + 2) / 2).entries;
    for (size_t r = 0; r < g.rows(); ++r)
        if (g(r, r) != 0)
            throw std::logic_error("middle pairing is not alternating");
    if (g.rows() % 2 != 0 || rank_of(g, ps.field()) != g.rows())
        throw std::logic_error("middle pairing is degenerate");
    return g;
}

} // namespace stabhom
