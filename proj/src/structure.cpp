// Splitting, GHZ extraction, and party-structure surgery. All splits keep the
// original coordinates; restandardize() converts a party-aligned symplectic
// subspace into fresh blocks so the split can be repeated on the remainder.

#include "stabhom/structure.hpp"

#include <stdexcept>

#include "stabhom/cech.hpp"
#include "stabhom/errors.hpp"

namespace stabhom {

namespace {

void add_scaled(Vec& acc, const Vec& v, uint32_t c, const FieldPrime& f) {
    for (size_t t = 0; t < acc.size(); ++t)
        acc[t] = f.add(acc[t], f.mul(c, v[t]));
}

// Restriction of v to party p's coordinates (zero elsewhere).
Vec party_block(const Vec& v, const PartyStructure& ps, size_t p) {
    Vec out(v.size(), 0);
    for (size_t c : ps.coords(PartyMask(1) << p))
        out[c] = v[c];
    return out;
}

bool supported_on(const Vec& v, const PartyStructure& ps, PartyMask s) {
    Vec masked(v.size(), 0);
    for (size_t c : ps.coords(s))
        masked[c] = v[c];
    return masked == v;
}

Vec ambient_of(const Subspace& space, const Vec& coords, const FieldPrime& f) {
    Vec out(space.ambient_dim(), 0);
    for (size_t r = 0; r < space.dim(); ++r)
        if (coords[r] != 0)
            add_scaled(out, space.basis().row(r), coords[r], f);
    return out;
}

} // namespace

std::optional<Splitting> split_local(const Subspace& l, const PartyStructure& ps, size_t p) {
    const FieldPrime& f = ps.field();
    SymplecticForm form(ps);
    if (p >= ps.num_parties())
        throw precondition_error("party index out of range");
    if (!form.is_isotropic(l))
        throw precondition_error("splitting needs an isotropic state");
    Subspace lp = intersect(l, ps.coord_subspace(PartyMask(1) << p));
    if (lp.dim() == 0)
        return std::nullopt;

    Matrix partners = symplectic_partners(lp.basis(), ps.coord_subspace(PartyMask(1) << p), form);
    Matrix gen = lp.basis();
    for (size_t r = 0; r < partners.rows(); ++r)
        gen.append_row(partners.row(r));
    Subspace g_prime = Subspace::from_rows(gen, f);
    if (g_prime.dim() != 2 * lp.dim())
        throw std::logic_error("local split: summand is not symplectic");

    Subspace g_dp = form.orthogonal_complement(g_prime);
    Subspace l_dp = intersect(l, g_dp);
    if (lp.dim() + l_dp.dim() != l.dim())
        throw std::logic_error("local split: state does not decompose");
    return Splitting{std::move(g_prime), std::move(g_dp), std::move(lp), std::move(l_dp)};
}

std::optional<GhzWitness> find_ghz_witness(const Subspace& l, const PartyStructure& ps) {
    const FieldPrime& f = ps.field();
    const size_t parties = ps.num_parties();
    SymplecticForm form(ps);
    if (parties < 2)
        throw precondition_error("GHZ extraction needs at least two parties");
    if (!form.is_lagrangian(l))
        throw precondition_error("GHZ extraction needs a lagrangian state");
    for (size_t p = 0; p < parties; ++p)
        if (intersect(l, ps.coord_subspace(PartyMask(1) << p)).dim() != 0)
            throw precondition_error("GHZ extraction needs all single-party summands split off");

    // Compatible families X = (f_s): f_0 - f_t ∈ L for every t, i.e.
    // ω(b, f_0) = ω(b, f_t) for every basis vector b of L.
    Matrix constraints((parties - 1) * l.dim(), ps.ambient_dim());
    for (size_t t = 1; t < parties; ++t) {
        auto tcoords = ps.coords(PartyMask(1) << t);
        auto zcoords = ps.coords(PartyMask(1));
        for (size_t r = 0; r < l.dim(); ++r) {
            Vec dual = form.omega_dual(l.basis().row(r));
            size_t row = (t - 1) * l.dim() + r;
            for (size_t c : zcoords)
                constraints(row, c) = dual[c];
            for (size_t c : tcoords)
                constraints(row, c) = f.neg(dual[c]);
        }
    }
    Subspace families = kernel(constraints, f);
    if (families.dim() == 0)
        return std::nullopt;

    // Top-degree classes, represented by vectors of L; the value ω(f_s, h)
    // does not depend on s or on either choice of representative.
    CechComplex fl = cech_complex(l, ps, 1);
    CohomologyClasses top = cohomology_basis_of(fl, parties);
    if (top.reps.rows() == 0)
        throw std::logic_error("GHZ witness: degree-2 and top-degree dimensions disagree");
    for (size_t c = 0; c < families.dim(); ++c) {
        Vec x = families.basis().row(c);
        for (size_t r = 0; r < top.reps.rows(); ++r) {
            Vec h = ambient_of(l, top.reps.row(r), f);
            uint32_t val = form.omega_party(0, x, h);
            if (val == 0)
                continue;
            GhzWitness w;
            uint32_t scale = f.inv(val);
            w.f.reserve(parties);
            for (size_t s = 0; s < parties; ++s) {
                Vec fs = party_block(x, ps, s);
                for (auto& e : fs)
                    e = f.mul(e, scale);
                w.f.push_back(std::move(fs));
            }
            w.h = std::move(h);
            return w;
        }
    }
    throw std::logic_error("GHZ witness: nonzero family space pairs to zero");
}

Splitting split_ghz(const Subspace& l, const PartyStructure& ps, const GhzWitness& w) {
    const FieldPrime& f = ps.field();
    const size_t parties = ps.num_parties();
    SymplecticForm form(ps);
    if (w.f.size() != parties || w.h.size() != ps.ambient_dim())
        throw precondition_error("witness shape does not match the party structure");
    if (!contains(l, w.h))
        throw precondition_error("witness vector h is not in the state");
    for (size_t s = 0; s < parties; ++s) {
        if (w.f[s].size() != ps.ambient_dim() || !supported_on(w.f[s], ps, PartyMask(1) << s))
            throw precondition_error("witness vector f_s is not supported on party s");
        if (form.omega(w.f[s], w.h) != 1)
            throw precondition_error("witness pairing ω(f_s, h) is not 1");
        for (size_t t = 0; t < s; ++t) {
            Vec diff(ps.ambient_dim());
            for (size_t c = 0; c < diff.size(); ++c)
                diff[c] = f.sub(w.f[s][c], w.f[t][c]);
            if (!contains(l, diff))
                throw precondition_error("witness differences f_s - f_t do not lie in the state");
        }
    }

    Matrix planes(2 * parties, ps.ambient_dim());
    for (size_t s = 0; s < parties; ++s) {
        planes.set_row(2 * s, w.f[s]);
        planes.set_row(2 * s + 1, party_block(w.h, ps, s));
    }
    Subspace g_prime = Subspace::from_rows(planes, f);
    if (g_prime.dim() != 2 * parties)
        throw std::logic_error("GHZ split: party planes are degenerate");

    Matrix span(parties, ps.ambient_dim());
    for (size_t t = 1; t < parties; ++t)
        for (size_t c = 0; c < ps.ambient_dim(); ++c)
            span(t - 1, c) = f.sub(w.f[0][c], w.f[t][c]);
    span.set_row(parties - 1, w.h);
    Subspace l_prime = Subspace::from_rows(span, f);
    if (l_prime.dim() != parties || !(intersect(l, g_prime) == l_prime))
        throw std::logic_error("GHZ split: L ∩ G′ is not the expected GHZ lagrangian");

    Subspace g_dp = form.orthogonal_complement(g_prime);
    Subspace l_dp = intersect(l, g_dp);
    if (l_prime.dim() + l_dp.dim() != l.dim())
        throw std::logic_error("GHZ split: state does not decompose");
    return Splitting{std::move(g_prime), std::move(g_dp), std::move(l_prime), std::move(l_dp)};
}

std::pair<Subspace, PartyStructure> restandardize(const Subspace& sub, const Subspace& g,
                                                  const PartyStructure& ps) {
    const FieldPrime& f = ps.field();
    SymplecticForm form(ps);
    if (!contains_all(g, sub.basis()))
        throw precondition_error("restandardize: state does not lie in the subspace");
    Matrix basis(0, ps.ambient_dim());
    std::vector<uint32_t> qudits(ps.num_parties(), 0);
    for (size_t p = 0; p < ps.num_parties(); ++p) {
        Subspace block = intersect(g, ps.coord_subspace(PartyMask(1) << p));
        Matrix rows = symplectic_basis_of(block, form);
        qudits[p] = static_cast<uint32_t>(rows.rows() / 2);
        for (size_t r = 0; r < rows.rows(); ++r)
            basis.append_row(rows.row(r));
    }
    if (basis.rows() != g.dim())
        throw precondition_error("restandardize: subspace is not party-aligned");
    PartyStructure out(f, qudits);
    Matrix coords(sub.dim(), out.ambient_dim());
    for (size_t r = 0; r < sub.dim(); ++r) {
        auto x = solve(basis, sub.basis().row(r), f);
        if (!x)
            throw std::logic_error("restandardize: change of basis failed");
        coords.set_row(r, *x);
    }
    return {Subspace::from_rows(coords, f), out};
}

Decomposition try_decompose(const Subspace& l, const PartyStructure& ps) {
    if (!SymplecticForm(ps).is_lagrangian(l))
        throw precondition_error("decomposition needs a lagrangian state");
    Decomposition out{{}, 0, l, ps};
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t p = 0; p < out.structure.num_parties(); ++p) {
            if (auto s = split_local(out.remainder, out.structure, p)) {
                out.local.emplace_back(p, s->l_prime.dim());
                std::tie(out.remainder, out.structure) =
                    restandardize(s->l_doubleprime, s->g_doubleprime, out.structure);
                progress = true;
            }
        }
    }
    if (out.structure.num_parties() >= 2) {
        while (auto w = find_ghz_witness(out.remainder, out.structure)) {
            Splitting s = split_ghz(out.remainder, out.structure, *w);
            std::tie(out.remainder, out.structure) =
                restandardize(s.l_doubleprime, s.g_doubleprime, out.structure);
            ++out.ghz;
        }
    }
    return out;
}

size_t ghz_count(const Subspace& l, const PartyStructure& ps) {
    return try_decompose(l, ps).ghz;
}

std::pair<Subspace, PartyStructure> internal_sum(const Subspace& l, const PartyStructure& pl,
                                                 const Subspace& m, const PartyStructure& pm) {
    const FieldPrime& f = pl.field();
    if (pl.num_parties() != pm.num_parties() || f.p() != pm.field().p())
        throw precondition_error("internal sum needs identical party sets");
    std::vector<uint32_t> qudits(pl.num_parties());
    for (size_t p = 0; p < qudits.size(); ++p)
        qudits[p] = pl.qudits(p) + pm.qudits(p);
    PartyStructure out(f, qudits);
    Matrix rows(l.dim() + m.dim(), out.ambient_dim());
    for (size_t p = 0; p < qudits.size(); ++p) {
        size_t base = out.block_offset(p);
        for (size_t r = 0; r < l.dim(); ++r)
            for (size_t c = 0; c < pl.block_width(p); ++c)
                rows(r, base + c) = l.basis()(r, pl.block_offset(p) + c);
        for (size_t r = 0; r < m.dim(); ++r)
            for (size_t c = 0; c < pm.block_width(p); ++c)
                rows(l.dim() + r, base + pl.block_width(p) + c) =
                    m.basis()(r, pm.block_offset(p) + c);
    }
    return {Subspace::from_rows(rows, f), out};
}

std::pair<Subspace, PartyStructure> external_sum(const Subspace& l, const PartyStructure& pl,
                                                 const Subspace& m, const PartyStructure& pm) {
    const FieldPrime& f = pl.field();
    if (f.p() != pm.field().p())
        throw precondition_error("external sum needs a common base field");
    std::vector<uint32_t> qudits = pl.qudit_counts();
    qudits.insert(qudits.end(), pm.qudit_counts().begin(), pm.qudit_counts().end());
    PartyStructure out(f, qudits);
    Matrix rows(l.dim() + m.dim(), out.ambient_dim());
    for (size_t r = 0; r < l.dim(); ++r)
        for (size_t c = 0; c < pl.ambient_dim(); ++c)
            rows(r, c) = l.basis()(r, c);
    for (size_t r = 0; r < m.dim(); ++r)
        for (size_t c = 0; c < pm.ambient_dim(); ++c)
            rows(l.dim() + r, pl.ambient_dim() + c) = m.basis()(r, c);
    return {Subspace::from_rows(rows, f), out};
}

std::pair<Subspace, PartyStructure> coarsen(const Subspace& l, const PartyStructure& ps,
                                            const std::vector<size_t>& phi,
                                            size_t coarse_parties) {
    if (phi.size() != ps.num_parties())
        throw precondition_error("coarsening map must cover every party");
    for (size_t v : phi)
        if (v >= coarse_parties)
            throw precondition_error("coarsening map value out of range");
    std::vector<uint32_t> qudits(coarse_parties, 0);
    std::vector<size_t> old_of_new;
    old_of_new.reserve(ps.ambient_dim());
    for (size_t q = 0; q < coarse_parties; ++q)
        for (size_t p = 0; p < ps.num_parties(); ++p) {
            if (phi[p] != q)
                continue;
            qudits[q] += ps.qudits(p);
            for (size_t c : ps.coords(PartyMask(1) << p))
                old_of_new.push_back(c);
        }
    PartyStructure out(ps.field(), qudits);
    Matrix rows(l.dim(), out.ambient_dim());
    for (size_t r = 0; r < l.dim(); ++r)
        for (size_t c = 0; c < old_of_new.size(); ++c)
            rows(r, c) = l.basis()(r, old_of_new[c]);
    return {Subspace::from_rows(rows, ps.field()), out};
}

std::pair<Subspace, PartyStructure> discard(const Subspace& l, const PartyStructure& ps,
                                            PartyMask dropped) {
    if (ps.num_parties() < 32 && (dropped >> ps.num_parties()) != 0)
        throw precondition_error("discarded set is not a subset of the parties");
    PartyMask keep = ((PartyMask(1) << ps.num_parties()) - 1) & ~dropped;
    Subspace sec = intersect(l, ps.coord_subspace(keep));
    std::vector<size_t> kept_coords = ps.coords(keep);
    std::vector<uint32_t> qudits;
    for (size_t p = 0; p < ps.num_parties(); ++p)
        if (keep >> p & 1)
            qudits.push_back(ps.qudits(p));
    PartyStructure out(ps.field(), qudits);
    Matrix rows(sec.dim(), out.ambient_dim());
    for (size_t r = 0; r < sec.dim(); ++r)
        for (size_t c = 0; c < kept_coords.size(); ++c)
            rows(r, c) = sec.basis()(r, kept_coords[c]);
    return {Subspace::from_rows(rows, ps.field()), out};
}

bool is_decomposable_3party(const Subspace& l, const PartyStructure& ps) {
    if (ps.num_parties() != 3)
        throw precondition_error("decomposability test covers exactly three parties");
    SymplecticForm form(ps);
    if (!form.is_lagrangian(l))
        throw precondition_error("decomposability test needs a lagrangian state");
    if (l.dim() == 0)
        return true;
    for (size_t p = 0; p < 3; ++p)
        if (intersect(l, ps.coord_subspace(PartyMask(1) << p)).dim() != 0)
            return true;
    // EPR over P′ = {s, t}: the section-sum condition of the reduction must
    // hold (sections over all subsets not containing P′ plus L∩G_{P′} span L)
    // and the two-party substate must have something in degree 2.
    for (size_t u = 0; u < 3; ++u) {
        PartyMask pair_mask = PartyMask(0b111) & ~(PartyMask(1) << u);
        Subspace total(ps.field(), ps.ambient_dim());
        for (PartyMask q = 1; q < 8; ++q) {
            if ((q & pair_mask) == pair_mask && q != pair_mask)
                continue;
            total = sum_spaces(total, intersect(l, ps.coord_subspace(q)));
        }
        if (!(total == l))
            continue;
        auto [sub, sub_ps] = discard(l, ps, PartyMask(1) << u);
        if (local_invariants(sub, sub_ps, 1)[2] > 0)
            return true;
    }
    return false;
}

} // namespace stabhom
