#include "stabhom/cech.hpp"

#include <functional>

namespace stabhom {

const Subspace& SectionCache::get(PartyMask s) {
    auto it = memo_.find(s);
    if (it == memo_.end())
        it = memo_.emplace(s, section_basis(*l_, s, *ps_)).first;
    return it->second;
}

std::vector<PartyMask> subsets_of_size(size_t l, size_t m) {
    std::vector<PartyMask> out;
    if (m == 0) {
        out.push_back(0);
        return out;
    }
    if (m > l)
        return out;
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; ++i)
        idx[i] = i;
    while (true) {
        PartyMask mask = 0;
        for (size_t i : idx)
            mask |= PartyMask(1) << i;
        out.push_back(mask);
        size_t i = m;
        while (i > 0 && idx[i - 1] == l - m + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (size_t j = i; j < m; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

const CechBlock* CechComplex::block_at(size_t degree, PartyMask mask) const {
    for (const CechBlock& b : degrees_[degree])
        if (b.mask == mask)
            return &b;
    return nullptr;
}

namespace {

std::vector<size_t> sorted_members(PartyMask s) {
    std::vector<size_t> out;
    for (size_t p = 0; s >> p; ++p)
        if (s >> p & 1)
            out.push_back(p);
    return out;
}

} // namespace

// Shared assembly: blocks per degree come from `sections`, and
// `class_coords(block, vector)` expresses an element of a smaller-subset block
// in the target block's basis. Dropping party alpha of the target contributes
// sign (-1)^alpha.
class CechBuilder {
public:
    CechComplex assemble(const PartyStructure& ps,
                         const std::function<Subspace(PartyMask)>& sections,
                         const std::function<Vec(const CechBlock&, const Vec&)>& class_coords) {
        const size_t l = ps.num_parties();
        CechComplex c(ps.field());
        c.degrees_.resize(l);
        c.dims_.assign(l, 0);
        for (size_t i = 0; i < l; ++i) {
            size_t offset = 0;
            for (PartyMask mask : subsets_of_size(l, i + 1)) {
                Subspace space = sections(mask);
                const size_t d = space.dim();
                c.degrees_[i].push_back(CechBlock{mask, offset, std::move(space)});
                offset += d;
            }
            c.dims_[i] = offset;
        }

        const FieldPrime& f = ps.field();
        for (size_t i = 0; i + 1 < l; ++i) {
            Matrix d(c.dims_[i], c.dims_[i + 1]);
            for (const CechBlock& tgt : c.degrees_[i + 1]) {
                const std::vector<size_t> members = sorted_members(tgt.mask);
                for (size_t alpha = 0; alpha < members.size(); ++alpha) {
                    const PartyMask src_mask = tgt.mask & ~(PartyMask(1) << members[alpha]);
                    const CechBlock* src = c.block_at(i, src_mask);
                    const bool negate = alpha % 2 == 1;
                    for (size_t r = 0; r < src->space.dim(); ++r) {
                        Vec coords = class_coords(tgt, src->space.basis().row(r));
                        for (size_t j = 0; j < coords.size(); ++j) {
                            if (coords[j] == 0)
                                continue;
                            d(src->offset + r, tgt.offset + j) =
                                negate ? f.neg(coords[j]) : coords[j];
                        }
                    }
                }
            }
            c.d_.push_back(std::move(d));
        }
        return c;
    }
};

CechComplex cech_complex(SectionCache& sections, size_t k) {
    const PartyStructure& ps = sections.structure();
    auto build_block = [&](PartyMask mask) -> Subspace {
        const Subspace& sec = sections.get(mask);
        if (k == 1)
            return sec;
        if (sec.dim() < k)
            return Subspace(ps.field(), ExteriorBasisMap(ps.ambient_dim(), k).dim());
        return section_space(sections.state(), mask, k, ps);
    };
    auto coords = [](const CechBlock& tgt, const Vec& v) { return coefficients(tgt.space, v); };
    return CechBuilder().assemble(ps, build_block, coords);
}

CechComplex cech_complex(const Subspace& l, const PartyStructure& ps, size_t k) {
    SectionCache cache(l, ps);
    return cech_complex(cache, k);
}

CechComplex cech_complex_full(const PartyStructure& ps) {
    auto build_block = [&](PartyMask mask) { return ps.coord_subspace(mask); };
    auto coords = [](const CechBlock& tgt, const Vec& v) { return coefficients(tgt.space, v); };
    return CechBuilder().assemble(ps, build_block, coords);
}

CechComplex cech_complex_relative(const Subspace& l, const Subspace& m, const PartyStructure& ps) {
    if (!contains_all(l, m.basis()))
        throw precondition_error("relative complex requires the sub state inside the state");
    SectionCache l_cache(l, ps);
    SectionCache m_cache(m, ps);
    // Block basis = canonical complement of M ∩ G_S inside L ∩ G_S; class
    // coordinates of v are read off after reducing v modulo M ∩ G_S.
    std::map<PartyMask, Subspace> m_secs;
    auto build_block = [&](PartyMask mask) {
        const Subspace& ls = l_cache.get(mask);
        const Subspace& ms = m_cache.get(mask);
        m_secs.emplace(mask, ms);
        return Subspace::from_rows(complement_basis(ls, ms), ps.field());
    };
    auto coords = [&](const CechBlock& tgt, const Vec& v) {
        return coefficients(tgt.space, reduce_mod(m_secs.at(tgt.mask), v));
    };
    return CechBuilder().assemble(ps, build_block, coords);
}

std::vector<size_t> cohomology_dims(const CechComplex& c) {
    const size_t l = c.parties();
    std::vector<size_t> ranks(l, 0); // rank of D^i, with D^{l-1} := 0
    for (size_t i = 0; i + 1 < l; ++i)
        ranks[i] = rank_of(c.coboundary(i), c.field());
    std::vector<size_t> dims(l);
    for (size_t i = 0; i < l; ++i) {
        size_t prev = i == 0 ? 0 : ranks[i - 1];
        dims[i] = c.dim(i) - ranks[i] - prev;
    }
    return dims;
}

std::vector<size_t> local_invariants(SectionCache& sections, size_t k) {
    const size_t l = sections.structure().num_parties();
    if (l == 0)
        return {k == 0 ? size_t(1) : size_t(0)};
    std::vector<size_t> row(l + 1, 0);
    if (k == 0)
        return row;
    CechComplex c = cech_complex(sections, k);
    std::vector<size_t> dims = cohomology_dims(c);
    for (size_t j = 1; j <= l; ++j)
        row[j] = dims[j - 1];
    return row;
}

std::vector<size_t> local_invariants(const Subspace& l, const PartyStructure& ps, size_t k) {
    SectionCache cache(l, ps);
    return local_invariants(cache, k);
}

InvariantTable invariant_table(const Subspace& l, const PartyStructure& ps) {
    InvariantTable t;
    t.parties = ps.num_parties();
    SectionCache cache(l, ps);
    for (size_t k = 0; k <= l.dim(); ++k)
        t.rows.push_back(local_invariants(cache, k));
    return t;
}

CohomologyClasses cohomology_basis_of(const CechComplex& c, size_t j) {
    const size_t l = c.parties();
    if (j < 1 || j > l)
        throw precondition_error("cohomology degree out of range");
    const size_t d = j - 1;
    const FieldPrime& f = c.field();

    Subspace cocycles = d + 1 < l ? kernel(c.coboundary(d).transpose(), f)
                                  : Subspace::full(f, c.dim(d));
    Subspace coboundaries = d == 0 ? Subspace(f, c.dim(d))
                                   : Subspace::from_rows(c.coboundary(d - 1), f);
    CohomologyClasses out;
    out.degree = j;
    out.reps = complement_basis(cocycles, coboundaries);
    return out;
}

CohomologyClasses cohomology_basis(const Subspace& l, const PartyStructure& ps, size_t k, size_t j) {
    CechComplex c = cech_complex(l, ps, k);
    return cohomology_basis_of(c, j);
}

std::vector<size_t> local_invariants_rel(const Subspace& l, const Subspace& m,
                                         const PartyStructure& ps) {
    if (!contains_all(l, m.basis()))
        throw precondition_error("relative invariants require the sub state inside the state");
    const size_t parties = ps.num_parties();
    if (parties == 0)
        return {0};
    std::vector<size_t> row(parties + 1, 0);
    if (l == m)
        return row;
    CechComplex c = cech_complex_relative(l, m, ps);
    std::vector<size_t> dims = cohomology_dims(c);
    for (size_t j = 1; j <= parties; ++j)
        row[j] = dims[j - 1];
    return row;
}

} // namespace stabhom
