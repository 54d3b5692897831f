#include "stabhom/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "stabhom/exterior.hpp"

namespace stabhom {

bool Polyhedron::has_face(PartyMask s) const {
    return std::binary_search(faces.begin(), faces.end(), s);
}

namespace {

void check_vertex_budget(size_t n) {
    if (n > 30)
        throw precondition_error("vertex set too large for mask representation");
}

PartyMask full_mask(size_t n) {
    return n == 0 ? 0 : (PartyMask(1) << n) - 1;
}

std::vector<PartyMask> sorted_unique(std::vector<PartyMask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

} // namespace

Polyhedron make_polyhedron(size_t n, std::vector<PartyMask> faces) {
    check_vertex_budget(n);
    const PartyMask all = full_mask(n);
    Polyhedron g{n, sorted_unique(std::move(faces))};
    for (PartyMask s : g.faces) {
        if (s == 0 || (s & ~all))
            throw precondition_error("face is empty or out of vertex range");
        for (size_t v = 0; v < n; ++v) {
            PartyMask sub = s & ~(PartyMask(1) << v);
            if ((s >> v & 1) && sub != 0 && !g.has_face(sub))
                throw precondition_error("face set is not downward closed");
        }
    }
    return g;
}

Polyhedron downward_closure(size_t n, const std::vector<PartyMask>& generators) {
    check_vertex_budget(n);
    std::vector<PartyMask> faces;
    for (PartyMask g : generators) {
        // all nonempty submasks of g
        for (PartyMask s = g; s != 0; s = (s - 1) & g)
            faces.push_back(s);
    }
    return make_polyhedron(n, std::move(faces));
}

Polyhedron full_simplex(size_t n) {
    check_vertex_budget(n);
    if (n == 0)
        return Polyhedron{0, {}};
    return downward_closure(n, {full_mask(n)});
}

Polyhedron boundary_simplex(size_t n) {
    Polyhedron g = full_simplex(n);
    if (n > 0)
        g.faces.pop_back(); // the full face is the largest mask
    return g;
}

Polyhedron polyhedron_of_closed(size_t n, const std::vector<PartyMask>& s_list) {
    check_vertex_budget(n);
    std::vector<PartyMask> faces;
    for (PartyMask s = 1; s <= full_mask(n); ++s)
        for (PartyMask si : s_list)
            if ((s & si) == 0) {
                faces.push_back(s);
                break;
            }
    return make_polyhedron(n, std::move(faces));
}

Polyhedron dual(const Polyhedron& g) {
    const PartyMask all = full_mask(g.n);
    if (g.faces.size() == (size_t(1) << g.n) - 1)
        throw precondition_error("the full simplex has no dual polyhedron");
    std::vector<PartyMask> faces;
    for (PartyMask s = 1; s <= all; ++s) {
        PartyMask comp = all & ~s;
        if (comp != 0 && !g.has_face(comp))
            faces.push_back(s);
    }
    return make_polyhedron(g.n, std::move(faces));
}

Polyhedron join(const Polyhedron& a, const Polyhedron& b) {
    check_vertex_budget(a.n + b.n);
    std::vector<PartyMask> faces;
    auto with_empty = [](const Polyhedron& p) {
        std::vector<PartyMask> out{0};
        out.insert(out.end(), p.faces.begin(), p.faces.end());
        return out;
    };
    for (PartyMask s : with_empty(a))
        for (PartyMask t : with_empty(b)) {
            PartyMask u = s | (t << a.n);
            if (u != 0)
                faces.push_back(u);
        }
    return make_polyhedron(a.n + b.n, std::move(faces));
}

Polyhedron gamma_sphere(size_t parties) {
    check_vertex_budget(2 * parties);
    if (parties == 0)
        return Polyhedron{0, {}};
    const PartyMask all = full_mask(parties);
    std::vector<PartyMask> faces;
    for (PartyMask s = 0; s <= all; ++s) {
        const PartyMask rest = all & ~s;
        // t runs over all subsets of P \ s, including ∅
        PartyMask t = rest;
        while (true) {
            PartyMask u = s | (t << parties);
            if (u != 0)
                faces.push_back(u);
            if (t == 0)
                break;
            t = (t - 1) & rest;
        }
    }
    return make_polyhedron(2 * parties, std::move(faces));
}

namespace {

CochainComplex build_complex(size_t n, const FieldPrime& f,
                             const std::function<bool(PartyMask)>& is_cell) {
    CochainComplex c;
    c.cells.assign(n, {});
    for (PartyMask s = 1; s <= full_mask(n); ++s)
        if (is_cell(s))
            c.cells[size_t(std::popcount(s)) - 1].push_back(s); // ascending per degree
    for (size_t i = 0; i + 1 < n; ++i) {
        Matrix d(c.cells[i].size(), c.cells[i + 1].size());
        for (size_t col = 0; col < c.cells[i + 1].size(); ++col) {
            const PartyMask t = c.cells[i + 1][col];
            size_t alpha = 0;
            for (size_t v = 0; v < n; ++v) {
                if (!(t >> v & 1))
                    continue;
                const PartyMask s = t & ~(PartyMask(1) << v);
                auto it = std::lower_bound(c.cells[i].begin(), c.cells[i].end(), s);
                if (it != c.cells[i].end() && *it == s)
                    d(size_t(it - c.cells[i].begin()), col) = alpha % 2 == 0 ? 1 : f.neg(1);
                ++alpha;
            }
        }
        c.d.push_back(std::move(d));
    }
    return c;
}

} // namespace

CochainComplex relative_cochain_complex(const Polyhedron& g, const FieldPrime& f) {
    return build_complex(g.n, f, [&](PartyMask s) { return !g.has_face(s); });
}

CochainComplex cochain_complex_of(const Polyhedron& g, const FieldPrime& f) {
    return build_complex(g.n, f, [&](PartyMask s) { return g.has_face(s); });
}

std::vector<size_t> complex_cohomology(const CochainComplex& c, const FieldPrime& f) {
    const size_t n = c.cells.size();
    std::vector<size_t> ranks(n, 0);
    for (size_t i = 0; i + 1 < n; ++i)
        ranks[i] = rank_of(c.d[i], f);
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i)
        dims[i] = c.cells[i].size() - ranks[i] - (i == 0 ? 0 : ranks[i - 1]);
    return dims;
}

std::vector<size_t> relative_cohomology_dims(const Polyhedron& g, size_t coeff_dim,
                                             const FieldPrime& f) {
    std::vector<size_t> dims = complex_cohomology(relative_cochain_complex(g, f), f);
    for (size_t& x : dims)
        x *= coeff_dim;
    return dims;
}

std::vector<size_t> cohomology_dims_of(const Polyhedron& g, const FieldPrime& f) {
    return complex_cohomology(cochain_complex_of(g, f), f);
}

Polyhedron codim1_polyhedron(const Subspace& l, const Subspace& m, const PartyStructure& ps) {
    if (!contains_all(l, m.basis()) || l.dim() != m.dim() + 1)
        throw precondition_error("codim-1 oracle requires a hyperplane of the state");
    const size_t n = ps.num_parties();
    std::vector<PartyMask> faces;
    for (PartyMask s = 1; s <= full_mask(n); ++s) {
        Subspace sec = section_basis(l, s, ps);
        if (contains_all(m, sec.basis()))
            faces.push_back(s);
    }
    return make_polyhedron(n, std::move(faces));
}

std::vector<size_t> codim1_oracle(const Subspace& l, const Subspace& m, const PartyStructure& ps) {
    return relative_cohomology_dims(codim1_polyhedron(l, m, ps), 1, ps.field());
}

} // namespace stabhom
