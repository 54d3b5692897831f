#include "stabhom/symplectic.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace stabhom {

PartyStructure::PartyStructure(const FieldPrime& f, std::vector<uint32_t> qudits)
    : field_(f), qudits_(std::move(qudits)) {
    if (qudits_.size() >= 31)
        throw input_error("party count must be < 31");
    offsets_.resize(qudits_.size() + 1, 0);
    for (size_t p = 0; p < qudits_.size(); ++p)
        offsets_[p + 1] = offsets_[p] + 2 * qudits_[p];
}

std::vector<size_t> PartyStructure::coords(PartyMask s) const {
    std::vector<size_t> out;
    for (size_t p = 0; p < num_parties(); ++p) {
        if (!(s >> p & 1))
            continue;
        for (size_t c = offsets_[p]; c < offsets_[p + 1]; ++c)
            out.push_back(c);
    }
    return out;
}

Subspace PartyStructure::coord_subspace(PartyMask s) const {
    std::vector<size_t> cs = coords(s);
    Matrix rows(cs.size(), ambient_dim());
    for (size_t i = 0; i < cs.size(); ++i)
        rows(i, cs[i]) = 1;
    return Subspace::from_rows(rows, field_);
}

uint32_t SymplecticForm::omega(const Vec& u, const Vec& v) const {
    const size_t n = ps_.ambient_dim();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("omega: dimension mismatch");
    const FieldPrime& f = ps_.field();
    uint32_t acc = 0;
    for (size_t t = 0; 2 * t + 1 < n; ++t) {
        acc = f.add(acc, f.mul(u[2 * t], v[2 * t + 1]));
        acc = f.sub(acc, f.mul(u[2 * t + 1], v[2 * t]));
    }
    return acc;
}

uint32_t SymplecticForm::omega_party(size_t p, const Vec& u, const Vec& v) const {
    const FieldPrime& f = ps_.field();
    const size_t end = ps_.block_offset(p) + ps_.block_width(p);
    uint32_t acc = 0;
    for (size_t c = ps_.block_offset(p); c < end; c += 2) {
        acc = f.add(acc, f.mul(u[c], v[c + 1]));
        acc = f.sub(acc, f.mul(u[c + 1], v[c]));
    }
    return acc;
}

Vec SymplecticForm::omega_dual(const Vec& u) const {
    const FieldPrime& f = ps_.field();
    Vec out(u.size(), 0);
    for (size_t t = 0; 2 * t + 1 < u.size(); ++t) {
        out[2 * t] = f.neg(u[2 * t + 1]);
        out[2 * t + 1] = u[2 * t];
    }
    return out;
}

Subspace SymplecticForm::orthogonal_complement(const Subspace& l) const {
    if (l.ambient_dim() != ps_.ambient_dim())
        throw std::invalid_argument("orthogonal_complement: ambient mismatch");
    if (l.dim() == 0)
        return Subspace::full(ps_.field(), ps_.ambient_dim());
    Matrix m(l.dim(), l.ambient_dim());
    for (size_t i = 0; i < l.dim(); ++i)
        m.set_row(i, omega_dual(l.basis().row(i)));
    return kernel(m, ps_.field());
}

bool SymplecticForm::is_isotropic(const Subspace& l) const {
    for (size_t i = 0; i < l.dim(); ++i) {
        Vec bi = l.basis().row(i);
        for (size_t j = i + 1; j < l.dim(); ++j)
            if (omega(bi, l.basis().row(j)) != 0)
                return false;
    }
    return true;
}

bool SymplecticForm::is_lagrangian(const Subspace& l) const {
    return is_isotropic(l) && 2 * l.dim() == ps_.ambient_dim();
}

Graph make_graph(size_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) {
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (auto& e : edges) {
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (e.first == e.second)
            throw input_error("graph has a loop at vertex " + std::to_string(e.first));
        if (e.second >= n)
            throw input_error("graph edge endpoint out of range: " + std::to_string(e.second));
        if (!seen.insert(e).second)
            throw input_error("duplicate graph edge");
    }
    Graph g;
    g.n = n;
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

Subspace graph_lagrangian(const Graph& g, const FieldPrime& f) {
    // One qudit per party: e_p at coordinate 2p, f_p at 2p+1.
    Matrix rows(g.n, 2 * g.n);
    for (size_t p = 0; p < g.n; ++p)
        rows(p, 2 * p) = 1;
    for (auto [u, v] : g.edges) {
        rows(u, 2 * v + 1) = 1;
        rows(v, 2 * u + 1) = 1;
    }
    return Subspace::from_rows(rows, f);
}

Graph family(const std::string& name, size_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto path_edges = [&](size_t count) {
        for (uint32_t i = 0; i + 1 < count; ++i)
            edges.emplace_back(i, i + 1);
    };
    if (name == "path") {
        if (n < 1)
            throw input_error("path needs n >= 1");
        path_edges(n);
    } else if (name == "star") {
        if (n < 1)
            throw input_error("star needs n >= 1");
        for (uint32_t i = 1; i < n; ++i)
            edges.emplace_back(0u, i);
    } else if (name == "cycle") {
        if (n < 3)
            throw input_error("cycle needs n >= 3");
        path_edges(n);
        edges.emplace_back(uint32_t(n - 1), 0u);
    } else if (name == "D") {
        if (n < 4)
            throw input_error("D needs n >= 4");
        path_edges(n - 1);
        edges.emplace_back(1u, uint32_t(n - 1));
    } else if (name == "E6" || name == "E7") {
        const size_t k = name == "E6" ? 6 : 7;
        if (n != k)
            throw input_error(name + " has exactly " + std::to_string(k) + " vertices");
        path_edges(k - 1);
        edges.emplace_back(2u, uint32_t(k - 1));
    } else {
        throw input_error("unknown family: " + name);
    }
    return make_graph(n, std::move(edges));
}

Subspace random_lagrangian(const PartyStructure& ps, uint64_t seed) {
    const size_t n = ps.ambient_dim();
    const FieldPrime& f = ps.field();
    SymplecticForm form(ps);

    // Reference lagrangian span{e_i}.
    Matrix basis(n / 2, n);
    for (size_t i = 0; 2 * i < n; ++i)
        basis(i, 2 * i) = 1;
    if (n == 0)
        return Subspace(f, 0);

    std::mt19937_64 rng(seed);
    auto below = [&rng](uint64_t m) { return static_cast<size_t>(rng() % m); };

    const size_t steps = 4 * n + 16;
    for (size_t step = 0; step < steps; ++step) {
        if (step % 5 == 4) {
            // Swap two qudits inside one party (a symplectic permutation).
            size_t p = below(ps.num_parties());
            if (ps.qudits(p) >= 2) {
                size_t a = below(ps.qudits(p)), b = below(ps.qudits(p));
                size_t ca = ps.block_offset(p) + 2 * a, cb = ps.block_offset(p) + 2 * b;
                for (size_t r = 0; r < basis.rows(); ++r) {
                    std::swap(basis(r, ca), basis(r, cb));
                    std::swap(basis(r, ca + 1), basis(r, cb + 1));
                }
            }
            continue;
        }
        Vec v(n, 0);
        bool nonzero = false;
        while (!nonzero) {
            for (size_t c = 0; c < n; ++c) {
                v[c] = static_cast<uint32_t>(rng() % f.p());
                nonzero |= v[c] != 0;
            }
        }
        // Transvection T_v(x) = x + ω(x,v) v preserves ω for every v.
        for (size_t r = 0; r < basis.rows(); ++r) {
            Vec x = basis.row(r);
            uint32_t c = form.omega(x, v);
            if (c == 0)
                continue;
            for (size_t k = 0; k < n; ++k)
                x[k] = f.add(x[k], f.mul(c, v[k]));
            basis.set_row(r, x);
        }
    }
    return Subspace::from_rows(basis, f);
}

Matrix symplectic_partners(const Matrix& iso, const Subspace& within, const SymplecticForm& form) {
    const FieldPrime& f = within.field();
    const size_t d = iso.rows();
    const size_t n = within.ambient_dim();
    Matrix partners(d, n);
    // Constraints are rows ω(b_j, ·) and ω(c_j, ·) evaluated on within's basis;
    // partner i solves for the indicator at b_i.
    for (size_t i = 0; i < d; ++i) {
        const size_t ncons = d + i;
        // a[r][j] = ω(b_j or c_j, within_r), so (y*a)[j] = ω(b_j or c_j, y*W).
        Matrix a(within.dim(), ncons);
        for (size_t r = 0; r < within.dim(); ++r) {
            Vec w = within.basis().row(r);
            for (size_t j = 0; j < d; ++j)
                a(r, j) = form.omega(iso.row(j), w);
            for (size_t j = 0; j < i; ++j)
                a(r, d + j) = form.omega(partners.row(j), w);
        }
        Vec target(ncons, 0);
        target[i] = 1;
        auto y = solve(a, target, f);
        if (!y)
            throw std::logic_error("symplectic_partners: no partner (degenerate form?)");
        Vec c(n, 0);
        for (size_t r = 0; r < within.dim(); ++r) {
            if ((*y)[r] == 0)
                continue;
            for (size_t k = 0; k < n; ++k)
                c[k] = f.add(c[k], f.mul((*y)[r], within.basis()(r, k)));
        }
        partners.set_row(i, c);
    }
    return partners;
}

Matrix symplectic_basis_of(const Subspace& v, const SymplecticForm& form) {
    const FieldPrime& f = v.field();
    std::vector<Vec> rem;
    for (size_t i = 0; i < v.dim(); ++i)
        rem.push_back(v.basis().row(i));
    Matrix out(v.dim(), v.ambient_dim());
    size_t filled = 0;
    while (!rem.empty()) {
        Vec e = rem.front();
        rem.erase(rem.begin());
        size_t pi = rem.size();
        for (size_t i = 0; i < rem.size(); ++i)
            if (form.omega(e, rem[i]) != 0) {
                pi = i;
                break;
            }
        if (pi == rem.size())
            throw std::logic_error("symplectic_basis_of: degenerate restriction");
        Vec fr = rem[pi];
        rem.erase(rem.begin() + pi);
        const uint32_t s = f.inv(form.omega(e, fr));
        for (auto& x : fr)
            x = f.mul(x, s);
        // Reduce the remaining vectors into the ω-complement of span{e, fr}:
        // x' = x - ω(x,fr) e + ω(x,e) fr with ω(e,fr) = 1.
        for (auto& x : rem) {
            const uint32_t a = form.omega(x, fr), b = form.omega(x, e);
            for (size_t k = 0; k < x.size(); ++k)
                x[k] = f.add(f.sub(x[k], f.mul(a, e[k])), f.mul(b, fr[k]));
        }
        out.set_row(filled++, e);
        out.set_row(filled++, fr);
    }
    return out;
}

} // namespace stabhom
