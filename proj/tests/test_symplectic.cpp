#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stabhom/symplectic.hpp"

using namespace stabhom;

namespace {

PartyStructure qubits(size_t l, uint32_t p = 2) {
    return PartyStructure(FieldPrime(p), std::vector<uint32_t>(l, 1));
}

Vec unit(size_t n, size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("omega on standard basis and alternation") {
    PartyStructure ps = qubits(2);
    SymplecticForm form(ps);
    // coordinates: e1 f1 e2 f2
    CHECK(form.omega(unit(4, 0), unit(4, 1)) == 1);
    CHECK(form.omega(unit(4, 1), unit(4, 0)) == 1); // -1 mod 2

    PartyStructure ps3(FieldPrime(3), {1, 1});
    SymplecticForm form3(ps3);
    CHECK(form3.omega(unit(4, 0), unit(4, 1)) == 1);
    CHECK(form3.omega(unit(4, 1), unit(4, 0)) == 2); // -1 mod 3
    CHECK(form3.omega(unit(4, 0), unit(4, 2)) == 0);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Vec v(4);
        for (auto& x : v)
            x = static_cast<uint32_t>(rng() % 3);
        CHECK(form3.omega(v, v) == 0);
    }
}

TEST_CASE("party blocks are omega-orthogonal") {
    PartyStructure ps(FieldPrime(5), {2, 1, 3});
    SymplecticForm form(ps);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        Vec u(ps.ambient_dim(), 0), v(ps.ambient_dim(), 0);
        for (size_t c : ps.coords(0b001))
            u[c] = static_cast<uint32_t>(rng() % 5);
        for (size_t c : ps.coords(0b110))
            v[c] = static_cast<uint32_t>(rng() % 5);
        CHECK(form.omega(u, v) == 0);
    }
}

TEST_CASE("gram matrix of omega has full rank") {
    for (uint32_t p : {2u, 3u, 5u}) {
        PartyStructure ps(FieldPrime(p), {1, 2, 1});
        SymplecticForm form(ps);
        const size_t n = ps.ambient_dim();
        Matrix gram(n, n);
        for (size_t i = 0; i < n; ++i)
            gram.set_row(i, form.omega_dual(unit(n, i)));
        CHECK(rank_of(gram, ps.field()) == n);
    }
}

TEST_CASE("orthogonal complement") {
    PartyStructure ps = qubits(3);
    SymplecticForm form(ps);

    CHECK(form.orthogonal_complement(Subspace(ps.field(), 6)) == Subspace::full(ps.field(), 6));

    Subspace l = graph_lagrangian(family("path", 3), ps.field());
    CHECK(form.orthogonal_complement(l) == l);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Matrix m(1 + rng() % 4, 6);
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < 6; ++c)
                m(r, c) = static_cast<uint32_t>(rng() % 2);
        Subspace s = Subspace::from_rows(m, ps.field());
        Subspace perp = form.orthogonal_complement(s);
        CHECK(s.dim() + perp.dim() == 6);
        CHECK(form.orthogonal_complement(perp) == s);
    }
}

TEST_CASE("isotropic and lagrangian predicates") {
    PartyStructure ps = qubits(1);
    SymplecticForm form(ps);
    CHECK(form.is_isotropic(Subspace(ps.field(), 2)));
    CHECK_FALSE(form.is_lagrangian(Subspace(ps.field(), 2)));

    PartyStructure empty(FieldPrime(2), {});
    SymplecticForm eform(empty);
    CHECK(eform.is_lagrangian(Subspace(empty.field(), 0)));

    Subspace ef = Subspace::full(ps.field(), 2); // span{e_1, f_1}
    CHECK_FALSE(form.is_isotropic(ef));
}

TEST_CASE("graph lagrangians") {
    FieldPrime f2(2);

    Graph edgeless = make_graph(3, {});
    Subspace l0 = graph_lagrangian(edgeless, f2);
    CHECK(l0.dim() == 3);
    CHECK(contains(l0, {1, 0, 0, 0, 0, 0}));
    CHECK(contains(l0, {0, 0, 1, 0, 0, 0}));
    CHECK(contains(l0, {0, 0, 0, 0, 1, 0}));

    Subspace a2 = graph_lagrangian(family("path", 2), f2);
    CHECK(a2.dim() == 2);
    CHECK(contains(a2, {1, 0, 0, 1})); // e1 + f2
    CHECK(contains(a2, {0, 1, 1, 0})); // f1 + e2

    SymplecticForm form4(qubits(4));
    CHECK(form4.is_lagrangian(graph_lagrangian(family("star", 4), f2)));
}

TEST_CASE("graph lagrangians are isotropic for every graph on <= 5 vertices") {
    for (uint32_t p : {2u, 3u}) {
        FieldPrime f(p);
        for (size_t n = 1; n <= 5; ++n) {
            std::vector<std::pair<uint32_t, uint32_t>> all;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j)
                    all.emplace_back(i, j);
            SymplecticForm form(qubits(n, p));
            for (uint64_t mask = 0; mask < (uint64_t(1) << all.size()); ++mask) {
                std::vector<std::pair<uint32_t, uint32_t>> edges;
                for (size_t e = 0; e < all.size(); ++e)
                    if (mask >> e & 1)
                        edges.push_back(all[e]);
                Subspace l = graph_lagrangian(make_graph(n, edges), f);
                CHECK(l.dim() == n);
                CHECK(form.is_isotropic(l));
            }
        }
    }
}

TEST_CASE("graph lagrangians sampled on 6..8 vertices") {
    std::mt19937_64 rng(11);
    for (size_t n = 6; n <= 8; ++n) {
        SymplecticForm form(qubits(n));
        for (int t = 0; t < 20; ++t) {
            std::vector<std::pair<uint32_t, uint32_t>> edges;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j)
                    if (rng() % 2)
                        edges.emplace_back(i, j);
            Subspace l = graph_lagrangian(make_graph(n, edges), FieldPrime(2));
            CHECK(l.dim() == n);
            CHECK(form.is_isotropic(l));
        }
    }
}

TEST_CASE("named families") {
    Graph p2 = family("path", 2);
    CHECK(p2.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}});

    Graph c4 = family("cycle", 4);
    CHECK(c4.edges.size() == 4);

    Graph s5 = family("star", 5);
    CHECK(s5.edges.size() == 4);
    for (auto [u, v] : s5.edges)
        CHECK(u == 0);

    Graph d5 = family("D", 5);
    CHECK(d5.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {1, 4}, {2, 3}});

    Graph e6 = family("E6", 6);
    CHECK(e6.edges == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 4}});

    CHECK_THROWS_AS(family("cycle", 2), input_error);
    CHECK_THROWS_AS(family("E6", 7), input_error);
    CHECK_THROWS_AS(family("hexagon", 6), input_error);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(make_graph(3, {{0, 2}, {2, 0}}), input_error);
}

TEST_CASE("random lagrangians") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (size_t l = 1; l <= 4; ++l) {
            PartyStructure ps = qubits(l, p);
            SymplecticForm form(ps);
            for (uint64_t seed = 0; seed < 34; ++seed) {
                Subspace s = random_lagrangian(ps, seed);
                CHECK(s.dim() == l);
                CHECK(form.is_lagrangian(s));
                CHECK(random_lagrangian(ps, seed) == s);
            }
        }
    }
    // multi-qudit parties
    PartyStructure ps(FieldPrime(3), {2, 1, 3});
    SymplecticForm form(ps);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Subspace s = random_lagrangian(ps, seed);
        CHECK(s.dim() == 6);
        CHECK(form.is_lagrangian(s));
    }
}

TEST_CASE("symplectic partners and symplectic basis") {
    PartyStructure ps(FieldPrime(5), {2});
    SymplecticForm form(ps);
    Subspace gp = Subspace::full(ps.field(), 4);

    Matrix iso = Matrix::from_rows({{1, 0, 2, 0}}); // isotropic single row
    Matrix c = symplectic_partners(iso, gp, form);
    CHECK(form.omega(iso.row(0), c.row(0)) == 1);

    Matrix iso2 = Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}});
    Matrix c2 = symplectic_partners(iso2, gp, form);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(form.omega(iso2.row(i), c2.row(j)) == (i == j ? 1u : 0u));
    CHECK(form.omega(c2.row(0), c2.row(1)) == 0);

    Matrix sb = symplectic_basis_of(gp, form);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(form.omega(sb.row(2 * i), sb.row(2 * i + 1)) == 1);
        for (size_t j = 0; j < 2; ++j) {
            if (i == j)
                continue;
            CHECK(form.omega(sb.row(2 * i), sb.row(2 * j)) == 0);
            CHECK(form.omega(sb.row(2 * i), sb.row(2 * j + 1)) == 0);
            CHECK(form.omega(sb.row(2 * i + 1), sb.row(2 * j + 1)) == 0);
        }
    }
}
