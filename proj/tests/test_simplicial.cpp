#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "stabhom/cech.hpp"
#include "stabhom/simplicial.hpp"

using namespace stabhom;

namespace {

using Row = std::vector<size_t>;

Polyhedron random_proper(size_t n, std::mt19937_64& rng) {
    const PartyMask all = (PartyMask(1) << n) - 1;
    std::vector<PartyMask> gens;
    size_t count = 1 + rng() % 4;
    for (size_t i = 0; i < count; ++i) {
        PartyMask m = 1 + PartyMask(rng() % (all - 1)); // in [1, all-1]: never the full face
        gens.push_back(m);
    }
    return downward_closure(n, gens);
}

Polyhedron face_union(const Polyhedron& a, const Polyhedron& b) {
    std::vector<PartyMask> faces = a.faces;
    faces.insert(faces.end(), b.faces.begin(), b.faces.end());
    return make_polyhedron(a.n, std::move(faces));
}

Polyhedron face_intersection(const Polyhedron& a, const Polyhedron& b) {
    std::vector<PartyMask> faces;
    std::set_intersection(a.faces.begin(), a.faces.end(), b.faces.begin(), b.faces.end(),
                          std::back_inserter(faces));
    return make_polyhedron(a.n, std::move(faces));
}

Subspace hyperplane_of(const Subspace& l, std::mt19937_64& rng) {
    const FieldPrime& f = l.field();
    Matrix functional(1, l.dim());
    bool nonzero = false;
    while (!nonzero)
        for (size_t j = 0; j < l.dim(); ++j) {
            functional(0, j) = uint32_t(rng() % f.p());
            nonzero = nonzero || functional(0, j) != 0;
        }
    Subspace coeffs = kernel(functional, f);
    return Subspace::from_rows(mat_mul(coeffs.basis(), l.basis(), f), f);
}

} // namespace

TEST_CASE("construction and closure checks") {
    CHECK_THROWS_AS(make_polyhedron(3, {0b011}), precondition_error);
    CHECK_THROWS_AS(make_polyhedron(2, {0b100}), precondition_error);
    CHECK_THROWS_AS(make_polyhedron(2, {0}), precondition_error);

    Polyhedron g = downward_closure(3, {0b110});
    CHECK(g.faces == std::vector<PartyMask>{0b010, 0b100, 0b110});
    CHECK(g.has_face(0b010));
    CHECK_FALSE(g.has_face(0b001));

    CHECK(full_simplex(3).faces.size() == 7);
    CHECK(boundary_simplex(3).faces.size() == 6);
    CHECK_FALSE(boundary_simplex(3).has_face(0b111));
}

TEST_CASE("polyhedra of closed sets") {
    // the whole space: a single empty constraint meets every subset
    CHECK(polyhedron_of_closed(3, {0}) == full_simplex(3));
    // the empty closed set
    CHECK(polyhedron_of_closed(3, {}).faces.empty());

    // four parties, three components supported on {0,1}, {1,2}, {3}
    Polyhedron g = polyhedron_of_closed(4, {0b0011, 0b0110, 0b1000});
    CHECK(g == downward_closure(4, {0b1100, 0b1001, 0b0111}));
}

TEST_CASE("dual polyhedra") {
    Polyhedron g = polyhedron_of_closed(4, {0b0011, 0b0110, 0b1000});
    CHECK(dual(g) == downward_closure(4, {0b0101, 0b0010}));

    CHECK(dual(Polyhedron{3, {}}) == boundary_simplex(3));
    CHECK(dual(boundary_simplex(3)).faces.empty());
    CHECK_THROWS_AS(dual(full_simplex(3)), precondition_error);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        size_t n = 2 + rng() % 5;
        Polyhedron a = random_proper(n, rng);
        CHECK(dual(dual(a)) == a);

        Polyhedron b = random_proper(n, rng);
        CHECK(dual(face_union(a, b)) == face_intersection(dual(a), dual(b)));
        CHECK(dual(face_intersection(a, b)) == face_union(dual(a), dual(b)));

        // order reversal
        Polyhedron u = face_union(a, b);
        const Polyhedron du = dual(u), da = dual(a);
        CHECK(std::includes(da.faces.begin(), da.faces.end(), du.faces.begin(), du.faces.end()));
    }
}

TEST_CASE("joins") {
    Polyhedron g = downward_closure(3, {0b011, 0b100});
    CHECK(join(g, Polyhedron{0, {}}) == g);
    CHECK(join(full_simplex(2), full_simplex(3)) == full_simplex(5));

    // sphere * point is a cone, hence contractible
    Polyhedron cone = join(gamma_sphere(2), full_simplex(1));
    Row dims = cohomology_dims_of(cone, FieldPrime(2));
    CHECK(dims == Row{1, 0, 0, 0, 0});
}

TEST_CASE("doubled-party spheres") {
    CHECK(gamma_sphere(1).faces == std::vector<PartyMask>{0b01, 0b10});
    CHECK(gamma_sphere(2).faces ==
          std::vector<PartyMask>{1, 2, 3, 4, 6, 8, 9, 12}); // the 4-cycle

    for (size_t p : {1, 2, 3, 4, 5}) {
        Polyhedron sphere = gamma_sphere(p);
        // Euler characteristic of S^{p-1}
        long chi = 0;
        for (PartyMask s : sphere.faces)
            chi += std::popcount(s) % 2 == 1 ? 1 : -1;
        CHECK(chi == 1 + (p % 2 == 1 ? 1 : -1));

        Row dims = cohomology_dims_of(sphere, FieldPrime(2));
        Row expect(2 * p, 0);
        expect[0] += 1;
        expect[p - 1] += 1; // p = 1: two points, both contributions at degree 0
        CHECK(dims == expect);
    }
}

TEST_CASE("relative cohomology of pairs") {
    FieldPrime f2(2), f3(3);
    for (size_t n : {2, 3, 4, 5}) {
        CHECK(relative_cohomology_dims(Polyhedron{n, {}}, 1, f2) == [&] {
            Row r(n, 0);
            r[0] = 1;
            return r;
        }());
        Row top(n, 0);
        top[n - 1] = 1;
        CHECK(relative_cohomology_dims(boundary_simplex(n), 1, f2) == top);
        top[n - 1] = 3;
        CHECK(relative_cohomology_dims(boundary_simplex(n), 3, f3) == top);
    }

    // the pair (simplex on P+P, doubled-party sphere) carries one class in
    // degree |P|
    for (size_t p : {1, 2, 3, 4, 5}) {
        Row dims = relative_cohomology_dims(gamma_sphere(p), 1, f2);
        Row expect(2 * p, 0);
        expect[p] = 1;
        CHECK(dims == expect);
        CHECK(relative_cohomology_dims(gamma_sphere(p), 1, f3) == expect);
    }

    // coboundaries square to zero
    CochainComplex c = relative_cochain_complex(gamma_sphere(3), f3);
    for (size_t i = 0; i + 1 < c.d.size(); ++i)
        CHECK(mat_mul(c.d[i], c.d[i + 1], f3).is_zero());
}

TEST_CASE("mirror symmetry of dual pairs") {
    std::mt19937_64 rng(23);
    for (uint32_t p : {2u, 3u}) {
        FieldPrime f(p);
        for (int t = 0; t < 60; ++t) {
            size_t n = 2 + rng() % 5;
            Polyhedron g = random_proper(n, rng);
            Row a = relative_cohomology_dims(g, 1, f);
            Row b = relative_cohomology_dims(dual(g), 1, f);
            for (size_t i = 0; i < n; ++i)
                CHECK(b[i] == a[n - 1 - i]);
        }
    }
}

TEST_CASE("codim-1 oracle agrees with the quotient pipeline") {
    PartyStructure ps(FieldPrime(2), {1, 1, 1});
    Subspace l = graph_lagrangian(family("path", 3), FieldPrime(2));

    for (size_t drop = 0; drop < 3; ++drop) {
        Matrix rows(0, l.ambient_dim());
        for (size_t r = 0; r < 3; ++r)
            if (r != drop)
                rows.append_row(l.basis().row(r));
        Subspace m = Subspace::from_rows(rows, ps.field());
        REQUIRE(m.dim() == 2);

        Row oracle = codim1_oracle(l, m, ps);
        Row rel = local_invariants_rel(l, m, ps);
        CHECK(rel[0] == 0);
        for (size_t j = 1; j <= 3; ++j)
            CHECK(rel[j] == oracle[j - 1]);
    }

    CHECK_THROWS_AS(codim1_oracle(l, Subspace(ps.field(), ps.ambient_dim()), ps),
                    precondition_error);
}

TEST_CASE("random codim-1 pairs: oracle and dual-polyhedron law") {
    std::mt19937_64 rng(31);
    for (uint32_t p : {2u, 3u}) {
        for (size_t parties = 2; parties <= 5; ++parties) {
            PartyStructure ps(FieldPrime(p), std::vector<uint32_t>(parties, 1));
            SymplecticForm form(ps);
            for (int t = 0; t < 6; ++t) {
                Subspace l = random_lagrangian(ps, rng());
                Subspace m = hyperplane_of(l, rng);

                Row oracle = codim1_oracle(l, m, ps);
                Row rel = local_invariants_rel(l, m, ps);
                for (size_t j = 1; j <= parties; ++j)
                    CHECK(rel[j] == oracle[j - 1]);

                // complements swap the roles: the polyhedron of (M^perp,
                // L^perp) is the dual of the polyhedron of (L, M)
                Subspace l_perp = form.orthogonal_complement(l);
                Subspace m_perp = form.orthogonal_complement(m);
                REQUIRE(l_perp == l); // lagrangian
                Polyhedron gamma = codim1_polyhedron(l, m, ps);
                Polyhedron gamma_prime = codim1_polyhedron(m_perp, l_perp, ps);
                CHECK(gamma_prime == dual(gamma));
            }
        }
    }
}
