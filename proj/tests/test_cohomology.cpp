#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stabhom/cech.hpp"

using namespace stabhom;

namespace {

PartyStructure qubits(size_t l, uint32_t p = 2) {
    return PartyStructure(FieldPrime(p), std::vector<uint32_t>(l, 1));
}

Subspace graph_state(const std::string& fam, size_t n) {
    return graph_lagrangian(family(fam, n), FieldPrime(2));
}

using Row = std::vector<size_t>;

// Relabel parties: new party q is old party perm[q].
Subspace pull_parties(const Subspace& l, const PartyStructure& old_ps,
                      const PartyStructure& new_ps, const std::vector<size_t>& perm) {
    Matrix out(l.dim(), new_ps.ambient_dim());
    for (size_t q = 0; q < new_ps.num_parties(); ++q) {
        auto nc = new_ps.coords(PartyMask(1) << q);
        auto oc = old_ps.coords(PartyMask(1) << perm[q]);
        REQUIRE(nc.size() == oc.size());
        for (size_t r = 0; r < l.dim(); ++r)
            for (size_t t = 0; t < nc.size(); ++t)
                out(r, nc[t]) = l.basis()(r, oc[t]);
    }
    return Subspace::from_rows(out, l.field());
}

} // namespace

TEST_CASE("subsets_of_size lists masks in lexicographic subset order") {
    CHECK(subsets_of_size(4, 2) ==
          std::vector<PartyMask>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
    CHECK(subsets_of_size(3, 1) == std::vector<PartyMask>{1, 2, 4});
    CHECK(subsets_of_size(3, 3) == std::vector<PartyMask>{0b111});
    CHECK(subsets_of_size(3, 0) == std::vector<PartyMask>{0});
    CHECK(subsets_of_size(2, 3).empty());
    CHECK(subsets_of_size(5, 3).size() == 10);
}

TEST_CASE("two-party path state by hand") {
    PartyStructure ps = qubits(2);
    Subspace l = graph_state("path", 2);
    REQUIRE(l.dim() == 2);

    CechComplex c = cech_complex(l, ps, 1);
    CHECK(c.parties() == 2);
    CHECK(c.dim(0) == 0); // both single-party sections vanish
    CHECK(c.dim(1) == 2);
    CHECK(c.block_at(0, 0b01)->space.dim() == 0);
    CHECK(c.block_at(1, 0b11)->space == l);

    CHECK(local_invariants(l, ps, 0) == Row{0, 0, 0});
    CHECK(local_invariants(l, ps, 1) == Row{0, 0, 2});
    CHECK(local_invariants(l, ps, 2) == Row{0, 0, 1});

    InvariantTable t = invariant_table(l, ps);
    CHECK(t.rows.size() == 3);
    CHECK(t.h(1, 2) == 2);
    CHECK(t.h(2, 2) == 1);
    CHECK(t.h(5, 2) == 0); // out-of-range k reads as zero
}

TEST_CASE("three-party path state grid") {
    PartyStructure ps = qubits(3);
    Subspace l = graph_state("path", 3);

    // Sections: every pair subset meets L in one line, e.g. L ∩ G_{01} is
    // spanned by the first generator e0 + f1.
    CechComplex c = cech_complex(l, ps, 1);
    CHECK(c.dim(0) == 0);
    CHECK(c.dim(1) == 3);
    CHECK(c.dim(2) == 3);
    CHECK(rank_of(c.coboundary(1), ps.field()) == 2);

    CHECK(local_invariants(l, ps, 1) == Row{0, 0, 1, 1});
    CHECK(local_invariants(l, ps, 2) == Row{0, 0, 0, 3});
    CHECK(local_invariants(l, ps, 3) == Row{0, 0, 0, 1});
}

TEST_CASE("four-party named grids") {
    PartyStructure ps = qubits(4);

    InvariantTable star = invariant_table(graph_state("star", 4), ps);
    CHECK(star.rows[1] == Row{0, 0, 1, 0, 1});
    CHECK(star.rows[2] == Row{0, 0, 0, 1, 3});
    CHECK(star.rows[3] == Row{0, 0, 0, 0, 4});
    CHECK(star.rows[4] == Row{0, 0, 0, 0, 1});

    InvariantTable cyc = invariant_table(graph_state("cycle", 4), ps);
    CHECK(cyc.rows[1] == Row{0, 0, 0, 2, 0});
    CHECK(cyc.rows[2] == Row{0, 0, 0, 1, 3});
    CHECK(cyc.rows[3] == Row{0, 0, 0, 0, 4});
    CHECK(cyc.rows[4] == Row{0, 0, 0, 0, 1});
}

TEST_CASE("five-party named grids") {
    PartyStructure ps = qubits(5);

    InvariantTable d5 = invariant_table(graph_state("D", 5), ps);
    CHECK(d5.rows[1] == Row{0, 0, 0, 1, 1, 0});
    CHECK(d5.rows[2] == Row{0, 0, 0, 0, 3, 2});
    CHECK(d5.rows[3] == Row{0, 0, 0, 0, 1, 6});
    CHECK(d5.rows[4] == Row{0, 0, 0, 0, 0, 5});
    CHECK(d5.rows[5] == Row{0, 0, 0, 0, 0, 1});

    InvariantTable c5 = invariant_table(graph_state("cycle", 5), ps);
    CHECK(c5.rows[1] == Row{0, 0, 0, 1, 1, 0});
    CHECK(c5.rows[2] == Row{0, 0, 0, 0, 5, 0});
}

TEST_CASE("single party rows are binomial coefficients") {
    for (uint32_t p : {2u, 3u, 5u}) {
        PartyStructure ps(FieldPrime(p), {3});
        Subspace l = random_lagrangian(ps, 17 + p);
        REQUIRE(l.dim() == 3);
        CHECK(local_invariants(l, ps, 1) == Row{0, 3});
        CHECK(local_invariants(l, ps, 2) == Row{0, 3});
        CHECK(local_invariants(l, ps, 3) == Row{0, 1});
        CHECK(local_invariants(l, ps, 4) == Row{0, 0});
    }
}

TEST_CASE("coboundary squares to zero") {
    for (uint32_t p : {2u, 3u, 5u}) {
        PartyStructure ps = qubits(4, p);
        Subspace l = random_lagrangian(ps, 100 + p);
        for (size_t k : {1, 2}) {
            CechComplex c = cech_complex(l, ps, k);
            for (size_t i = 0; i + 2 < c.parties(); ++i)
                CHECK(mat_mul(c.coboundary(i), c.coboundary(i + 1), ps.field()).is_zero());
        }
    }

    PartyStructure mixed(FieldPrime(3), {2, 1, 1, 2});
    CechComplex full = cech_complex_full(mixed);
    for (size_t i = 0; i + 2 < full.parties(); ++i)
        CHECK(mat_mul(full.coboundary(i), full.coboundary(i + 1), mixed.field()).is_zero());

    PartyStructure ps = qubits(4, 3);
    Subspace l = random_lagrangian(ps, 9);
    Subspace m = Subspace::from_rows(Matrix::from_rows({l.basis().row(0)}), ps.field());
    CechComplex rel = cech_complex_relative(l, m, ps);
    for (size_t i = 0; i + 2 < rel.parties(); ++i)
        CHECK(mat_mul(rel.coboundary(i), rel.coboundary(i + 1), ps.field()).is_zero());
}

TEST_CASE("full-space sheaf complex is exact over two or more parties") {
    for (uint32_t p : {2u, 3u}) {
        for (size_t parties : {2, 3, 4}) {
            PartyStructure ps = qubits(parties, p);
            CHECK(cohomology_dims(cech_complex_full(ps)) == Row(parties, 0));
        }
    }
    PartyStructure mixed(FieldPrime(3), {2, 1, 3});
    CHECK(cohomology_dims(cech_complex_full(mixed)) == Row{0, 0, 0});

    PartyStructure lone(FieldPrime(2), {2});
    CHECK(cohomology_dims(cech_complex_full(lone)) == Row{4});
}

TEST_CASE("cohomology bases span what the dimensions claim") {
    PartyStructure ps = qubits(4);
    Subspace l = graph_state("star", 4);

    for (size_t k = 1; k <= 4; ++k) {
        CechComplex c = cech_complex(l, ps, k);
        Row dims = cohomology_dims(c);
        for (size_t j = 1; j <= 4; ++j) {
            CohomologyClasses cls = cohomology_basis_of(c, j);
            CHECK(cls.reps.rows() == dims[j - 1]);
            if (cls.reps.rows() == 0)
                continue;
            // rows are cocycles...
            if (j < 4) {
                Matrix img = mat_mul(cls.reps, c.coboundary(j - 1), ps.field());
                CHECK(img.is_zero());
            }
            // ...independent modulo coboundaries
            Subspace im = j >= 2 ? Subspace::from_rows(c.coboundary(j - 2), ps.field())
                                 : Subspace(ps.field(), c.dim(0));
            Subspace joined = sum_spaces(im, Subspace::from_rows(cls.reps, ps.field()));
            CHECK(joined.dim() == im.dim() + cls.reps.rows());
        }
    }

    CHECK_THROWS_AS(cohomology_basis(l, ps, 1, 0), precondition_error);
    CHECK_THROWS_AS(cohomology_basis(l, ps, 1, 5), precondition_error);
}

TEST_CASE("invariants do not depend on party labels") {
    PartyStructure ps(FieldPrime(3), {1, 2, 1});
    Subspace l = random_lagrangian(ps, 4242);
    std::vector<size_t> perm = {2, 1, 0}; // new party q = old perm[q]
    PartyStructure ps2(FieldPrime(3), {1, 2, 1});
    Subspace l2 = pull_parties(l, ps, ps2, perm);
    CHECK(invariant_table(l, ps) == invariant_table(l2, ps2));

    std::vector<size_t> perm3 = {1, 2, 0};
    PartyStructure ps3(FieldPrime(3), {2, 1, 1});
    Subspace l3 = pull_parties(l, ps, ps3, perm3);
    CHECK(invariant_table(l, ps).rows == invariant_table(l3, ps3).rows);
}

TEST_CASE("degenerate party sets and k = 0") {
    PartyStructure none(FieldPrime(2), {});
    Subspace zero(FieldPrime(2), 0);
    CHECK(local_invariants(zero, none, 0) == Row{1});
    CHECK(local_invariants(zero, none, 1) == Row{0});
    CHECK(local_invariants(zero, none, 7) == Row{0});

    PartyStructure ps = qubits(3);
    Subspace l = graph_state("path", 3);
    CHECK(local_invariants(l, ps, 0) == Row{0, 0, 0, 0});
    CHECK(local_invariants(l, ps, 4) == Row{0, 0, 0, 0});
}

TEST_CASE("relative rows") {
    PartyStructure ps = qubits(3);
    Subspace l = graph_state("path", 3);

    // M = L gives the zero quotient.
    CHECK(local_invariants_rel(l, l, ps) == Row{0, 0, 0, 0});

    // M = 0 reduces to the plain first-order row.
    Subspace zero(ps.field(), ps.ambient_dim());
    CHECK(local_invariants_rel(l, zero, ps) == local_invariants(l, ps, 1));

    // One-generator quotients, checked against the long exact sequence of
    // 0 -> C_M -> C_L -> C_rel -> 0. The first and last reduced basis rows
    // are supported on two parties each; their spans have vanishing rows, so
    // the relative row coincides with the row of L itself.
    for (size_t r : {0, 2}) {
        Subspace m = Subspace::from_rows(Matrix::from_rows({l.basis().row(r)}), ps.field());
        CHECK(local_invariants(m, ps, 1) == Row{0, 0, 0, 0});
        CHECK(local_invariants_rel(l, m, ps) == Row{0, 0, 1, 1});
    }
    // The middle row f0+e1+f2 touches all three parties: its span contributes
    // one top class, which kills the top class of L in the quotient.
    Subspace mid = Subspace::from_rows(Matrix::from_rows({l.basis().row(1)}), ps.field());
    CHECK(local_invariants(mid, ps, 1) == Row{0, 0, 0, 1});
    CHECK(local_invariants_rel(l, mid, ps) == Row{0, 0, 1, 0});

    // M not contained in L is rejected.
    Matrix outside(1, ps.ambient_dim());
    outside(0, 0) = 1;
    Subspace m_bad = Subspace::from_rows(outside, ps.field());
    CHECK_THROWS_AS(local_invariants_rel(l, m_bad, ps), precondition_error);
    CHECK_THROWS_AS(cech_complex_relative(l, m_bad, ps), precondition_error);
}
