#include "stabhom/exterior.hpp"

#include <algorithm>

namespace stabhom {

namespace {

constexpr uint64_t kDimCap = 1u << 24;

std::vector<std::vector<uint64_t>> binomials(size_t n) {
    std::vector<std::vector<uint64_t>> b(n + 1);
    for (size_t m = 0; m <= n; ++m) {
        b[m].resize(m + 1);
        b[m][0] = 1;
        for (size_t j = 1; j <= m; ++j)
            b[m][j] = b[m - 1][j - 1] + (j <= m - 1 ? b[m - 1][j] : 0);
    }
    return b;
}

// Determinant of the k×k submatrix of `rows` on the columns `cols`.
uint32_t minor_det(const Matrix& rows, const std::vector<size_t>& cols, const FieldPrime& f) {
    const size_t k = cols.size();
    std::vector<uint32_t> a(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            a[i * k + j] = rows(i, cols[j]);
    uint32_t det = 1;
    for (size_t c = 0; c < k; ++c) {
        size_t sel = c;
        while (sel < k && a[sel * k + c] == 0)
            ++sel;
        if (sel == k)
            return 0;
        if (sel != c) {
            for (size_t j = c; j < k; ++j)
                std::swap(a[c * k + j], a[sel * k + j]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c * k + c]);
        const uint32_t inv = f.inv(a[c * k + c]);
        for (size_t r = c + 1; r < k; ++r) {
            if (a[r * k + c] == 0)
                continue;
            const uint32_t factor = f.mul(a[r * k + c], inv);
            for (size_t j = c; j < k; ++j)
                a[r * k + j] = f.sub(a[r * k + j], f.mul(factor, a[c * k + j]));
        }
    }
    return det;
}

} // namespace

ExteriorBasisMap::ExteriorBasisMap(size_t n, size_t k) : n_(n), k_(k), binom_(binomials(n)) {
    if (k > n)
        throw std::invalid_argument("exterior degree exceeds ambient dimension");
    uint64_t d = binom_[n][k];
    if (d > kDimCap)
        throw precondition_error("exterior power dimension too large: C(" + std::to_string(n) +
                                 "," + std::to_string(k) + ")");
    dim_ = static_cast<size_t>(d);
}

size_t ExteriorBasisMap::rank(const std::vector<size_t>& subset) const {
    // Count k-subsets lexicographically smaller: for each position i, subsets
    // agreeing on the prefix whose i-th element is smaller than subset[i].
    uint64_t r = 0;
    size_t prev = 0;
    for (size_t i = 0; i < k_; ++i) {
        for (size_t c = prev; c < subset[i]; ++c)
            r += binom_[n_ - 1 - c][k_ - 1 - i];
        prev = subset[i] + 1;
    }
    return static_cast<size_t>(r);
}

std::vector<size_t> ExteriorBasisMap::unrank(size_t idx) const {
    std::vector<size_t> out(k_);
    uint64_t rem = idx;
    size_t c = 0;
    for (size_t i = 0; i < k_; ++i) {
        while (true) {
            uint64_t block = binom_[n_ - 1 - c][k_ - 1 - i];
            if (rem < block)
                break;
            rem -= block;
            ++c;
        }
        out[i] = c++;
    }
    return out;
}

Vec wedge_embed(const std::vector<Vec>& vectors, const ExteriorBasisMap& map, const FieldPrime& f) {
    if (vectors.size() != map.k())
        throw std::invalid_argument("wedge_embed: expected k vectors");
    for (const Vec& v : vectors)
        if (v.size() != map.n())
            throw std::invalid_argument("wedge_embed: vector length mismatch");
    Matrix rows(map.k(), map.n());
    for (size_t i = 0; i < vectors.size(); ++i)
        rows.set_row(i, vectors[i]);

    Vec out(map.dim(), 0);
    std::vector<size_t> cols(map.k());
    for (size_t i = 0; i < map.k(); ++i)
        cols[i] = i;
    if (map.k() == 0) {
        out[0] = 1;
        return out;
    }
    while (true) {
        out[map.rank(cols)] = minor_det(rows, cols, f);
        // next k-subset of {0..n-1} in lex order
        size_t i = map.k();
        while (i > 0 && cols[i - 1] == map.n() - map.k() + i - 1)
            --i;
        if (i == 0)
            break;
        ++cols[i - 1];
        for (size_t j = i; j < map.k(); ++j)
            cols[j] = cols[j - 1] + 1;
    }
    return out;
}

Subspace section_basis(const Subspace& l, PartyMask s, const PartyStructure& ps) {
    return intersect(l, ps.coord_subspace(s));
}

Subspace section_space(const Subspace& l, PartyMask s, size_t k, const PartyStructure& ps) {
    Subspace sec = section_basis(l, s, ps);
    if (k == 1)
        return sec;
    const FieldPrime& f = ps.field();
    ExteriorBasisMap map(ps.ambient_dim(), k);
    if (sec.dim() < k)
        return Subspace(f, map.dim());

    // Wedge coordinates vanish off the support of S, so evaluate minors only on
    // k-subsets of S's coordinates and scatter into the full index set.
    const std::vector<size_t> support = ps.coords(s);
    const size_t d = sec.dim();
    ExteriorBasisMap rowsel(d, k);
    Matrix out(rowsel.dim(), map.dim());

    std::vector<size_t> rows_idx(k);
    for (size_t rsel = 0; rsel < rowsel.dim(); ++rsel) {
        rows_idx = rowsel.unrank(rsel);
        Matrix sub(k, l.ambient_dim());
        for (size_t i = 0; i < k; ++i)
            sub.set_row(i, sec.basis().row(rows_idx[i]));

        std::vector<size_t> pick(k);
        for (size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            std::vector<size_t> cols(k);
            for (size_t i = 0; i < k; ++i)
                cols[i] = support[pick[i]];
            uint32_t det = minor_det(sub, cols, f);
            if (det != 0)
                out(rsel, map.rank(cols)) = det;
            size_t i = k;
            while (i > 0 && pick[i - 1] == support.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return Subspace::from_rows(out, f);
}

} // namespace stabhom
