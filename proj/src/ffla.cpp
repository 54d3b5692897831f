#include "stabhom/ffla.hpp"

#include <algorithm>
#include <cassert>

namespace stabhom {

FieldPrime::FieldPrime(uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16))
        throw input_error("field modulus must satisfy 2 <= p < 2^16, got " + std::to_string(p));
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw input_error("field modulus must be prime, got " + std::to_string(p));
}

uint32_t FieldPrime::inv(uint32_t a) const {
    if (a == 0)
        throw std::logic_error("division by zero in F_p");
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    assert(r == 1);
    return reduce(t);
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty())
        return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(size_t r, const Vec& v) {
    if (v.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

void Matrix::append_row(const Vec& v) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = v.size();
    if (v.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

Matrix vcat(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0)
        return bottom;
    if (bottom.rows() == 0)
        return top;
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vcat column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c)
            m(r, c) = top(r, c);
    for (size_t r = 0; r < bottom.rows(); ++r)
        for (size_t c = 0; c < bottom.cols(); ++c)
            m(top.rows() + r, c) = bottom(r, c);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldPrime& f) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul dimension mismatch");
    Matrix out(a.rows(), b.cols());
    const uint64_t p = f.p();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            uint64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                uint64_t v = out(i, j) + aik * b(k, j);
                out(i, j) = static_cast<uint32_t>(v % p);
            }
        }
    return out;
}

namespace {

// Packed GF(2) elimination: rows as 64-bit words.
RrefResult rref_f2(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const size_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(words, 0));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (m(r, c))
                a[r][c / 64] |= uint64_t(1) << (c % 64);

    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        const size_t w = c / 64;
        const uint64_t bit = uint64_t(1) << (c % 64);
        size_t sel = rank;
        while (sel < rows && !(a[sel][w] & bit))
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[rank], a[sel]);
        for (size_t r = 0; r < rows; ++r) {
            if (r != rank && (a[r][w] & bit))
                for (size_t k = w; k < words; ++k)
                    a[r][k] ^= a[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }

    RrefResult res;
    res.mat = Matrix(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            res.mat(r, c) = (a[r][c / 64] >> (c % 64)) & 1;
    res.pivots = std::move(pivots);
    res.rank = rank;
    return res;
}

RrefResult rref_generic(Matrix a, const FieldPrime& f) {
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && a(sel, c) == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != rank)
            for (size_t k = c; k < cols; ++k)
                std::swap(a(rank, k), a(sel, k));
        const uint32_t piv_inv = f.inv(a(rank, c));
        for (size_t k = c; k < cols; ++k)
            a(rank, k) = f.mul(a(rank, k), piv_inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a(r, c) == 0)
                continue;
            const uint32_t factor = a(r, c);
            for (size_t k = c; k < cols; ++k)
                a(r, k) = f.sub(a(r, k), f.mul(factor, a(rank, k)));
        }
        pivots.push_back(c);
        ++rank;
    }
    return RrefResult{std::move(a), std::move(pivots), rank};
}

} // namespace

RrefResult rref(const Matrix& m, const FieldPrime& f) {
    return f.p() == 2 ? rref_f2(m) : rref_generic(m, f);
}

size_t rank_of(const Matrix& m, const FieldPrime& f) {
    return rref(m, f).rank;
}

Subspace Subspace::from_rows(const Matrix& rows, const FieldPrime& f) {
    RrefResult r = rref(rows, f);
    Subspace s(f, rows.cols());
    s.basis_ = Matrix(r.rank, rows.cols());
    for (size_t i = 0; i < r.rank; ++i)
        s.basis_.set_row(i, r.mat.row(i));
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::full(const FieldPrime& f, size_t ambient) {
    return from_rows(Matrix::identity(ambient), f);
}

Subspace kernel(const Matrix& m, const FieldPrime& f) {
    RrefResult r = rref(m, f);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;

    Matrix basis(cols - r.rank, cols);
    size_t out = 0;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        basis(out, c) = 1;
        for (size_t i = 0; i < r.rank; ++i)
            basis(out, r.pivots[i]) = f.neg(r.mat(i, c));
        ++out;
    }
    return Subspace::from_rows(basis, f);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw std::invalid_argument("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(a.field(), a.ambient_dim());
    // (x, -y) in the left kernel of [A; B] <=> x*A = y*B, an intersection vector.
    Matrix stacked = vcat(a.basis(), b.basis());
    Subspace left = kernel(stacked.transpose(), a.field());
    Matrix rows(left.dim(), a.ambient_dim());
    const FieldPrime& f = a.field();
    for (size_t i = 0; i < left.dim(); ++i) {
        Vec k = left.basis().row(i);
        for (size_t r = 0; r < a.dim(); ++r) {
            if (k[r] == 0)
                continue;
            for (size_t c = 0; c < a.ambient_dim(); ++c)
                rows(i, c) = f.add(rows(i, c), f.mul(k[r], a.basis()(r, c)));
        }
    }
    return Subspace::from_rows(rows, f);
}

Subspace sum_spaces(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw std::invalid_argument("sum_spaces: ambient mismatch");
    return Subspace::from_rows(vcat(a.basis(), b.basis()), a.field());
}

std::optional<Vec> solve(const Matrix& a, const Vec& rhs, const FieldPrime& f) {
    if (rhs.size() != a.cols())
        throw std::invalid_argument("solve: rhs length mismatch");
    // Row-reduce a while mirroring the operations on an identity transform, so
    // every RREF row is a known combination of input rows.
    Matrix aug(a.rows(), a.cols() + a.rows());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols() + r) = 1;
    }
    // Eliminate with pivot search confined to the original columns.
    const size_t rows = a.rows(), cols = a.cols(), width = aug.cols();
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && aug(sel, c) == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != rank)
            for (size_t k = 0; k < width; ++k)
                std::swap(aug(rank, k), aug(sel, k));
        const uint32_t piv_inv = f.inv(aug(rank, c));
        for (size_t k = 0; k < width; ++k)
            aug(rank, k) = f.mul(aug(rank, k), piv_inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || aug(r, c) == 0)
                continue;
            const uint32_t factor = aug(r, c);
            for (size_t k = 0; k < width; ++k)
                aug(r, k) = f.sub(aug(r, k), f.mul(factor, aug(rank, k)));
        }
        pivots.push_back(c);
        ++rank;
    }

    Vec rem = rhs;
    Vec x(rows, 0);
    for (size_t i = 0; i < rank; ++i) {
        const uint32_t coef = rem[pivots[i]];
        if (coef == 0)
            continue;
        for (size_t c = 0; c < cols; ++c)
            rem[c] = f.sub(rem[c], f.mul(coef, aug(i, c)));
        for (size_t r = 0; r < rows; ++r)
            x[r] = f.add(x[r], f.mul(coef, aug(i, cols + r)));
    }
    if (!std::all_of(rem.begin(), rem.end(), [](uint32_t v) { return v == 0; }))
        return std::nullopt;
    return x;
}

Vec reduce_mod(const Subspace& a, const Vec& v) {
    const FieldPrime& f = a.field();
    Vec rem = v;
    for (size_t i = 0; i < a.dim(); ++i) {
        const uint32_t coef = rem[a.pivots()[i]];
        if (coef == 0)
            continue;
        for (size_t c = 0; c < a.ambient_dim(); ++c)
            rem[c] = f.sub(rem[c], f.mul(coef, a.basis()(i, c)));
    }
    return rem;
}

bool contains(const Subspace& a, const Vec& v) {
    if (v.size() != a.ambient_dim())
        throw std::invalid_argument("contains: vector length mismatch");
    Vec rem = reduce_mod(a, v);
    return std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; });
}

bool contains_all(const Subspace& a, const Matrix& rows) {
    for (size_t r = 0; r < rows.rows(); ++r)
        if (!contains(a, rows.row(r)))
            return false;
    return true;
}

Vec coefficients(const Subspace& a, const Vec& v) {
    const FieldPrime& f = a.field();
    Vec rem = v;
    Vec coef(a.dim(), 0);
    for (size_t i = 0; i < a.dim(); ++i) {
        coef[i] = rem[a.pivots()[i]];
        if (coef[i] == 0)
            continue;
        for (size_t c = 0; c < a.ambient_dim(); ++c)
            rem[c] = f.sub(rem[c], f.mul(coef[i], a.basis()(i, c)));
    }
    if (!std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; }))
        throw std::logic_error("coefficients: vector not in subspace");
    return coef;
}

Matrix complement_basis(const Subspace& whole, const Subspace& base) {
    if (!contains_all(whole, base.basis()))
        throw precondition_error("complement_basis: base not contained in whole");
    std::vector<bool> in_base(whole.ambient_dim(), false);
    for (size_t c : base.pivots())
        in_base[c] = true;
    Matrix out(whole.dim() - base.dim(), whole.ambient_dim());
    size_t r = 0;
    for (size_t i = 0; i < whole.dim(); ++i)
        if (!in_base[whole.pivots()[i]])
            out.set_row(r++, whole.basis().row(i));
    if (r != out.rows())
        throw std::logic_error("complement_basis: pivot bookkeeping failed");
    return out;
}

} // namespace stabhom
