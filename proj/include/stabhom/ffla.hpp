// Exact dense linear algebra over prime fields F_p (p < 2^16).
// Subspaces are stored as the unique reduced row echelon basis, so subspace
// equality is structural equality. Vectors are rows throughout; "solve" finds
// row combinations x with x*a = rhs.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabhom/errors.hpp"

namespace stabhom {

class FieldPrime {
public:
    explicit FieldPrime(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t inv(uint32_t a) const;
    // Any signed integer into [0, p).
    uint32_t reduce(int64_t a) const {
        int64_t r = a % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }

    bool operator==(const FieldPrime&) const = default;

private:
    uint32_t p_;
};

using Vec = std::vector<uint32_t>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }

    Vec row(size_t r) const;
    void set_row(size_t r, const Vec& v);
    void append_row(const Vec& v);
    Matrix transpose() const;
    bool is_zero() const;

    bool operator==(const Matrix&) const = default;

private:
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

Matrix vcat(const Matrix& top, const Matrix& bottom);
Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldPrime& f);

struct RrefResult {
    Matrix mat;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

// Unique reduced row echelon form; row space preserved, zero rows dropped from
// the rank count but kept in `mat` (trailing). F_2 uses a packed-word path.
RrefResult rref(const Matrix& m, const FieldPrime& f);
size_t rank_of(const Matrix& m, const FieldPrime& f);

class Subspace {
public:
    Subspace(const FieldPrime& f, size_t ambient)
        : field_(f), ambient_(ambient), basis_(0, ambient) {}

    // Canonicalizes arbitrary spanning rows (RREF, zero rows discarded).
    static Subspace from_rows(const Matrix& rows, const FieldPrime& f);
    static Subspace full(const FieldPrime& f, size_t ambient);

    const FieldPrime& field() const { return field_; }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace&) const = default;

private:
    FieldPrime field_;
    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

// Right kernel {v : m v^T = 0}, ambient dimension = cols(m).
Subspace kernel(const Matrix& m, const FieldPrime& f);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_spaces(const Subspace& a, const Subspace& b);

// Some x with x*a = rhs, or nullopt if rhs is outside the row space. Free
// variables are pinned to zero, so the result is deterministic.
std::optional<Vec> solve(const Matrix& a, const Vec& rhs, const FieldPrime& f);

bool contains(const Subspace& a, const Vec& v);
bool contains_all(const Subspace& a, const Matrix& rows);

// Coefficients of v in the RREF basis of a; requires contains(a, v).
Vec coefficients(const Subspace& a, const Vec& v);

// v minus its component along a (read off at a's pivot columns); the remainder
// is zero iff v lies in a.
Vec reduce_mod(const Subspace& a, const Vec& v);

// Canonical basis of a complement of `base` inside `whole` (base must be
// contained in whole): the rows of rref(whole) whose pivots are not pivots of
// base. Every returned row lies in whole and vanishes on base's pivot columns,
// so the rows are independent modulo base and span whole together with base.
Matrix complement_basis(const Subspace& whole, const Subspace& base);

} // namespace stabhom
