#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "shalika/gf.hpp"

namespace shalika {

/// Dense matrix over a prime field, row-major, exact arithmetic throughout.
///
/// Vectors are columns and group elements act on the left, so the image of
/// the span of e_1..e_r under g is the span of the first r columns of g.
/// Matrices are immutable in spirit: every operation returns a fresh value.
/// Zero-row and zero-column shapes are legal (empty bases need them).
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols); // zero-filled

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field,
                            const std::vector<std::vector<std::int64_t>>& rows);
    /// Single column from raw entries (reduced mod p).
    static Matrix column(PrimeField field, const std::vector<std::int64_t>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PrimeField field() const noexcept { return field_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }
    Fp at(std::size_t i, std::size_t j) const { return Fp((*this)(i, j), field_); }
    void set(std::size_t i, std::size_t j, std::int64_t v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix col(std::size_t j) const;          // j-th column as rows()x1
    std::vector<std::uint32_t> row(std::size_t i) const;

    bool operator==(const Matrix&) const = default;
    bool is_identity() const;
    bool is_zero() const;

    /// Canonical dense encoding: row-major residues as a base-p integer.
    /// Requires p^(rows*cols) to fit in 64 bits; shape and field are the
    /// decoding context. Perfect for dedup sets over a fixed shape.
    std::uint64_t key() const;
    static Matrix from_key(PrimeField field, std::size_t rows, std::size_t cols,
                           std::uint64_t key);

private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<std::uint32_t> e_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank;
};

/// Unique reduced row echelon form. Pivot choice: first nonzero entry of the
/// current column scanning top to bottom (exact arithmetic needs no pivoting).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Inverse of a square matrix; throws singular_matrix_error on rank deficiency.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, one basis vector per row,
/// canonicalized by rref. Zero rows mean trivial kernel.
Matrix kernel(const Matrix& m);

/// Canonical particular solution of A x = b (free variables set to zero),
/// or nullopt when inconsistent.
std::optional<std::vector<std::uint32_t>> solve(const Matrix& a,
                                                const std::vector<std::uint32_t>& b);

/// Stack rows of a on top of rows of b (same width and field).
Matrix vstack(const Matrix& a, const Matrix& b);

/// Membership in the maximal parabolic P_{r,m-r}: the lower-left
/// (m-r) x r block vanishes. Assumes g invertible.
bool is_in_parabolic(const Matrix& g, std::size_t r);

/// Membership in the Shalika subgroup of GL_{2n}: lower-left n x n block
/// zero and the two diagonal n x n blocks equal. Assumes g invertible.
bool is_in_shalika(const Matrix& g, std::size_t n);

/// Aligned residue grid, one matrix row per line.
std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace shalika
