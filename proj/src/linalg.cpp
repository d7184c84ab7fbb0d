#include "shalika/linalg.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "shalika/errors.hpp"

namespace shalika {

using detail::mod_add;
using detail::mod_inv;
using detail::mod_mul;
using detail::mod_sub;

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(field), e_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("Matrix: ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(PrimeField field, const std::vector<std::int64_t>& entries) {
    Matrix m(field, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    e_[i * cols_ + j] = Fp(v, field_).value();
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_)
        throw std::invalid_argument("Matrix: product over mixed fields");
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("Matrix: product shape mismatch " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) +
                                    " * " + std::to_string(rhs.rows_) + "x" +
                                    std::to_string(rhs.cols_));
    const std::uint32_t p = field_.modulus();
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < cols_; ++t)
                acc += static_cast<std::uint64_t>(e_[i * cols_ + t]) *
                       rhs.e_[t * rhs.cols_ + j];
            out.e_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Matrix: sum shape or field mismatch");
    const std::uint32_t p = field_.modulus();
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = mod_add(e_[i], rhs.e_[i], p);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.e_[j * rows_ + i] = e_[i * cols_ + j];
    return out;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix out(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.e_[i] = e_[i * cols_ + j];
    return out;
}

std::vector<std::uint32_t> Matrix::row(std::size_t i) const {
    return std::vector<std::uint32_t>(e_.begin() + i * cols_,
                                      e_.begin() + (i + 1) * cols_);
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (e_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

std::uint64_t Matrix::key() const {
    const std::uint64_t p = field_.modulus();
    std::uint64_t code = 0;
    // Horner over reversed entries keeps the first entry least significant.
    for (std::size_t i = e_.size(); i-- > 0;) {
        if (code > (~std::uint64_t{0} - e_[i]) / p)
            throw std::invalid_argument("Matrix: key does not fit in 64 bits");
        code = code * p + e_[i];
    }
    return code;
}

Matrix Matrix::from_key(PrimeField field, std::size_t rows, std::size_t cols,
                        std::uint64_t key) {
    const std::uint64_t p = field.modulus();
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        m.e_[i] = static_cast<std::uint32_t>(key % p);
        key /= p;
    }
    if (key != 0)
        throw std::invalid_argument("Matrix: key out of range for shape");
    return m;
}

namespace {

// In-place elimination on a raw row-major buffer; returns pivot columns.
// Used by rref/solve/inverse so they share one code path.
std::vector<std::size_t> eliminate(std::vector<std::uint32_t>& a, std::size_t rows,
                                   std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr * cols + col] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[pr * cols + j], a[row * cols + j]);
        std::uint32_t s = mod_inv(a[row * cols + col], p);
        for (std::size_t j = col; j < cols; ++j)
            a[row * cols + j] = mod_mul(a[row * cols + j], s, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row) continue;
            std::uint32_t f = a[i * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] =
                    mod_sub(a[i * cols + j], mod_mul(f, a[row * cols + j], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::uint32_t> raw(const Matrix& m) {
    std::vector<std::uint32_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
    return a;
}

Matrix from_raw(PrimeField f, std::size_t rows, std::size_t cols,
                const std::vector<std::uint32_t>& a) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, a[i * cols + j]);
    return m;
}

} // namespace

RrefResult rref(const Matrix& m) {
    auto a = raw(m);
    auto pivots = eliminate(a, m.rows(), m.cols(), m.field().modulus());
    return RrefResult{from_raw(m.field(), m.rows(), m.cols(), a), pivots,
                      pivots.size()};
}

std::size_t rank(const Matrix& m) {
    auto a = raw(m);
    return eliminate(a, m.rows(), m.cols(), m.field().modulus()).size();
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    const std::uint32_t p = m.field().modulus();
    // Eliminate [m | I]; left half reaching I exposes the inverse on the right.
    std::vector<std::uint32_t> a(n * 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m(i, j);
        a[i * 2 * n + n + i] = 1;
    }
    auto pivots = eliminate(a, n, 2 * n, p);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw singular_matrix_error("inverse: rank " +
                                    std::to_string(rank(m)) + " < " +
                                    std::to_string(n));
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i * 2 * n + n + j]);
    return out;
}

Matrix kernel(const Matrix& m) {
    const std::size_t nvars = m.cols();
    auto r = rref(m);
    std::vector<bool> is_pivot(nvars, false);
    for (auto c : r.pivots) is_pivot[c] = true;

    const std::uint32_t p = m.field().modulus();
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t free_col = 0; free_col < nvars; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::int64_t> v(nvars, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] =
                static_cast<std::int64_t>(mod_sub(0, r.matrix(i, free_col), p));
        basis.push_back(std::move(v));
    }
    return rref(Matrix::from_rows(m.field(), basis)).matrix;
}

std::optional<std::vector<std::uint32_t>> solve(const Matrix& a,
                                                const std::vector<std::uint32_t>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::uint32_t p = a.field().modulus();
    std::vector<std::uint32_t> aug(rows * (cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i * (cols + 1) + j] = a(i, j);
        aug[i * (cols + 1) + cols] = b[i] % p;
    }
    auto pivots = eliminate(aug, rows, cols + 1, p);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<std::uint32_t> x(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i * (cols + 1) + cols];
    return x;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols())
        throw std::invalid_argument("vstack: width or field mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b(i, j));
    return out;
}

bool is_in_parabolic(const Matrix& g, std::size_t r) {
    if (g.rows() != g.cols())
        throw std::invalid_argument("is_in_parabolic: matrix not square");
    const std::size_t m = g.rows();
    if (r < 1 || r >= m)
        throw std::invalid_argument("is_in_parabolic: need 1 <= r < " +
                                    std::to_string(m));
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (g(i, j) != 0) return false;
    return true;
}

bool is_in_shalika(const Matrix& g, std::size_t n) {
    if (g.rows() != g.cols() || g.rows() != 2 * n)
        throw std::invalid_argument("is_in_shalika: expected a 2n x 2n matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g(n + i, j) != 0) return false;
            if (g(i, j) != g(n + i, n + j)) return false;
        }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    std::size_t width = 1;
    for (std::uint32_t q = m.field().modulus() - 1; q >= 10; q /= 10) ++width;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = std::to_string(m(i, j));
            os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os;
}

} // namespace shalika
