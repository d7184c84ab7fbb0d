#include "shalika/subspace.hpp"

#include <stdexcept>
#include <string>

#include "shalika/errors.hpp"

namespace shalika {

using detail::mod_mul;
using detail::mod_sub;

namespace {

Matrix drop_zero_rows(const Matrix& m, std::size_t keep) {
    Matrix out(m.field(), keep, m.cols());
    for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, j));
    return out;
}

} // namespace

Subspace::Subspace(RrefResult canonical)
    : basis_(drop_zero_rows(canonical.matrix, canonical.rank)),
      pivots_(std::move(canonical.pivots)) {}

Subspace Subspace::zero(PrimeField field, std::size_t ambient) {
    return Subspace(rref(Matrix(field, 0, ambient)));
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
    return Subspace(rref(Matrix::identity(field, ambient)));
}

Subspace Subspace::span_rows(const Matrix& gens) { return Subspace(rref(gens)); }

Subspace Subspace::span_columns(const Matrix& gens) {
    return Subspace(rref(gens.transpose()));
}

Subspace Subspace::standard(PrimeField field, std::size_t ambient,
                            const std::vector<std::size_t>& indices) {
    Matrix gens(field, indices.size(), ambient);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= ambient)
            throw std::invalid_argument("Subspace::standard: index out of range");
        gens.set(i, indices[i], 1);
    }
    return span_rows(gens);
}

namespace {

// Reduce v against an RREF basis: subtract v[pivot_i] * row_i for each row.
// The result vanishes at all pivot columns; it is zero iff v is in the span.
std::vector<std::uint32_t> reduce_against(const Matrix& basis,
                                          const std::vector<std::size_t>& pivots,
                                          const Matrix& v,
                                          std::vector<std::uint32_t>* coords) {
    const std::uint32_t p = basis.field().modulus();
    std::vector<std::uint32_t> w(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) w[j] = v(j, 0);
    if (coords) coords->assign(basis.rows(), 0);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::uint32_t c = w[pivots[i]];
        if (coords) (*coords)[i] = c;
        if (c == 0) continue;
        for (std::size_t j = pivots[i]; j < basis.cols(); ++j)
            w[j] = mod_sub(w[j], mod_mul(c, basis(i, j), p), p);
    }
    return w;
}

bool all_zero(const std::vector<std::uint32_t>& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

void require_compatible(const Subspace& u, const Subspace& v) {
    if (u.field() != v.field() || u.ambient() != v.ambient())
        throw std::invalid_argument("Subspace: ambient space or field mismatch");
}

} // namespace

bool Subspace::contains(const Matrix& v) const {
    if (v.rows() != ambient() || v.cols() != 1 || v.field() != field())
        throw std::invalid_argument("Subspace::contains: expected an ambient column");
    return all_zero(reduce_against(basis_, pivots_, v, nullptr));
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.transpose().col(i)))
            return false;
    return true;
}

std::vector<std::uint32_t> Subspace::coordinates(const Matrix& v) const {
    std::vector<std::uint32_t> coords;
    if (!all_zero(reduce_against(basis_, pivots_, v, &coords)))
        throw std::invalid_argument("Subspace::coordinates: vector outside subspace");
    return coords;
}

std::vector<std::uint32_t> Subspace::quotient_coords(const Matrix& v) const {
    auto reduced = reduce_against(basis_, pivots_, v, nullptr);
    std::vector<bool> is_pivot(ambient(), false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::uint32_t> out;
    out.reserve(ambient() - dim());
    for (std::size_t j = 0; j < ambient(); ++j)
        if (!is_pivot[j]) out.push_back(reduced[j]);
    return out;
}

Matrix Subspace::lift_quotient(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != ambient() - dim())
        throw std::invalid_argument("Subspace::lift_quotient: wrong coordinate count");
    std::vector<bool> is_pivot(ambient(), false);
    for (auto c : pivots_) is_pivot[c] = true;
    Matrix v(field(), ambient(), 1);
    std::size_t t = 0;
    for (std::size_t j = 0; j < ambient(); ++j)
        if (!is_pivot[j]) v.set(j, 0, coords[t++]);
    return v;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.field(), u.ambient());
    // Kernel method: rows x.A = y.B of the two bases agree exactly on the
    // kernel of [A^T | -B^T].
    const Matrix at = u.basis().transpose();
    const Matrix bt = v.basis().transpose();
    Matrix m(u.field(), u.ambient(), u.dim() + v.dim());
    const std::uint32_t p = u.field().modulus();
    for (std::size_t i = 0; i < u.ambient(); ++i) {
        for (std::size_t j = 0; j < u.dim(); ++j) m.set(i, j, at(i, j));
        for (std::size_t j = 0; j < v.dim(); ++j)
            m.set(i, u.dim() + j, mod_sub(0, bt(i, j), p));
    }
    const Matrix k = kernel(m);
    Matrix xs(u.field(), k.rows(), u.dim());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) xs.set(i, j, k(i, j));
    return Subspace::span_rows(xs * u.basis());
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    return Subspace::span_rows(vstack(u.basis(), v.basis()));
}

Subspace apply(const Matrix& g, const Subspace& u) {
    if (g.field() != u.field() || g.rows() != g.cols() || g.rows() != u.ambient())
        throw std::invalid_argument("apply: expected an ambient square matrix");
    if (!is_invertible(g))
        throw singular_matrix_error("apply: singular matrix does not act");
    return Subspace::span_rows(u.basis() * g.transpose());
}

namespace {

Subspace project(const Subspace& u, std::size_t n, std::size_t offset) {
    if (u.ambient() != 2 * n)
        throw std::invalid_argument("project: ambient dimension is not 2n");
    Matrix half(u.field(), u.dim(), n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) half.set(i, j, u.basis()(i, offset + j));
    return Subspace::span_rows(half);
}

} // namespace

Subspace project_last(const Subspace& u, std::size_t n) { return project(u, n, n); }

Subspace project_first(const Subspace& u, std::size_t n) { return project(u, n, 0); }

Matrix extend_basis(const Matrix& partial_columns, const Subspace& target) {
    if (partial_columns.field() != target.field() ||
        partial_columns.rows() != target.ambient())
        throw std::invalid_argument("extend_basis: ambient mismatch");
    for (std::size_t j = 0; j < partial_columns.cols(); ++j)
        if (!target.contains(partial_columns.col(j)))
            throw std::invalid_argument("extend_basis: partial vector outside target");

    Matrix current = partial_columns.transpose();
    if (rank(current) != current.rows())
        throw std::invalid_argument("extend_basis: partial vectors dependent");

    std::vector<std::vector<std::int64_t>> added;
    for (std::size_t i = 0; i < target.dim(); ++i) {
        if (current.rows() == target.dim()) break;
        std::vector<std::int64_t> cand(target.ambient());
        for (std::size_t j = 0; j < target.ambient(); ++j)
            cand[j] = target.basis()(i, j);
        Matrix trial = vstack(current, Matrix::from_rows(target.field(), {cand}));
        if (rank(trial) == current.rows() + 1) {
            current = trial;
            added.push_back(std::move(cand));
        }
    }
    Matrix out(target.field(), added.size(), target.ambient());
    for (std::size_t i = 0; i < added.size(); ++i)
        for (std::size_t j = 0; j < target.ambient(); ++j) out.set(i, j, added[i][j]);
    return out.transpose();
}

} // namespace shalika
