#include "shalika/cosets.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shalika/errors.hpp"

namespace shalika {

namespace {

void require_nr(int n, int r) {
    if (n < 1 || r < 1 || r >= 2 * n)
        throw std::invalid_argument("need 1 <= r < 2n, got n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
}

void require_gl(const Matrix& g, int n) {
    if (g.rows() != g.cols() || g.rows() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("expected a 2n x 2n matrix with n=" +
                                    std::to_string(n));
    if (!is_invertible(g))
        throw singular_matrix_error("matrix is singular");
}

Subspace first_standard(PrimeField f, int total, int n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return Subspace::standard(f, total, idx);
}

Subspace span_of_first_columns(const Matrix& g, int r) {
    Matrix cols(g.field(), g.rows(), r);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (int j = 0; j < r; ++j) cols.set(i, j, g(i, j));
    return Subspace::span_columns(cols);
}

// Permutation matrix from a block layout: one identity block per row band,
// sitting in column band id_col[band]. Assembles the index map first, so
// zero-size bands vanish without any block arithmetic.
Matrix block_permutation(PrimeField f, const std::vector<int>& row_heights,
                         const std::vector<int>& col_widths,
                         const std::vector<int>& id_col) {
    const int total = std::accumulate(row_heights.begin(), row_heights.end(), 0);
    assert(total == std::accumulate(col_widths.begin(), col_widths.end(), 0));

    std::vector<int> row_start(row_heights.size() + 1, 0);
    for (std::size_t b = 0; b < row_heights.size(); ++b) {
        assert(row_heights[b] >= 0);
        row_start[b + 1] = row_start[b] + row_heights[b];
    }
    std::vector<int> col_start(col_widths.size() + 1, 0);
    for (std::size_t b = 0; b < col_widths.size(); ++b) {
        assert(col_widths[b] >= 0);
        col_start[b + 1] = col_start[b] + col_widths[b];
    }

    Matrix m(f, total, total);
    for (std::size_t b = 0; b < row_heights.size(); ++b) {
        assert(row_heights[b] == col_widths[id_col[b]]);
        for (int t = 0; t < row_heights[b]; ++t)
            m.set(row_start[b] + t, col_start[id_col[b]] + t, 1);
    }
    return m;
}

} // namespace

CosetLabel::CosetLabel(int k, int l, int n, int r) : k(k), l(l), n(n), r(r) {
    require_nr(n, r);
    const int a = alpha();
    const int c = std::min(r, n);
    if (k < a || k > c)
        throw std::invalid_argument("label k=" + std::to_string(k) +
                                    " outside [" + std::to_string(a) + ", " +
                                    std::to_string(c) + "]");
    if (l < a || l > std::min(k, r - k))
        throw std::invalid_argument("label l=" + std::to_string(l) +
                                    " outside [" + std::to_string(a) + ", " +
                                    std::to_string(std::min(k, r - k)) + "]");
}

std::vector<CosetLabel> kl_bounds(int n, int r) {
    require_nr(n, r);
    const int a = r > n ? r - n : 0;
    const int c = std::min(r, n);
    std::vector<CosetLabel> out;
    for (int k = a; k <= c; ++k)
        for (int l = a; l <= std::min(k, r - k); ++l) out.emplace_back(k, l, n, r);
    return out;
}

std::int64_t coset_count(int n, int r) {
    require_nr(n, r);
    const std::int64_t a = std::max(0, r - n);
    const std::int64_t b = r / 2;
    const std::int64_t c = std::min(r, n);
    return ((b - a + 1) * (b - a + 2) + (c - b) * (c - b + 1)) / 2;
}

Matrix representative(PrimeField field, const CosetLabel& L) {
    const int n = L.n, r = L.r, k = L.k, l = L.l;
    return block_permutation(field,
                             {k, n - k, l, k - l, r - k - l, n - r + l},
                             {k, l, r - k - l, n - k, k - l, n - r + l},
                             {0, 3, 1, 4, 2, 5});
}

Matrix sigma(PrimeField field, const CosetLabel& L) {
    const int n = L.n, r = L.r, k = L.k, l = L.l, a = L.alpha();
    return block_permutation(
        field,
        {k, n - k, a, l - a, k - l, r - k - l, l - a, n - r + a},
        {k, n - k, a, k - l, l - a, l - a, r - k - l, n - r + a},
        {0, 1, 2, 5, 3, 6, 4, 7});
}

CosetLabel classify_subspace(const Subspace& w, int n) {
    const int r = static_cast<int>(w.dim());
    require_nr(n, r);
    if (w.ambient() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("classify: ambient dimension is not 2n");
    const Subspace w0 = first_standard(w.field(), 2 * n, n);
    const Subspace inter = intersect(w, w0);
    const int k = static_cast<int>(inter.dim());
    // j0 sends the first-n block identically onto the last-n quotient model,
    // so the j0-image of W ∩ W0 is just its first-n data reread in F^n.
    const Subspace a = project_first(inter, n);
    const Subspace b = project_last(w, n);
    const int l = static_cast<int>(intersect(a, b).dim());
    return CosetLabel(k, l, n, r);
}

CosetLabel classify(const Matrix& g, int n, int r) {
    require_nr(n, r);
    require_gl(g, n);
    return classify_subspace(span_of_first_columns(g, r), n);
}

int classify_p(const Matrix& g, int n, int r) { return classify(g, n, r).k; }

Matrix adapted_basis(const Subspace& w, int n) {
    if (n < 1 || w.ambient() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("adapted_basis: ambient dimension is not 2n");
    const PrimeField f = w.field();
    const std::size_t m = 2 * static_cast<std::size_t>(n);
    const int r = static_cast<int>(w.dim());

    const Subspace w0 = first_standard(f, 2 * n, n);
    const Subspace inter = intersect(w, w0);
    const int k = static_cast<int>(inter.dim());
    const Subspace a = project_first(inter, n);
    const Subspace b = project_last(w, n);
    const Subspace c = intersect(a, b);
    const int l = static_cast<int>(c.dim());

    // Some vector of W whose last-n block equals q: solve x . R_last = q over
    // W's basis rows R, canonical particular solution.
    auto pull_back = [&](const std::vector<std::uint32_t>& q) {
        Matrix rlast_t(f, n, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) rlast_t.set(j, i, w.basis()(i, n + j));
        auto x = solve(rlast_t, q);
        if (!x)
            throw verification_error("adapted_basis: quotient vector not reachable");
        Matrix xs(f, r, 1);
        for (int i = 0; i < r; ++i) xs.set(i, 0, (*x)[i]);
        return w.basis().transpose() * xs;
    };
    auto embed_first = [&](const std::vector<std::uint32_t>& q) {
        Matrix v(f, m, 1);
        for (int j = 0; j < n; ++j) v.set(j, 0, q[j]);
        return v;
    };
    auto embed_last = [&](const Matrix& src) {
        Matrix v(f, m, 1);
        for (int j = 0; j < n; ++j) v.set(n + j, 0, src(j, 0));
        return v;
    };

    std::vector<Matrix> v(m, Matrix(f, m, 1));

    // Pairs over a basis of j0(W ∩ W0) ∩ proj(W): the quotient side comes
    // from W, the W0 side is its first-block twin.
    for (int i = 0; i < l; ++i) {
        const auto q = c.basis().row(i);
        v[n + i] = pull_back(q);
        v[i] = embed_first(q);
    }

    // Extend inside proj(W); pull the added quotient vectors back to W and
    // mirror them into W0.
    const Matrix added_b = extend_basis(c.basis().transpose(), b);
    for (int i = 0; i < r - k - l; ++i) {
        std::vector<std::uint32_t> q(n);
        for (int j = 0; j < n; ++j) q[j] = added_b(j, i);
        v[n + k + i] = pull_back(q);
        v[k + i] = embed_first(q);
    }

    // Complete v_1..v_l to a basis of W ∩ W0.
    {
        Matrix partial(f, m, l);
        for (int i = 0; i < l; ++i)
            for (std::size_t j = 0; j < m; ++j) partial.set(j, i, v[i](j, 0));
        const Matrix added = extend_basis(partial, inter);
        for (int i = 0; i < k - l; ++i) v[l + i] = added.col(i);
    }

    // Complete v_1..v_{r-l} to a basis of W0.
    {
        Matrix partial(f, m, r - l);
        for (int i = 0; i < r - l; ++i)
            for (std::size_t j = 0; j < m; ++j) partial.set(j, i, v[i](j, 0));
        const Matrix added = extend_basis(partial, w0);
        for (int i = 0; i < n - (r - l); ++i) v[r - l + i] = added.col(i);
    }

    // Remaining quotient-side vectors: the canonical lift with zero first
    // block keeps property (c) exact.
    for (int i = l; i < k; ++i) v[n + i] = embed_last(v[i]);
    for (int i = r - l; i < n; ++i) v[n + i] = embed_last(v[i]);

    Matrix s(f, m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) s.set(i, j, v[j](i, 0));
    return s;
}

Decomposition decompose(const Matrix& g, int n, int r) {
    require_nr(n, r);
    require_gl(g, n);
    const Subspace w = span_of_first_columns(g, r);
    const CosetLabel label = classify_subspace(w, n);
    const Matrix s = adapted_basis(w, n);
    const Matrix wrep = representative(g.field(), label);
    const Matrix p = inverse(wrep) * (inverse(s) * g);

    // Certificate: the factorization is only returned once re-verified.
    if (!is_in_shalika(s, n))
        throw verification_error("decompose: s escaped the Shalika subgroup");
    if (!is_in_parabolic(p, r))
        throw verification_error("decompose: p escaped the parabolic");
    if (!(s * wrep * p == g))
        throw verification_error("decompose: product does not reproduce g");
    return Decomposition{s, wrep, p, label};
}

XPoint base_point(PrimeField field, int n) {
    return XPoint{first_standard(field, 2 * n, n), Matrix::identity(field, n)};
}

void require_x_point(const XPoint& x, int n) {
    if (n < 1 || x.w.ambient() != static_cast<std::size_t>(2 * n) ||
        x.w.dim() != static_cast<std::size_t>(n))
        throw std::invalid_argument("not a point of X: W must be n-dimensional "
                                    "in F^{2n}");
    if (x.j.rows() != static_cast<std::size_t>(n) ||
        x.j.cols() != static_cast<std::size_t>(n) || x.j.field() != x.w.field())
        throw std::invalid_argument("not a point of X: j must be n x n over the "
                                    "same field");
    if (!is_invertible(x.j))
        throw std::invalid_argument("not a point of X: j must be invertible");
}

namespace {

// Columns 1..n: W's canonical basis. Columns n+1..2n: canonical lifts of the
// j-images. Properties (a)+(c) of the pair make this invertible.
Matrix point_basis(const XPoint& x, int n) {
    const PrimeField f = x.w.field();
    const std::size_t m = 2 * static_cast<std::size_t>(n);
    Matrix out(f, m, m);
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.set(j, i, x.w.basis()(i, j));
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> q(n);
        for (int t = 0; t < n; ++t) q[t] = x.j(t, i);
        const Matrix lifted = x.w.lift_quotient(q);
        for (std::size_t j = 0; j < m; ++j) out.set(j, n + i, lifted(j, 0));
    }
    return out;
}

} // namespace

XPoint act(const Matrix& g, const XPoint& x, int n) {
    require_x_point(x, n);
    require_gl(g, n);
    const Subspace wp = apply(g, x.w);
    const Matrix gi = inverse(g);
    Matrix jp(g.field(), n, n);
    for (int i = 0; i < n; ++i) {
        Matrix bp(g.field(), 2 * n, 1);
        for (int j = 0; j < 2 * n; ++j) bp.set(j, 0, wp.basis()(i, j));
        const Matrix u = gi * bp; // in W
        const auto coords = x.w.coordinates(u);
        Matrix cc(g.field(), n, 1);
        for (int t = 0; t < n; ++t) cc.set(t, 0, coords[t]);
        const Matrix jq = x.j * cc;
        std::vector<std::uint32_t> q(n);
        for (int t = 0; t < n; ++t) q[t] = jq(t, 0);
        const Matrix image = g * x.w.lift_quotient(q);
        const auto out = wp.quotient_coords(image);
        for (int t = 0; t < n; ++t) jp.set(t, i, out[t]);
    }
    return XPoint{wp, jp};
}

Matrix transport_x(const XPoint& from, const XPoint& to, int n) {
    require_x_point(from, n);
    require_x_point(to, n);
    if (from.w.field() != to.w.field())
        throw std::invalid_argument("transport_x: mixed fields");
    return point_basis(to, n) * inverse(point_basis(from, n));
}

bool is_in_j_k_alpha(const Matrix& g, int n, int r, int k) {
    require_nr(n, r);
    const int a = std::max(0, r - n);
    if (k < a || k > std::min(r, n))
        throw std::invalid_argument("is_in_j_k_alpha: invalid k=" + std::to_string(k));
    if (g.rows() != g.cols() || g.rows() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("is_in_j_k_alpha: expected a 2n x 2n matrix");
    if (!is_in_parabolic(g, n)) return false;
    // w is a permutation matrix, so its transpose is its inverse
    const Matrix w = representative(g.field(), CosetLabel(k, a, n, r));
    return is_in_parabolic(w.transpose() * g * w, r);
}

} // namespace shalika
