#pragma once

// Seeded generators and predicate checkers shared by the test binaries.
// Everything here is deliberately independent of the construction paths it
// checks: the adapted-basis predicate uses only subspace operations, and the
// random subgroup elements are built directly from their block definitions.

#include <random>
#include <vector>

#include "shalika/cosets.hpp"
#include "shalika/linalg.hpp"
#include "shalika/subspace.hpp"

namespace shalika::testing {

using Rng = std::mt19937_64;

inline Matrix random_matrix(PrimeField f, std::size_t rows, std::size_t cols,
                            Rng& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d(rng));
    return m;
}

inline Matrix random_invertible(PrimeField f, std::size_t m, Rng& rng) {
    for (;;) {
        Matrix g = random_matrix(f, m, m, rng);
        if (is_invertible(g)) return g;
    }
}

// Random element of the Shalika subgroup, straight from its block shape.
inline Matrix random_shalika(PrimeField f, int n, Rng& rng) {
    const Matrix h = random_invertible(f, n, rng);
    const Matrix x = random_matrix(f, n, n, rng);
    Matrix s(f, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s.set(i, j, h(i, j));
            s.set(i, n + j, x(i, j));
            s.set(n + i, n + j, h(i, j));
        }
    return s;
}

// Random element of P_{r,m-r}.
inline Matrix random_parabolic(PrimeField f, int m, int r, Rng& rng) {
    const Matrix g1 = random_invertible(f, r, rng);
    const Matrix g2 = random_invertible(f, m - r, rng);
    const Matrix x = random_matrix(f, r, m - r, rng);
    Matrix g(f, m, m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g.set(i, j, g1(i, j));
    for (int i = 0; i < m - r; ++i)
        for (int j = 0; j < m - r; ++j) g.set(r + i, r + j, g2(i, j));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m - r; ++j) g.set(i, r + j, x(i, j));
    return g;
}

inline Subspace random_subspace(PrimeField f, std::size_t ambient,
                                std::size_t generators, Rng& rng) {
    return Subspace::span_rows(random_matrix(f, generators, ambient, rng));
}

// Properties (a), (b), (c) of a basis adapted to W, checked from scratch.
inline bool adapted_basis_ok(const Matrix& v, const Subspace& w, int n) {
    const PrimeField f = v.field();
    const std::size_t m = 2 * static_cast<std::size_t>(n);
    if (v.rows() != m || v.cols() != m || !is_invertible(v)) return false;

    const CosetLabel label = classify_subspace(w, n);
    const int k = label.k, l = label.l, r = label.r;

    // (a) first n columns span W0; lower-right n x n block invertible.
    Matrix first(f, m, n), lower(f, n, n);
    for (int j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) first.set(i, j, v(i, j));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) lower.set(i, j, v(n + i, n + j));
    std::vector<std::size_t> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (Subspace::span_columns(first) != Subspace::standard(f, m, idx)) return false;
    if (!is_invertible(lower)) return false;

    // (b) the designated r columns span W.
    Matrix span_w(f, m, r);
    int t = 0;
    auto copy_col = [&](int j) {
        for (std::size_t i = 0; i < m; ++i) span_w.set(i, t, v(i, j));
        ++t;
    };
    for (int j = 0; j < k; ++j) copy_col(j);
    for (int j = 0; j < l; ++j) copy_col(n + j);
    for (int j = 0; j < r - k - l; ++j) copy_col(n + k + j);
    if (Subspace::span_columns(span_w) != w) return false;

    // (c) first-n block of v_i equals last-n block of v_{n+i}.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (v(j, i) != v(n + j, n + i)) return false;
    return true;
}

} // namespace shalika::testing
