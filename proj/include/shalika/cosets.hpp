#pragma once

#include <cstdint>
#include <vector>

#include "shalika/linalg.hpp"
#include "shalika/subspace.hpp"

namespace shalika {

/// Name of one (S, P_{r,2n-r}) double coset of GL_{2n}: the invariant pair
///   k = dim(W ∩ W0),   l = dim(j0(W ∩ W0) ∩ proj(W)),
/// where W is the image of <e_1..e_r> and W0 = <e_1..e_n>. Valid labels obey
///   max{0,r-n} <= k <= min{r,n}   and   max{0,r-n} <= l <= min{k,r-k}.
struct CosetLabel {
    int k, l, n, r;

    CosetLabel(int k, int l, int n, int r); // validates both bound chains

    /// alpha = max{0, r-n}, the common lower bound of k and l.
    int alpha() const noexcept { return r > n ? r - n : 0; }

    bool operator==(const CosetLabel&) const = default;
    /// Lexicographic in (k, l); n and r are context, not compared.
    bool operator<(const CosetLabel& rhs) const {
        return k != rhs.k ? k < rhs.k : l < rhs.l;
    }
};

/// All valid labels for (n, r), in lexicographic (k, l) order.
std::vector<CosetLabel> kl_bounds(int n, int r);

/// The closed-form number of (S, P_{r,2n-r}) double cosets:
/// ((b-a+1)(b-a+2) + (c-b)(c-b+1)) / 2 with a = max{0,r-n}, b = floor(r/2),
/// c = min{r,n}. Always equals kl_bounds(n, r).size().
std::int64_t coset_count(int n, int r);

/// The representative w_{k,l}: a 2n x 2n permutation matrix assembled from
/// its block layout (row heights k, n-k, l, k-l, r-k-l, n-r+l; column widths
/// k, l, r-k-l, n-k, k-l, n-r+l; one identity block per row band). Zero-size
/// blocks vanish.
Matrix representative(PrimeField field, const CosetLabel& label);

/// Label of the double coset S g P_{r,2n-r} containing g, read off the
/// orbit invariants of the subspace spanned by g's first r columns.
/// Throws singular_matrix_error when g is not invertible.
CosetLabel classify(const Matrix& g, int n, int r);

/// The coarser P \ GL_{2n} / P_{r,2n-r} invariant: k alone.
int classify_p(const Matrix& g, int n, int r);

/// classify for a bare Grassmannian point W (dim W = r).
CosetLabel classify_subspace(const Subspace& w, int n);

/// Basis v_1..v_{2n} of F_p^{2n} adapted to W (dim r), returned as the
/// columns of a 2n x 2n matrix, satisfying
///  (a) v_1..v_n is a basis of W0 and the last-n projections of
///      v_{n+1}..v_{2n} form a basis of F_p^n,
///  (b) {v_1..v_k} ∪ {v_{n+1}..v_{n+l}} ∪ {v_{n+k+1}..v_{n+k+(r-k-l)}}
///      is a basis of W, and
///  (c) the first-n part of v_i equals the last-n part of v_{n+i}.
/// The construction is deterministic; by (a)+(c) the returned matrix lies in
/// the Shalika subgroup and maps the model subspace W_{k,l} onto W.
Matrix adapted_basis(const Subspace& w, int n);

/// g factored through its double coset: g = s * w * p with s Shalika,
/// w = representative(label), p in P_{r,2n-r}.
struct Decomposition {
    Matrix s;
    Matrix w;
    Matrix p;
    CosetLabel label;
};

/// Factor g exactly; all Decomposition invariants are re-verified before
/// returning (verification_error on failure would indicate a bug).
Decomposition decompose(const Matrix& g, int n, int r);

/// A point of X: an n-dimensional W in F_p^{2n} together with an isomorphism
/// j : W -> V/W, encoded as an invertible n x n matrix from W's canonical
/// basis coordinates to the quotient's non-pivot coordinates (see Subspace).
/// The base point (W0, j0) carries j-matrix I_n, and its stabilizer under the
/// action g.(W,j) = (g(W), gbar ∘ j ∘ g^{-1}) is exactly the Shalika subgroup.
struct XPoint {
    Subspace w;
    Matrix j;

    bool operator==(const XPoint&) const = default;
};

/// (W0, j0) with W0 = <e_1..e_n>.
XPoint base_point(PrimeField field, int n);

/// Throws std::invalid_argument unless (w, j) is a point of X.
void require_x_point(const XPoint& x, int n);

/// The GL(V) action on X.
XPoint act(const Matrix& g, const XPoint& x, int n);

/// Some g in GL_{2n} with act(g, from) == to; X is a single orbit, so this
/// always exists. Built from paired adapted bases of the two points.
Matrix transport_x(const XPoint& from, const XPoint& to, int n);

/// The correction factor sigma_{k,l}: a permutation matrix, block-diagonal
/// with two n x n blocks, satisfying sigma(k,l) * w_{k,alpha} = w_{k,l}.
Matrix sigma(PrimeField field, const CosetLabel& label);

/// Membership in J_{k,alpha} = w_{k,alpha} P_{r,2n-r} w_{k,alpha}^{-1} ∩ P:
/// g lies in P = P_{n,n} and w_{k,alpha}^{-1} g w_{k,alpha} in P_{r,2n-r}.
bool is_in_j_k_alpha(const Matrix& g, int n, int r, int k);

} // namespace shalika
