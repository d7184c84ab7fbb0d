#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shalika/linalg.hpp"

namespace shalika {

/// A subspace of F_p^m in its unique canonical form: the basis matrix is the
/// RREF of any generating set, with zero rows dropped. Two subspaces are equal
/// iff their canonical bases are entry-wise equal.
///
/// The quotient F_p^m / W also gets a canonical model here: every coset has a
/// unique representative vanishing at W's pivot coordinates, so the non-pivot
/// coordinates (in increasing column order) identify the quotient with
/// F_p^(m - dim W). For W = <e_1..e_n> inside F_p^{2n} this is exactly the
/// last-n coordinate model.
class Subspace {
public:
    static Subspace zero(PrimeField field, std::size_t ambient);
    static Subspace full(PrimeField field, std::size_t ambient);
    /// Span of the rows of gens.
    static Subspace span_rows(const Matrix& gens);
    /// Span of the columns of gens (column vectors per the group convention).
    static Subspace span_columns(const Matrix& gens);
    /// Span of the standard vectors e_i for i in indices (0-based).
    static Subspace standard(PrimeField field, std::size_t ambient,
                             const std::vector<std::size_t>& indices);

    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    PrimeField field() const noexcept { return basis_.field(); }
    /// dim() x ambient() matrix in RREF, no zero rows.
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Matrix& column_vector) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;

    /// Coordinates x with x . basis = v, for v in the subspace (RREF makes
    /// these just v's pivot entries). Throws if v lies outside.
    std::vector<std::uint32_t> coordinates(const Matrix& column_vector) const;

    /// Quotient coordinates of v + W in the non-pivot model described above.
    std::vector<std::uint32_t> quotient_coords(const Matrix& column_vector) const;
    /// The canonical representative of the coset with those quotient
    /// coordinates: entries at non-pivot columns, zero at pivots.
    Matrix lift_quotient(const std::vector<std::uint32_t>& coords) const;

private:
    explicit Subspace(RrefResult canonical);
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// Image g(U) for invertible g; throws singular_matrix_error otherwise.
Subspace apply(const Matrix& g, const Subspace& u);

/// Projection onto the last n coordinates; ambient must be 2n. Realizes
/// (U + W0)/W0 for W0 the span of the first n standard vectors.
Subspace project_last(const Subspace& u, std::size_t n);
/// Projection onto the first n coordinates; ambient must be 2n. Faithful on
/// subspaces of W0, where it reads a subspace of F_p^{2n} as one of F_p^n.
Subspace project_first(const Subspace& u, std::size_t n);

/// Deterministic basis extension: scan the target's canonical basis rows in
/// order, appending each vector that increases the rank, until partial plus
/// the result is a basis of target. partial's columns must be independent and
/// lie in target. Returns the appended vectors as columns.
Matrix extend_basis(const Matrix& partial_columns, const Subspace& target);

} // namespace shalika
