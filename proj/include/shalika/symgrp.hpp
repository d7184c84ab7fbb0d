#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shalika/cosets.hpp"
#include "shalika/linalg.hpp"

namespace shalika {

/// A permutation of {1..m}, stored as its image list: images()[i] = sigma(i+1).
class Permutation {
public:
    explicit Permutation(std::vector<int> images); // validates bijectivity
    static Permutation identity(int m);
    /// The transposition (a b), 1-based.
    static Permutation transposition(int m, int a, int b);

    int degree() const noexcept { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[j - 1]; } // 1-based
    const std::vector<int>& images() const noexcept { return img_; }

    /// (this ∘ rhs)(x) = this(rhs(x)).
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    /// The permutation matrix sending e_j to e_{sigma(j)}.
    Matrix matrix(PrimeField field) const;

    /// Packed image list, 4 bits per point; requires degree <= 16.
    std::uint64_t key() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// sigma(j) <= n and sigma(n+j) = n + sigma(j) for all 1 <= j <= n: the
/// block-diagonal doubled copy of S_n inside S_{2n}.
bool is_in_delta_sn(const Permutation& sigma, int n);

/// The Delta S_n orbit invariants of an r-subset A of {1..2n}:
/// k = |A ∩ {1..n}|, l = |eta(A ∩ {1..n}) ∩ A| with eta(j) = n + j.
struct SubsetLabel {
    int k, l;
    bool operator==(const SubsetLabel&) const = default;
};

/// Label of a subset given by its 1-based elements; validates range and
/// distinctness.
SubsetLabel subset_label(const std::vector<int>& a, int n);

/// The representative permutation w'_{k,l} of the (Delta S_n, S_r x S_{2n-r})
/// double coset labeled (k,l): fixes 1..k and n+r-l+1..2n, sends k+j to n+j
/// for j <= l, k+l+j to n+k+j for j <= r-k-l, r+j to k+j for j <= n-k, and
/// n+r-k+j to n+l+j for j <= k-l. Its matrix equals representative(label).
Permutation w_prime(const CosetLabel& label);

/// The model subset A_{k,l} = {1..k} ∪ {n+1..n+l} ∪ {n+k+1..n+k+(r-k-l)},
/// the image of {1..r} under w_prime(label). Sorted, 1-based.
std::vector<int> model_subset(const CosetLabel& label);

/// The full transversal: (label, w_prime(label)) over kl_bounds(n, r).
std::vector<std::pair<CosetLabel, Permutation>> delta_orbit_transversal(int n, int r);

/// Exhaustive partition of S_{2n} into (Delta S_n, S_r x S_{2n-r}) double
/// cosets by generator closure. Independent of the w'_{k,l} machinery; this
/// is the ground truth the transversal is checked against. Gated to n <= 4
/// (|S_8| = 40320). Classes and their members come out sorted by packed key.
std::vector<std::vector<Permutation>> brute_force_sym_cosets(int n, int r);

} // namespace shalika
