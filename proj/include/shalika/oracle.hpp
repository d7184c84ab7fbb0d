#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "shalika/cosets.hpp"
#include "shalika/linalg.hpp"

namespace shalika::oracle {

/// |GL_m(F_p)| = prod_{i<m} (p^m - p^i).
std::uint64_t gl_order(std::uint32_t p, int m);
/// |S| = |GL_n| * p^(n^2).
std::uint64_t shalika_order(std::uint32_t p, int n);
/// |P_{r,m-r}| = |GL_r| * |GL_{m-r}| * p^(r(m-r)).
std::uint64_t parabolic_order(std::uint32_t p, int m, int r);

/// Two interchangeable generating sets; partitions must not depend on the
/// choice, which the tests exercise.
enum class GeneratorStyle { minimal, redundant };

/// Transvections I + E_ij plus one primitive scalar block; `redundant` adds
/// every scalar multiple and the adjacent swap matrices.
std::vector<Matrix> gl_generators(PrimeField field, int m,
                                  GeneratorStyle style = GeneratorStyle::minimal);
/// Generators of the Shalika subgroup: doubled GL_n generators and the
/// elementary upper-right unipotent blocks.
std::vector<Matrix> shalika_generators(PrimeField field, int n,
                                       GeneratorStyle style = GeneratorStyle::minimal);
/// Generators of P_{r,m-r}: Levi blocks and the unipotent radical.
std::vector<Matrix> parabolic_generators(PrimeField field, int m, int r,
                                         GeneratorStyle style = GeneratorStyle::minimal);

/// Visit every element of GL_m(F_p) exactly once (column-by-column
/// construction, deterministic order). Gated to the feasible sizes
/// (m, p) in {(2,2), (2,3), (2,5), (4,2), (4,3)}.
void for_each_gl(PrimeField field, int m,
                 const std::function<void(const Matrix&)>& fn);

/// Visit every dim-dimensional subspace of F_p^ambient exactly once, by
/// enumerating canonical RREF bases directly (pivot-column choice plus free
/// entries). Feeds the exhaustive Grassmannian sweeps.
void for_each_subspace(PrimeField field, int ambient, int dim,
                       const std::function<void(const Subspace&)>& fn);

/// The exact partition of GL_{2n}(F_p) into (S, P_{r,2n-r}) double cosets,
/// computed by worklist closure under left S-generators and right
/// P-generators — no use of representatives, classify, or the count formula.
/// Classes hold canonical matrix codes (Matrix::key over the 2n x 2n shape),
/// sorted; classes are ordered by smallest member. Same size gate as
/// for_each_gl.
struct CosetPartition {
    std::vector<std::vector<std::uint64_t>> classes;
    std::uint64_t group_order;
};
CosetPartition double_coset_partition(int n, std::uint32_t p, int r,
                                      GeneratorStyle style = GeneratorStyle::minimal);

/// Per-class certification record. k, l is the classify value at the seed.
struct ClassReport {
    std::uint64_t seed_code = 0;
    std::uint64_t size = 0;
    int k = -1, l = -1;
    std::vector<std::pair<int, int>> reps_found;
    bool classify_constant = true;
    std::uint64_t expected_size = 0; // |S| |P| / |S ∩ wPw^{-1}|, 0 if no unique rep
    bool size_ok = false;
    bool has_witness = false;       // element violating classify constancy
    std::uint64_t witness_code = 0;
};

/// Outcome of certifying one (n, p, r): the brute-force partition checked
/// against the closed count, the representatives, the classifier, and the
/// orbit-stabilizer size formula.
struct CertifyReport {
    int n = 0;
    std::uint32_t p = 0;
    int r = 0;
    std::uint64_t group_order = 0;
    std::uint64_t elements_seen = 0;
    std::int64_t expected_classes = 0;
    std::vector<ClassReport> classes;
    bool class_count_ok = false;
    bool unique_reps_ok = false;
    bool classify_ok = false; // constant per class, distinct across classes
    bool sizes_ok = false;
    bool partition_ok = false;
    std::string failure; // first failed assertion, empty when passed

    bool passed() const {
        return class_count_ok && unique_reps_ok && classify_ok && sizes_ok &&
               partition_ok;
    }
};

/// Stream the partition once and evaluate every assertion. The heavy
/// (2n, p) = (4, 3) case must be requested with expensive = true.
CertifyReport certify(int n, std::uint32_t p, int r, bool expensive = false);

} // namespace shalika::oracle
