#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "shalika/symgrp.hpp"

using namespace shalika;

namespace {

// All of Delta S_n by doubling each tau in S_n.
std::vector<Permutation> delta_sn_elements(int n) {
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = i + 1;
    std::vector<Permutation> out;
    do {
        std::vector<int> img(2 * n);
        for (int j = 0; j < n; ++j) {
            img[j] = tau[j];
            img[n + j] = n + tau[j];
        }
        out.emplace_back(std::move(img));
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

std::vector<int> apply_to_subset(const Permutation& s, const std::vector<int>& a) {
    std::vector<int> out;
    out.reserve(a.size());
    for (int x : a) out.push_back(s(x));
    std::sort(out.begin(), out.end());
    return out;
}

// All r-subsets of {1..2n}.
std::vector<std::vector<int>> all_subsets(int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i + 1;
    for (;;) {
        out.push_back(pick);
        int i = r - 1;
        while (i >= 0 && pick[i] == m - r + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("permutation basics") {
    const Permutation id = Permutation::identity(4);
    CHECK(id(3) == 3);
    const Permutation t = Permutation::transposition(4, 1, 3);
    CHECK(t(1) == 3);
    CHECK(t(3) == 1);
    CHECK(t.compose(t) == id);
    CHECK(t.inverse() == t);

    const Permutation a({2, 3, 1});
    const Permutation b({2, 1, 3});
    CHECK(a.compose(b) == Permutation({3, 2, 1}));
    CHECK(a.compose(a.inverse()) == Permutation::identity(3));

    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("permutation matrices multiply like permutations compose") {
    PrimeField f5(5);
    const Permutation a({2, 3, 1, 4});
    const Permutation b({1, 4, 2, 3});
    CHECK(a.matrix(f5) * b.matrix(f5) == a.compose(b).matrix(f5));
    CHECK(a.matrix(f5) * a.inverse().matrix(f5) == Matrix::identity(f5, 4));
}

TEST_CASE("delta_sn membership") {
    const int n = 2;
    CHECK(is_in_delta_sn(Permutation::identity(4), n));
    // (1 2)(3 4): the doubled transposition
    const Permutation doubled =
        Permutation::transposition(4, 1, 2).compose(Permutation::transposition(4, 3, 4));
    CHECK(is_in_delta_sn(doubled, n));
    // (1 3) crosses the two blocks
    CHECK(!is_in_delta_sn(Permutation::transposition(4, 1, 3), n));
    CHECK_THROWS_AS(is_in_delta_sn(Permutation::identity(3), 2),
                    std::invalid_argument);

    for (int nn = 1; nn <= 3; ++nn)
        for (const auto& s : delta_sn_elements(nn)) CHECK(is_in_delta_sn(s, nn));
}

TEST_CASE("subset labels") {
    const int n = 3;
    CHECK(subset_label({1, 2}, n) == SubsetLabel{2, 0});
    CHECK(subset_label({4, 5}, n) == SubsetLabel{0, 0});
    // A_{k,l} for n=3, r=3, k=2, l=1: {1,2} ∪ {4} ∪ {6}
    CHECK(subset_label({1, 2, 4, 6}, 3) == SubsetLabel{2, 1});
    CHECK(subset_label(model_subset(CosetLabel(2, 1, 3, 4)), 3) == SubsetLabel{2, 1});

    CHECK_THROWS_AS(subset_label({0}, n), std::invalid_argument);
    CHECK_THROWS_AS(subset_label({7}, n), std::invalid_argument);
    CHECK_THROWS_AS(subset_label({1, 1}, n), std::invalid_argument);
}

TEST_CASE("model subsets carry their label") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r < 2 * n; ++r)
            for (const auto& label : kl_bounds(n, r)) {
                const auto a = model_subset(label);
                CHECK(static_cast<int>(a.size()) == r);
                CHECK(subset_label(a, n) == SubsetLabel{label.k, label.l});
            }
}

TEST_CASE("w_prime examples") {
    CHECK(w_prime(CosetLabel(1, 0, 1, 1)) == Permutation::identity(2));
    // w'_{k,l} carries {1..r} onto the model subset A_{k,l}
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r < 2 * n; ++r)
            for (const auto& label : kl_bounds(n, r)) {
                const Permutation w = w_prime(label);
                std::vector<int> jr(r);
                for (int i = 0; i < r; ++i) jr[i] = i + 1;
                CHECK(apply_to_subset(w, jr) == model_subset(label));
            }
}

TEST_CASE("w_prime matrices coincide with the block representatives") {
    for (std::uint32_t p : {2u, 7u}) {
        PrimeField f(p);
        for (int n = 1; n <= 4; ++n)
            for (int r = 1; r < 2 * n; ++r)
                for (const auto& label : kl_bounds(n, r))
                    CHECK(w_prime(label).matrix(f) == representative(f, label));
    }
}

TEST_CASE("subset labels are Delta S_n invariants (exhaustive n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        const auto delta = delta_sn_elements(n);
        for (int r = 1; r < 2 * n; ++r)
            for (const auto& a : all_subsets(2 * n, r))
                for (const auto& s : delta)
                    CHECK(subset_label(apply_to_subset(s, a), n) ==
                          subset_label(a, n));
    }
}

TEST_CASE("equal labels exactly match Delta S_n orbits (exhaustive n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const auto delta = delta_sn_elements(n);
        for (int r = 1; r < 2 * n; ++r) {
            const auto subsets = all_subsets(2 * n, r);
            // orbit id: the lexicographically least member of the orbit
            auto orbit_id = [&](const std::vector<int>& a) {
                std::vector<int> best = a;
                for (const auto& s : delta) best = std::min(best, apply_to_subset(s, a));
                return best;
            };
            for (const auto& a : subsets)
                for (const auto& b : subsets) {
                    const bool same_label = subset_label(a, n) == subset_label(b, n);
                    const bool same_orbit = orbit_id(a) == orbit_id(b);
                    CHECK(same_label == same_orbit);
                }
        }
    }
}

TEST_CASE("transversal sizes and distinctness") {
    CHECK(delta_orbit_transversal(2, 2).size() == 4);
    CHECK(delta_orbit_transversal(1, 1).size() == 2);
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r < 2 * n; ++r) {
            const auto t = delta_orbit_transversal(n, r);
            CHECK(static_cast<std::int64_t>(t.size()) == coset_count(n, r));
            std::set<std::uint64_t> keys;
            for (const auto& [label, w] : t) keys.insert(w.key());
            CHECK(keys.size() == t.size());
        }
}

TEST_CASE("brute force double cosets in S_2n") {
    // n = 1, r = 1: both subgroups trivial, so both cosets are singletons
    const auto tiny = brute_force_sym_cosets(1, 1);
    CHECK(tiny.size() == 2);
    CHECK(tiny[0].size() == 1);
    CHECK(tiny[1].size() == 1);

    CHECK_THROWS_AS(brute_force_sym_cosets(5, 2), std::invalid_argument);

    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r < 2 * n; ++r) {
            const auto classes = brute_force_sym_cosets(n, r);
            CHECK(static_cast<std::int64_t>(classes.size()) == coset_count(n, r));

            // partition of the whole group
            std::size_t total = 0;
            std::set<std::uint64_t> seen;
            for (const auto& cls : classes) {
                total += cls.size();
                for (const auto& s : cls) seen.insert(s.key());
            }
            std::size_t factorial = 1;
            for (int i = 2; i <= 2 * n; ++i) factorial *= i;
            CHECK(total == factorial);
            CHECK(seen.size() == factorial);

            // exactly one transversal member per class
            const auto t = delta_orbit_transversal(n, r);
            for (const auto& cls : classes) {
                int hits = 0;
                for (const auto& member : cls)
                    for (const auto& [label, w] : t)
                        if (member == w) ++hits;
                CHECK(hits == 1);
            }
        }
}
