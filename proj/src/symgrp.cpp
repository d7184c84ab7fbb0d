#include "shalika/symgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace shalika {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int m, int a, int b) {
    auto t = identity(m);
    std::swap(t.img_[a - 1], t.img_[b - 1]);
    return t;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[rhs.img_[i] - 1];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(img));
}

Matrix Permutation::matrix(PrimeField field) const {
    Matrix m(field, img_.size(), img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) m.set(img_[j] - 1, j, 1);
    return m;
}

std::uint64_t Permutation::key() const {
    if (img_.size() > 16)
        throw std::invalid_argument("Permutation: key packing needs degree <= 16");
    std::uint64_t code = 0;
    for (std::size_t i = img_.size(); i-- > 0;)
        code = (code << 4) | static_cast<std::uint64_t>(img_[i] - 1);
    return code;
}

bool is_in_delta_sn(const Permutation& sigma, int n) {
    if (sigma.degree() != 2 * n)
        throw std::invalid_argument("is_in_delta_sn: expected degree 2n");
    for (int j = 1; j <= n; ++j) {
        if (sigma(j) > n) return false;
        if (sigma(n + j) != n + sigma(j)) return false;
    }
    return true;
}

SubsetLabel subset_label(const std::vector<int>& a, int n) {
    std::vector<bool> in(2 * n + 1, false);
    for (int x : a) {
        if (x < 1 || x > 2 * n)
            throw std::invalid_argument("subset_label: element " + std::to_string(x) +
                                        " outside {1..2n}");
        if (in[x])
            throw std::invalid_argument("subset_label: repeated element " +
                                        std::to_string(x));
        in[x] = true;
    }
    int k = 0, l = 0;
    for (int j = 1; j <= n; ++j) {
        if (!in[j]) continue;
        ++k;
        if (in[n + j]) ++l; // eta(j) = n + j lands back in A
    }
    return SubsetLabel{k, l};
}

Permutation w_prime(const CosetLabel& L) {
    const int n = L.n, r = L.r, k = L.k, l = L.l;
    std::vector<int> img(2 * n, 0);
    for (int j = 1; j <= k; ++j) img[j - 1] = j;
    for (int j = 1; j <= l; ++j) img[k + j - 1] = n + j;
    for (int j = 1; j <= r - (k + l); ++j) img[k + l + j - 1] = n + k + j;
    for (int j = 1; j <= n - k; ++j) img[r + j - 1] = k + j;
    for (int j = 1; j <= k - l; ++j) img[n + r - k + j - 1] = n + l + j;
    for (int j = n + r - l + 1; j <= 2 * n; ++j) img[j - 1] = j;
    return Permutation(std::move(img));
}

std::vector<int> model_subset(const CosetLabel& L) {
    std::vector<int> a;
    for (int j = 1; j <= L.k; ++j) a.push_back(j);
    for (int j = 1; j <= L.l; ++j) a.push_back(L.n + j);
    for (int j = 1; j <= L.r - L.k - L.l; ++j) a.push_back(L.n + L.k + j);
    return a;
}

std::vector<std::pair<CosetLabel, Permutation>> delta_orbit_transversal(int n, int r) {
    std::vector<std::pair<CosetLabel, Permutation>> out;
    for (const auto& label : kl_bounds(n, r)) out.emplace_back(label, w_prime(label));
    return out;
}

std::vector<std::vector<Permutation>> brute_force_sym_cosets(int n, int r) {
    if (n < 1 || r < 1 || r >= 2 * n)
        throw std::invalid_argument("brute_force_sym_cosets: need 1 <= r < 2n");
    if (n > 4)
        throw std::invalid_argument("brute_force_sym_cosets: gated to n <= 4");
    const int m = 2 * n;

    // Left generators: Delta S_n via doubled adjacent transpositions.
    std::vector<Permutation> left;
    for (int i = 1; i < n; ++i) {
        auto t = Permutation::transposition(m, i, i + 1)
                     .compose(Permutation::transposition(m, n + i, n + i + 1));
        left.push_back(t);
    }
    // Right generators: adjacent transpositions inside {1..r} and {r+1..2n}.
    std::vector<Permutation> right;
    for (int i = 1; i < r; ++i) right.push_back(Permutation::transposition(m, i, i + 1));
    for (int i = r + 1; i < m; ++i)
        right.push_back(Permutation::transposition(m, i, i + 1));

    std::unordered_set<std::uint64_t> visited;
    std::vector<std::vector<Permutation>> classes;

    std::vector<int> seed_img(m);
    std::iota(seed_img.begin(), seed_img.end(), 1);
    do {
        Permutation seed{std::vector<int>(seed_img)};
        if (visited.count(seed.key())) continue;
        std::vector<Permutation> members;
        std::deque<Permutation> queue{seed};
        visited.insert(seed.key());
        while (!queue.empty()) {
            Permutation cur = queue.front();
            queue.pop_front();
            members.push_back(cur);
            auto push = [&](Permutation next) {
                if (visited.insert(next.key()).second) queue.push_back(std::move(next));
            };
            for (const auto& h : left) push(h.compose(cur));
            for (const auto& k : right) push(cur.compose(k));
        }
        std::sort(members.begin(), members.end(),
                  [](const Permutation& a, const Permutation& b) {
                      return a.key() < b.key();
                  });
        classes.push_back(std::move(members));
    } while (std::next_permutation(seed_img.begin(), seed_img.end()));

    return classes;
}

} // namespace shalika
