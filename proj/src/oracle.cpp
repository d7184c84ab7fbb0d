#include "shalika/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "shalika/errors.hpp"
#include "shalika/gf.hpp"

namespace shalika::oracle {

using detail::mod_inv;
using detail::mod_mul;
using detail::mod_sub;

namespace {

constexpr std::pair<int, std::uint32_t> kAllowed[] = {
    {2, 2}, {2, 3}, {2, 5}, {4, 2}, {4, 3}};

bool size_allowed(int m, std::uint32_t p) {
    for (auto [am, ap] : kAllowed)
        if (am == m && ap == p) return true;
    return false;
}

void require_size(int m, std::uint32_t p, const char* who) {
    if (!size_allowed(m, p))
        throw std::invalid_argument(std::string(who) + ": size limit exceeded for GL_" +
                                    std::to_string(m) + "(F_" + std::to_string(p) + ")");
}

std::uint64_t upow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::uint32_t primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t q = p - 1;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            prime_factors.push_back(d);
            while (q % d == 0) q /= d;
        }
    if (q > 1) prime_factors.push_back(q);
    auto pow_mod = [p](std::uint64_t b, std::uint32_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    for (std::uint32_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto f : prime_factors)
            if (pow_mod(g, (p - 1) / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
    throw std::logic_error("primitive_root: none found"); // unreachable for prime p
}

// Fixed-capacity buffer for the hot closure loop; the size gate keeps
// matrices at 4 x 4 or smaller.
using Buf = std::array<std::uint32_t, 16>;

struct Ctx {
    int m;
    std::uint32_t p;
    std::uint64_t space; // p^(m*m) distinct codes
};

Ctx make_ctx(int m, std::uint32_t p) { return Ctx{m, p, upow(p, m * m)}; }

void decode(const Ctx& c, std::uint64_t code, Buf& out) {
    for (int i = 0; i < c.m * c.m; ++i) {
        out[i] = static_cast<std::uint32_t>(code % c.p);
        code /= c.p;
    }
}

std::uint64_t encode(const Ctx& c, const Buf& a) {
    std::uint64_t code = 0;
    for (int i = c.m * c.m; i-- > 0;) code = code * c.p + a[i];
    return code;
}

void mul(const Ctx& c, const Buf& a, const Buf& b, Buf& out) {
    const int m = c.m;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::uint64_t acc = 0;
            for (int t = 0; t < m; ++t)
                acc += static_cast<std::uint64_t>(a[i * m + t]) * b[t * m + j];
            out[i * m + j] = static_cast<std::uint32_t>(acc % c.p);
        }
}

bool invertible(const Ctx& c, Buf a) {
    const int m = c.m;
    const std::uint32_t p = c.p;
    for (int col = 0; col < m; ++col) {
        int pr = col;
        while (pr < m && a[pr * m + col] == 0) ++pr;
        if (pr == m) return false;
        if (pr != col)
            for (int j = 0; j < m; ++j) std::swap(a[pr * m + j], a[col * m + j]);
        const std::uint32_t s = mod_inv(a[col * m + col], p);
        for (int i = col + 1; i < m; ++i) {
            const std::uint32_t f = mod_mul(a[i * m + col], s, p);
            if (f == 0) continue;
            for (int j = col; j < m; ++j)
                a[i * m + j] = mod_sub(a[i * m + j], mod_mul(f, a[col * m + j], p), p);
        }
    }
    return true;
}

Buf to_buf(const Matrix& g) {
    Buf b{};
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) b[i * g.cols() + j] = g(i, j);
    return b;
}

std::vector<Buf> to_bufs(const std::vector<Matrix>& gens) {
    std::vector<Buf> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(to_buf(g));
    return out;
}

void for_each_gl_unchecked(PrimeField f, int m,
                           const std::function<void(const Matrix&)>& fn) {
    const std::uint32_t p = f.modulus();
    const std::uint64_t vec_space = upow(p, m);

    std::vector<std::vector<std::uint32_t>> cols(m, std::vector<std::uint32_t>(m));
    // Row-echelon accumulation of the chosen columns: normalized rows plus
    // their pivot positions, so the independence test is one reduction.
    std::vector<std::vector<std::uint32_t>> echelon;
    std::vector<int> pivots;

    auto reduce = [&](std::vector<std::uint32_t> v) {
        for (std::size_t t = 0; t < echelon.size(); ++t) {
            const std::uint32_t c = v[pivots[t]];
            if (c == 0) continue;
            for (int j = 0; j < m; ++j)
                v[j] = mod_sub(v[j], mod_mul(c, echelon[t][j], p), p);
        }
        return v;
    };

    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            Matrix g(f, m, m);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < m; ++i) g.set(i, j, cols[j][i]);
            fn(g);
            return;
        }
        std::vector<std::uint32_t> v(m);
        for (std::uint64_t code = 1; code < vec_space; ++code) {
            std::uint64_t c = code;
            for (int i = 0; i < m; ++i) {
                v[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            auto w = reduce(v);
            int piv = 0;
            while (piv < m && w[piv] == 0) ++piv;
            if (piv == m) continue; // dependent on earlier columns
            const std::uint32_t s = mod_inv(w[piv], p);
            for (int j = 0; j < m; ++j) w[j] = mod_mul(w[j], s, p);
            echelon.push_back(std::move(w));
            pivots.push_back(piv);
            cols[depth] = v;
            rec(depth + 1);
            echelon.pop_back();
            pivots.pop_back();
        }
    };
    rec(0);
}

// Worklist closure over one double coset at a time. Seeds are scanned in
// increasing code order; since every member of a pending class is itself a
// candidate seed, each class is discovered at its minimal code. Callbacks:
// on_class(seed), on_element(code) for every member, on_done() per class.
template <class OnClass, class OnElement, class OnDone>
void sweep_double_cosets(PrimeField f, int n, int r, GeneratorStyle style,
                         OnClass&& on_class, OnElement&& on_element,
                         OnDone&& on_done) {
    const int m = 2 * n;
    const Ctx ctx = make_ctx(m, f.modulus());
    const auto lgens = to_bufs(shalika_generators(f, n, style));
    const auto rgens = to_bufs(parabolic_generators(f, m, r, style));

    std::vector<std::uint64_t> visited((ctx.space + 63) / 64, 0);
    auto test = [&](std::uint64_t c) {
        return (visited[c >> 6] >> (c & 63)) & 1;
    };
    auto mark = [&](std::uint64_t c) { visited[c >> 6] |= std::uint64_t{1} << (c & 63); };

    std::vector<std::uint64_t> frontier, next;
    Buf cur, prod;
    for (std::uint64_t seed = 0; seed < ctx.space; ++seed) {
        if (test(seed)) continue;
        decode(ctx, seed, cur);
        if (!invertible(ctx, cur)) continue;
        on_class(seed);
        mark(seed);
        frontier.assign(1, seed);
        while (!frontier.empty()) {
            next.clear();
            for (std::uint64_t code : frontier) {
                decode(ctx, code, cur);
                on_element(code);
                for (const Buf& g : lgens) {
                    mul(ctx, g, cur, prod);
                    const std::uint64_t c = encode(ctx, prod);
                    if (!test(c)) {
                        mark(c);
                        next.push_back(c);
                    }
                }
                for (const Buf& g : rgens) {
                    mul(ctx, cur, g, prod);
                    const std::uint64_t c = encode(ctx, prod);
                    if (!test(c)) {
                        mark(c);
                        next.push_back(c);
                    }
                }
            }
            std::swap(frontier, next);
        }
        on_done();
    }
}

// |S ∩ w P_{r,2n-r} w^{-1}| by direct membership filtering over S.
std::uint64_t stabilizer_order(PrimeField f, int n, int r, const Matrix& w) {
    const Matrix wi = inverse(w);
    const std::uint64_t xspace = upow(f.modulus(), n * n);
    std::uint64_t count = 0;
    for_each_gl_unchecked(f, n, [&](const Matrix& h) {
        for (std::uint64_t xc = 0; xc < xspace; ++xc) {
            const Matrix x = Matrix::from_key(f, n, n, xc);
            Matrix s(f, 2 * n, 2 * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    s.set(i, j, h(i, j));
                    s.set(i, n + j, x(i, j));
                    s.set(n + i, n + j, h(i, j));
                }
            if (is_in_parabolic(wi * s * w, r)) ++count;
        }
    });
    return count;
}

} // namespace

std::uint64_t gl_order(std::uint32_t p, int m) {
    std::uint64_t order = 1;
    const std::uint64_t pm = upow(p, m);
    for (int i = 0; i < m; ++i) order *= pm - upow(p, i);
    return order;
}

std::uint64_t shalika_order(std::uint32_t p, int n) {
    return gl_order(p, n) * upow(p, n * n);
}

std::uint64_t parabolic_order(std::uint32_t p, int m, int r) {
    return gl_order(p, r) * gl_order(p, m - r) * upow(p, r * (m - r));
}

std::vector<Matrix> gl_generators(PrimeField f, int m, GeneratorStyle style) {
    const std::uint32_t p = f.modulus();
    std::vector<Matrix> gens;
    const std::uint32_t cmax = style == GeneratorStyle::minimal ? 1 : p - 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            for (std::uint32_t c = 1; c <= cmax; ++c) {
                Matrix t = Matrix::identity(f, m);
                t.set(i, j, c);
                gens.push_back(t);
            }
        }
    if (style == GeneratorStyle::minimal) {
        const std::uint32_t g0 = primitive_root(p);
        if (g0 != 1) {
            Matrix d = Matrix::identity(f, m);
            d.set(0, 0, g0);
            gens.push_back(d);
        }
    } else {
        for (std::uint32_t c = 2; c < p; ++c) {
            Matrix d = Matrix::identity(f, m);
            d.set(0, 0, c);
            gens.push_back(d);
        }
        for (int i = 0; i + 1 < m; ++i) {
            Matrix s = Matrix::identity(f, m);
            s.set(i, i, 0);
            s.set(i + 1, i + 1, 0);
            s.set(i, i + 1, 1);
            s.set(i + 1, i, 1);
            gens.push_back(s);
        }
    }
    if (gens.empty()) gens.push_back(Matrix::identity(f, m)); // GL_1(F_2)
    return gens;
}

std::vector<Matrix> shalika_generators(PrimeField f, int n, GeneratorStyle style) {
    std::vector<Matrix> gens;
    for (const auto& h : gl_generators(f, n, style)) {
        Matrix s = Matrix::identity(f, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s.set(i, j, h(i, j));
                s.set(n + i, n + j, h(i, j));
            }
        gens.push_back(s);
    }
    const std::uint32_t cmax =
        style == GeneratorStyle::minimal ? 1 : f.modulus() - 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (std::uint32_t c = 1; c <= cmax; ++c) {
                Matrix s = Matrix::identity(f, 2 * n);
                s.set(i, n + j, c);
                gens.push_back(s);
            }
    return gens;
}

std::vector<Matrix> parabolic_generators(PrimeField f, int m, int r,
                                         GeneratorStyle style) {
    if (r < 1 || r >= m)
        throw std::invalid_argument("parabolic_generators: need 1 <= r < m");
    std::vector<Matrix> gens;
    auto embed = [&](const Matrix& h, int offset) {
        Matrix g = Matrix::identity(f, m);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j)
                g.set(offset + i, offset + j, h(i, j));
        gens.push_back(g);
    };
    for (const auto& h : gl_generators(f, r, style)) embed(h, 0);
    for (const auto& h : gl_generators(f, m - r, style)) embed(h, r);
    const std::uint32_t cmax =
        style == GeneratorStyle::minimal ? 1 : f.modulus() - 1;
    for (int i = 0; i < r; ++i)
        for (int j = r; j < m; ++j)
            for (std::uint32_t c = 1; c <= cmax; ++c) {
                Matrix g = Matrix::identity(f, m);
                g.set(i, j, c);
                gens.push_back(g);
            }
    return gens;
}

void for_each_gl(PrimeField f, int m,
                 const std::function<void(const Matrix&)>& fn) {
    require_size(m, f.modulus(), "for_each_gl");
    for_each_gl_unchecked(f, m, fn);
}

void for_each_subspace(PrimeField f, int ambient, int dim,
                       const std::function<void(const Subspace&)>& fn) {
    if (dim < 0 || dim > ambient)
        throw std::invalid_argument("for_each_subspace: dimension out of range");
    const std::uint32_t p = f.modulus();

    // Choose pivot columns, then run an odometer over the free entries: in an
    // RREF basis row i is free exactly at non-pivot columns right of pivot i.
    std::vector<int> pivots(dim);
    for (int i = 0; i < dim; ++i) pivots[i] = i;
    for (;;) {
        std::vector<bool> is_pivot(ambient, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < dim; ++i)
            for (int j = pivots[i] + 1; j < ambient; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        for (;;) {
            Matrix basis(f, dim, ambient);
            for (int i = 0; i < dim; ++i) basis.set(i, pivots[i], 1);
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                basis.set(free_pos[t].first, free_pos[t].second, vals[t]);
            fn(Subspace::span_rows(basis));

            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == p) vals[t++] = 0;
            if (t == vals.size()) break;
        }

        // next pivot combination in lexicographic order
        int i = dim - 1;
        while (i >= 0 && pivots[i] == ambient - dim + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

CosetPartition double_coset_partition(int n, std::uint32_t p, int r,
                                      GeneratorStyle style) {
    require_size(2 * n, p, "double_coset_partition");
    coset_count(n, r); // validates 1 <= r < 2n
    const PrimeField f(p);
    CosetPartition out;
    out.group_order = gl_order(p, 2 * n);
    sweep_double_cosets(
        f, n, r, style, [&](std::uint64_t) { out.classes.emplace_back(); },
        [&](std::uint64_t code) { out.classes.back().push_back(code); },
        [&] { std::sort(out.classes.back().begin(), out.classes.back().end()); });
    return out;
}

CertifyReport certify(int n, std::uint32_t p, int r, bool expensive) {
    const int m = 2 * n;
    require_size(m, p, "certify");
    if (m == 4 && p == 3 && !expensive)
        throw std::invalid_argument(
            "certify: GL_4(F_3) is minutes-scale; pass the expensive flag");
    const PrimeField f(p);

    CertifyReport report;
    report.n = n;
    report.p = p;
    report.r = r;
    report.group_order = gl_order(p, m);
    report.expected_classes = coset_count(n, r);

    std::map<std::uint64_t, std::pair<int, int>> rep_codes;
    for (const auto& label : kl_bounds(n, r))
        rep_codes.emplace(representative(f, label).key(),
                          std::make_pair(label.k, label.l));

    ClassReport cls;
    sweep_double_cosets(
        f, n, r, GeneratorStyle::minimal,
        [&](std::uint64_t seed) {
            cls = ClassReport{};
            cls.seed_code = seed;
            const auto label = classify(Matrix::from_key(f, m, m, seed), n, r);
            cls.k = label.k;
            cls.l = label.l;
        },
        [&](std::uint64_t code) {
            ++cls.size;
            if (auto it = rep_codes.find(code); it != rep_codes.end())
                cls.reps_found.push_back(it->second);
            const auto label = classify(Matrix::from_key(f, m, m, code), n, r);
            if (label.k != cls.k || label.l != cls.l) {
                cls.classify_constant = false;
                if (!cls.has_witness) {
                    cls.has_witness = true;
                    cls.witness_code = code;
                }
            }
        },
        [&] {
            if (cls.reps_found.size() == 1) {
                const auto [wk, wl] = cls.reps_found.front();
                const Matrix w = representative(f, CosetLabel(wk, wl, n, r));
                const std::uint64_t stab = stabilizer_order(f, n, r, w);
                cls.expected_size =
                    shalika_order(p, n) * parabolic_order(p, m, r) / stab;
                cls.size_ok = cls.size == cls.expected_size;
            }
            report.elements_seen += cls.size;
            report.classes.push_back(cls);
        });

    report.class_count_ok =
        static_cast<std::int64_t>(report.classes.size()) == report.expected_classes;
    report.unique_reps_ok = true;
    report.classify_ok = true;
    report.sizes_ok = true;
    std::map<std::pair<int, int>, int> label_uses;
    for (const auto& c : report.classes) {
        if (c.reps_found.size() != 1) report.unique_reps_ok = false;
        if (!c.classify_constant) report.classify_ok = false;
        if (!c.size_ok) report.sizes_ok = false;
        ++label_uses[{c.k, c.l}];
    }
    for (const auto& [label, uses] : label_uses)
        if (uses != 1) report.classify_ok = false; // not distinct across classes
    report.partition_ok = report.elements_seen == report.group_order;

    if (!report.class_count_ok)
        report.failure = "class count " + std::to_string(report.classes.size()) +
                         " != N(n,r) = " + std::to_string(report.expected_classes);
    else if (!report.unique_reps_ok)
        report.failure = "some class does not contain exactly one w_{k,l}";
    else if (!report.classify_ok)
        report.failure = "classify not constant per class / not distinct";
    else if (!report.sizes_ok)
        report.failure = "class size disagrees with |S||P|/|S ∩ wPw^-1|";
    else if (!report.partition_ok)
        report.failure = "classes do not exhaust the group";
    return report;
}

} // namespace shalika::oracle
