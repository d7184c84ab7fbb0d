#include "shalika/gf.hpp"

#include <stdexcept>
#include <string>

namespace shalika {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 16))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " exceeds 2^16");
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not prime");
}

Fp::Fp(std::int64_t value, PrimeField field) : p_(field.modulus()) {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
}

namespace {
void require_same_field(std::uint32_t pa, std::uint32_t pb) {
    if (pa != pb)
        throw std::invalid_argument("Fp: mixed moduli " + std::to_string(pa) +
                                    " and " + std::to_string(pb));
}
} // namespace

Fp Fp::operator-() const noexcept {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp Fp::operator+(Fp rhs) const {
    require_same_field(p_, rhs.p_);
    Fp r = *this;
    r.v_ = detail::mod_add(v_, rhs.v_, p_);
    return r;
}

Fp Fp::operator-(Fp rhs) const {
    require_same_field(p_, rhs.p_);
    Fp r = *this;
    r.v_ = detail::mod_sub(v_, rhs.v_, p_);
    return r;
}

Fp Fp::operator*(Fp rhs) const {
    require_same_field(p_, rhs.p_);
    Fp r = *this;
    r.v_ = detail::mod_mul(v_, rhs.v_, p_);
    return r;
}

Fp Fp::operator/(Fp rhs) const {
    require_same_field(p_, rhs.p_);
    return *this * inv(rhs);
}

Fp inv(Fp a) {
    Fp r = a;
    r.v_ = detail::mod_inv(a.v_, a.p_);
    return r;
}

namespace detail {

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("Fp: division by zero");
    // Extended Euclid on (a, p); p prime guarantees gcd 1.
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tr = old_r - q * r;
        old_r = r;
        r = tr;
        std::int64_t ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    std::int64_t v = old_s % static_cast<std::int64_t>(p);
    if (v < 0) v += p;
    return static_cast<std::uint32_t>(v);
}

} // namespace detail

} // namespace shalika
