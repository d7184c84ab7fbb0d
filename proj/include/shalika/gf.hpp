#pragma once

#include <cstdint>

namespace shalika {

/// The prime field F_p for 2 <= p < 2^16.
///
/// The bound keeps every product of residues inside 32 bits, so all
/// arithmetic below runs on plain integers with a single reduction.
/// Primality is established by trial division at construction; two
/// PrimeField values denote the same field iff their moduli agree.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    bool operator==(const PrimeField&) const noexcept = default;

private:
    std::uint32_t p_;
};

/// An element of F_p, kept reduced to [0, p).
///
/// Elements remember their modulus; binary operations on elements of
/// different fields throw std::invalid_argument.
class Fp {
public:
    Fp(std::int64_t value, PrimeField field);

    std::uint32_t value() const noexcept { return v_; }
    PrimeField field() const noexcept { return PrimeField(p_); }

    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator-() const noexcept;
    Fp operator+(Fp rhs) const;
    Fp operator-(Fp rhs) const;
    Fp operator*(Fp rhs) const;
    Fp operator/(Fp rhs) const; // throws std::domain_error on rhs = 0

    Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
    Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
    Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

    bool operator==(const Fp&) const noexcept = default;

private:
    friend Fp inv(Fp);
    std::uint32_t v_;
    std::uint32_t p_;
};

/// Multiplicative inverse by extended Euclid; throws std::domain_error on 0.
Fp inv(Fp a);

namespace detail {
// Raw residue arithmetic shared with the matrix layer. Inputs must be
// reduced; p must be a valid modulus.
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p); // throws std::domain_error on 0
} // namespace detail

} // namespace shalika
