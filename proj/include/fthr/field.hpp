#ifndef FTHR_FIELD_HPP
#define FTHR_FIELD_HPP

#include <cstdint>

namespace fthr {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// Inverse of a modulo the prime p; throws ZeroInverse when a ≡ 0.
Coeff fp_inv(std::uint64_t a, std::uint64_t p);

// The prime field F_p. p is validated by trial division and must stay below
// 2^31 so that products of two residues fit in 64 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    Coeff characteristic() const noexcept { return p_; }

    Coeff reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Coeff inv(Coeff a) const { return fp_inv(a, p_); }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;

    // Signed representative in (-p/2, p/2], used for printing.
    std::int64_t centered(Coeff a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    Coeff p_;
};

} // namespace fthr

#endif // FTHR_FIELD_HPP
