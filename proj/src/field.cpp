#include "fthr/field.hpp"

#include "fthr/errors.hpp"

#include <string>

namespace fthr {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Coeff fp_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw ZeroInverse("0 has no inverse modulo " + std::to_string(p));
    // extended Euclid on signed 64-bit values
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s0 < 0) s0 += static_cast<std::int64_t>(p);
    return static_cast<Coeff>(s0);
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw NotPrime("characteristic " + std::to_string(p) + " does not fit the coefficient word");
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, x = a % p_;
    while (e) {
        if (e & 1) r = r * x % p_;
        x = x * x % p_;
        e >>= 1;
    }
    return static_cast<Coeff>(r);
}

} // namespace fthr
