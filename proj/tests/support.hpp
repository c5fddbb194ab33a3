#ifndef FTHR_TEST_SUPPORT_HPP
#define FTHR_TEST_SUPPORT_HPP

#include "fthr/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fthr::testing {

// Build a polynomial from (coefficient, exponent vector) pairs.
inline Polynomial poly(const RingPtr& R, std::vector<std::pair<std::int64_t, std::vector<Exponent>>> terms) {
    std::vector<std::pair<Monomial, std::int64_t>> t;
    for (auto& [c, e] : terms) t.emplace_back(Monomial(e), c);
    return Polynomial::from_terms(R, std::move(t));
}

inline Polynomial var(const RingPtr& R, std::size_t i) { return Polynomial::variable(R, i); }
inline Polynomial cst(const RingPtr& R, std::int64_t c) { return Polynomial::constant(R, c); }

// SplitMix64 for reproducible random inputs.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Random polynomial with up to `terms` terms of total degree at most `maxdeg`.
inline Polynomial random_poly(Rng& rng, const RingPtr& R, std::size_t terms, Exponent maxdeg, bool homogeneous = false,
                              Exponent degree = 0) {
    std::vector<std::pair<Monomial, std::int64_t>> t;
    const std::size_t n = R->nvars();
    for (std::size_t k = 0; k < terms; ++k) {
        std::vector<Exponent> e(n, 0);
        Exponent budget = homogeneous ? degree : static_cast<Exponent>(rng.below(maxdeg + 1));
        for (Exponent d = 0; d < budget; ++d) e[rng.below(n)]++;
        t.emplace_back(Monomial(e), static_cast<std::int64_t>(rng.below(R->characteristic())));
    }
    return Polynomial::from_terms(R, std::move(t));
}

} // namespace fthr::testing

#endif
