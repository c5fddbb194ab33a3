#ifndef FTHR_TEST_FIXTURES_HPP
#define FTHR_TEST_FIXTURES_HPP

#include "fthr/groebner.hpp"
#include "fthr/quotient.hpp"
#include "support.hpp"

#include <string>
#include <vector>

namespace fthr::testing {

inline QuotientContext plane5() { return QuotientContext::polynomial_ring(Ring::make(5, {"x", "y"})); }

// F_3[x,y,z,w]/(xy - zw)
inline QuotientContext cone3(Backend b = Backend::automatic) {
    auto R = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial f = var(R, 0) * var(R, 1) - var(R, 2) * var(R, 3);
    return QuotientContext(R, {f}, {b, 1});
}

inline Ideal cone_sop(const RingPtr& R) { return Ideal(R, {var(R, 0), var(R, 1), var(R, 2) + var(R, 3)}); }

// F_7[x1..x8]/(x1^2 + ... + x8^2)
inline QuotientContext diagonal7() {
    std::vector<std::string> v;
    for (int i = 1; i <= 8; ++i) v.push_back("x" + std::to_string(i));
    auto R = Ring::make(7, v);
    Polynomial f(R);
    for (std::size_t i = 0; i < 8; ++i) f = f + var(R, i).pow(2);
    return QuotientContext(R, {f});
}

inline QuotientContext triangle5() {
    auto R = Ring::make(5, {"x", "y", "z"});
    return QuotientContext(R, {var(R, 0) * var(R, 1) * var(R, 2)});
}

inline QuotientContext nonpure2() {
    auto R = Ring::make(2, {"x", "y"});
    return QuotientContext(R, {var(R, 0).pow(2) + var(R, 1).pow(2)});
}

struct Case {
    QuotientContext ctx;
    Ideal a;
    Ideal J;
};

// Random homogeneous ideal of S generated in degrees 1..maxdeg, nonzero.
inline Ideal random_ideal(Rng& rng, const RingPtr& R, std::size_t count, Exponent maxdeg) {
    std::vector<Polynomial> gens;
    while (gens.size() < count) {
        Exponent d = 1 + static_cast<Exponent>(rng.below(maxdeg));
        Polynomial g = random_poly(rng, R, 1 + rng.below(3), d, true, d);
        if (!g.is_zero()) gens.push_back(g);
    }
    return Ideal(R, gens);
}

// (a, J) pairs over p in {2, 3} in two or three variables; J is m-primary.
inline std::vector<Case> random_corpus(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<Case> out;
    while (out.size() < count) {
        const unsigned p = rng.below(2) ? 3 : 2;
        const std::size_t n = 2 + rng.below(2);
        std::vector<std::string> names = {"x", "y", "z"};
        names.resize(n);
        auto R = Ring::make(p, names);
        std::vector<Polynomial> defining;
        if (n == 3 && rng.below(3) == 0) defining.push_back(var(R, 0) * var(R, 1) - var(R, 2).pow(2));
        QuotientContext ctx(R, defining, {Backend::groebner, 1});
        // J: pure powers plus a random form keep it m-primary.
        std::vector<Polynomial> jg;
        for (std::size_t i = 0; i < n; ++i) jg.push_back(var(R, i).pow(1 + rng.below(2)));
        Ideal extra = random_ideal(rng, R, 1, 2);
        for (const Polynomial& g : extra.generators()) jg.push_back(g);
        Ideal a = random_ideal(rng, R, 1 + rng.below(2), 2);
        if (ideal_contains(ctx.defining_ideal(), a)) continue;
        out.push_back({ctx, a, Ideal(R, jg)});
    }
    return out;
}

inline std::vector<QuotientContext> f_pure_fixtures() {
    std::vector<QuotientContext> out;
    out.push_back(plane5());
    out.push_back(QuotientContext::polynomial_ring(Ring::make(2, {"x", "y", "z"})));
    out.push_back(cone3());
    out.push_back(triangle5());
    auto R2 = Ring::make(2, {"x", "y", "z"});
    out.emplace_back(R2, std::vector<Polynomial>{var(R2, 0) * var(R2, 1) - var(R2, 2).pow(2)});
    auto R3 = Ring::make(3, {"x", "y", "z"});
    out.emplace_back(R3, std::vector<Polynomial>{var(R3, 0) * var(R3, 1) - var(R3, 2).pow(2)});
    out.emplace_back(R3, std::vector<Polynomial>{var(R3, 0) * var(R3, 1), var(R3, 0) * var(R3, 2)});
    auto R7 = Ring::make(7, {"x", "y", "z"});
    out.emplace_back(R7, std::vector<Polynomial>{var(R7, 0).pow(3) + var(R7, 1).pow(3) + var(R7, 2).pow(3)});
    return out;
}

} // namespace fthr::testing

#endif
