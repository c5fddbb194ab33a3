#include "fthr/errors.hpp"
#include "fthr/ideal_calculus.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fthr;
using namespace fthr::testing;

TEST_CASE("ideal power examples") {
    auto R = Ring::make(5, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    Ideal m(R, {x, y});
    Ideal sq = ideal_power(m, 2);
    CHECK(sq.generators().size() == 3);
    CHECK(ideal_equal(sq, Ideal(R, {x.pow(2), x * y, y.pow(2)})));
    Ideal one = ideal_power(m, 0);
    CHECK(one.is_unit());

    auto R2 = Ring::make(2, {"x", "y"});
    Ideal m2 = Ideal::maximal(R2);
    Ideal cube = ideal_power(m2, 3);
    CHECK(cube.generators().size() == 4);
    Polynomial a = var(R2, 0), b = var(R2, 1);
    CHECK(ideal_equal(cube, Ideal(R2, {a.pow(3), a.pow(2) * b, a * b.pow(2), b.pow(3)})));
}

TEST_CASE("power cache budget") {
    auto R = Ring::make(5, {"x", "y"});
    PowerCache c(Ideal::maximal(R), 4);
    CHECK(c.generators(4).size() == 5);
    CHECK_THROWS_AS(c.generators(5), SearchBudgetExceeded);
    CHECK(c.is_maximal());
}

TEST_CASE("bracket power examples") {
    auto R = Ring::make(5, {"x", "y"});
    Ideal m = Ideal::maximal(R);
    Ideal b = bracket_power(m, 1);
    CHECK(b.generators()[0] == var(R, 0).pow(5));
    CHECK(b.generators()[1] == var(R, 1).pow(5));
    CHECK(ideal_equal(bracket_power(m, 0), m));

    auto Q = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial f = var(Q, 0) * var(Q, 1) - var(Q, 2) * var(Q, 3);
    Ideal bf = bracket_power(Ideal(Q, {f}), 1);
    REQUIRE(bf.generators().size() == 1);
    CHECK(bf.generators()[0] == poly(Q, {{1, {3, 3, 0, 0}}, {-1, {0, 0, 3, 3}}}));
    CHECK_THROWS_AS(bracket_power(Ideal(Q, {var(Q, 0)}), 30), ExponentOverflow);
}

TEST_CASE("in_quotient examples") {
    auto R = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial f = var(R, 0) * var(R, 1) - var(R, 2) * var(R, 3);
    QuotientContext ctx(R, {f});
    Ideal m = Ideal::maximal(R);
    CHECK(ideal_equal(in_quotient(m, ctx), m));
    CHECK(ideal_equal(in_quotient(Ideal::zero(R), ctx), Ideal(R, {f})));
    Ideal b = in_quotient(bracket_power(m, 1), ctx);
    std::vector<Polynomial> expect;
    for (std::size_t i = 0; i < 4; ++i) expect.push_back(var(R, i).pow(3));
    expect.push_back(f);
    CHECK(ideal_equal(b, Ideal(R, expect)));
}

TEST_CASE("minimal generator examples") {
    auto R = Ring::make(5, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    auto a = minimal_generators(Ideal(R, {x, y, x + y}));
    CHECK(a.mu == 2);
    CHECK(a.max_degree == 1);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
        auto g = minimal_generators(Ideal::maximal(Ring::make(3, v)));
        CHECK(g.mu == n);
        CHECK(g.max_degree == 1);
    }
    auto R3 = Ring::make(3, {"x", "y"});
    Polynomial a3 = var(R3, 0), b3 = var(R3, 1);
    auto j = minimal_generators(Ideal(R3, {a3.pow(2), a3 * b3, b3.pow(3)}));
    CHECK(j.mu == 3);
    CHECK(j.max_degree == 3);
    CHECK_THROWS_AS(minimal_generators(Ideal(R3, {a3 + b3.pow(2)})), NotHomogeneous);
}

TEST_CASE("minimal generators modulo the defining ideal") {
    auto R = Ring::make(3, {"x", "y", "z"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
    QuotientContext ctx(R, {x * y - z.pow(2)});
    // z^2 ≡ xy in R, so it is redundant there but not in S.
    Ideal a(R, {x, y, z.pow(2)});
    CHECK(minimal_generators(a).mu == 3);
    auto g = minimal_generators(a, &ctx);
    CHECK(g.mu == 2);
    CHECK(g.max_degree == 1);
}

namespace {

Ideal product_power(const Ideal& a, std::uint64_t k) {
    Ideal r = Ideal::unit(a.ring());
    for (std::uint64_t i = 0; i < k; ++i) r = r * a;
    return r;
}

} // namespace

TEST_CASE("property: iterated bracket powers compose") {
    Rng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        const Coeff p = std::vector<Coeff>{2, 3}[rng.below(2)];
        auto R = Ring::make(p, {"x", "y", "z"});
        std::vector<Polynomial> g;
        for (int k = 0; k < 2; ++k) {
            Exponent d = static_cast<Exponent>(1 + rng.below(2));
            Polynomial f = random_poly(rng, R, 1 + rng.below(3), d, true, d);
            if (!f.is_zero()) g.push_back(f);
        }
        if (g.empty()) continue;
        Ideal J(R, g);
        const unsigned e1 = static_cast<unsigned>(rng.below(2)), e2 = static_cast<unsigned>(1 + rng.below(1));
        CHECK(ideal_equal(bracket_power(bracket_power(J, e1), e2), bracket_power(J, e1 + e2)));
    }
}

TEST_CASE("property: power ladder identity a^r = a^(r - s q) (a^[q])^s") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
        auto R = Ring::make(2, v);
        Ideal m = Ideal::maximal(R);
        const std::uint64_t q = 2, s = 1, r = n * q;
        Ideal lhs = ideal_power(m, r);
        Ideal rhs = ideal_power(m, r - s * q) * product_power(bracket_power(m, 1), s);
        // Every monomial of degree r ≥ n(q − 1) + 1 has an exponent ≥ q.
        CHECK(ideal_contains(lhs, rhs));
        CHECK(ideal_contains(rhs, lhs));
    }
}

TEST_CASE("property: powers multiply") {
    Rng rng(161803);
    for (int trial = 0; trial < 15; ++trial) {
        auto R = Ring::make(std::vector<Coeff>{2, 3, 5}[rng.below(3)], {"x", "y", "z"});
        std::vector<Polynomial> g;
        for (int k = 0; k < 2; ++k) {
            Exponent d = static_cast<Exponent>(1 + rng.below(2));
            Polynomial f = random_poly(rng, R, 1 + rng.below(2), d, true, d);
            if (!f.is_zero()) g.push_back(f);
        }
        if (g.empty()) continue;
        Ideal a(R, g);
        const std::uint64_t s = rng.below(3), t = rng.below(3);
        CHECK(ideal_equal(ideal_power(a, s) * ideal_power(a, t), ideal_power(a, s + t)));
    }
}
