#include "fthr/errors.hpp"
#include "fthr/groebner.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fthr;
using namespace fthr::testing;

namespace {

struct Quad {
    RingPtr R = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3);
};

bool contains_element(const GroebnerBasis& gb, const Polynomial& f) {
    for (const Polynomial& g : gb.elements())
        if (g == f) return true;
    return false;
}

} // namespace

TEST_CASE("buchberger examples") {
    Quad q;
    GroebnerBasis a = buchberger(std::vector{q.x}, MonomialOrder::grevlex());
    REQUIRE(a.size() == 1);
    CHECK(a.elements()[0] == q.x);

    std::vector gens{q.x * q.y - q.z * q.w, q.x};
    GroebnerBasis b = buchberger(gens, MonomialOrder::grevlex());
    CHECK(contains_element(b, q.x));
    CHECK(contains_element(b, q.z * q.w));
    CHECK(b.size() == 2);

    auto R5 = Ring::make(5, {"x", "y"});
    std::vector lin{var(R5, 0) + var(R5, 1), var(R5, 0) - var(R5, 1)};
    GroebnerBasis c = buchberger(lin, MonomialOrder::grevlex());
    REQUIRE(c.size() == 2);
    CHECK(c.elements()[0] == var(R5, 1));
    CHECK(c.elements()[1] == var(R5, 0));
}

TEST_CASE("unit ideal is detected") {
    auto R = Ring::make(7, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    std::vector gens{x * y - cst(R, 1), x};
    CHECK(buchberger(gens, MonomialOrder::grevlex()).is_unit());
}

TEST_CASE("membership and containment examples") {
    auto R = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial x = var(R, 0);
    CHECK(ideal_membership(x.pow(2), Ideal(R, {x})));
    CHECK_FALSE(ideal_membership(x, Ideal(R, {x.pow(2)})));
    Polynomial f = x * var(R, 1) - var(R, 2) * var(R, 3);
    Ideal fq(R, {frobenius_power(f, 1)});
    CHECK(ideal_membership(poly(R, {{1, {3, 3, 0, 0}}, {-1, {0, 0, 3, 3}}}), fq));

    Ideal m = Ideal::maximal(R);
    CHECK(ideal_contains(m, m * m));
    std::vector<Polynomial> brk;
    for (std::size_t i = 0; i < 4; ++i) brk.push_back(var(R, i).pow(3));
    CHECK_FALSE(ideal_contains(Ideal(R, brk), m));
    CHECK(ideal_contains(fq, fq));
}

TEST_CASE("colon examples") {
    auto R = Ring::make(3, {"x", "y", "z", "w"});
    Polynomial x = var(R, 0), y = var(R, 1);
    CHECK(ideal_equal(colon_ideal(Ideal(R, {x.pow(2)}), Ideal(R, {x})), Ideal(R, {x})));

    Polynomial f = x * y - var(R, 2) * var(R, 3);
    Ideal c = colon_ideal(Ideal(R, {f.pow(3)}), Ideal(R, {f}));
    CHECK(ideal_equal(c, Ideal(R, {f.pow(2)})));

    auto S = Ring::make(3, {"x", "y"});
    Polynomial a = var(S, 0), b = var(S, 1);
    Ideal I(S, {a.pow(3), b.pow(3)});
    Ideal col = colon_ideal(I, Ideal(S, {a + b}));
    CHECK(ideal_membership((a + b).pow(2), col));
    // Both directions: every element of the colon times (x+y) lands in I.
    for (const Polynomial& g : col.generators()) CHECK(ideal_membership(g * (a + b), I));
    // (x^3, y^3) : (x+y) = (x+y)^2 + (x^3, y^3) since (x+y)^3 = x^3 + y^3.
    CHECK(ideal_equal(col, Ideal(S, {(a + b).pow(2), a.pow(3), b.pow(3)})));

    CHECK_THROWS_AS(colon_by_element(I, Polynomial(S)), DivisionByZeroGenerator);

    // Socle of (x, y, z + w, xy − zw): the colons by x and y are the unit
    // ideal, the colons by z and w are m, so the answer is m.
    Polynomial z = var(R, 2), w = var(R, 3);
    Ideal G(R, {x, y, z + w, f});
    CHECK(ideal_equal(colon_ideal(G, Ideal::maximal(R)), Ideal::maximal(R)));
    CHECK(ideal_equal(colon_ideal(G, Ideal(R, {x, z})), Ideal::maximal(R)));
    CHECK(colon_ideal(G, Ideal(R, {x, y})).is_unit());
}

TEST_CASE("radical examples") {
    auto R = Ring::make(5, {"x", "y", "z"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
    CHECK(radical_membership(x, Ideal(R, {x.pow(2)})));
    CHECK_FALSE(radical_membership(z, Ideal(R, {x, y})));
    CHECK(radical_membership(x + y, Ideal(R, {(x + y).pow(2)})));
}

TEST_CASE("intersection of monomial ideals") {
    auto R = Ring::make(5, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    Ideal meet = ideal_intersection(Ideal(R, {x.pow(2)}), Ideal(R, {x * y}));
    CHECK(ideal_equal(meet, Ideal(R, {x.pow(2) * y})));
}

TEST_CASE("divide_exact") {
    auto R = Ring::make(7, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    Polynomial g = x + y, h = (x + y).pow(3) * (x - y * cst(R, 2));
    CHECK(divide_exact(h, g) == (x + y).pow(2) * (x - y * cst(R, 2)));
    CHECK_THROWS_AS(divide_exact(x, y), InvalidArgument);
}

namespace {

// Every term of the remainder avoids the leading monomials.
bool fully_reduced(const GroebnerBasis& gb, const Polynomial& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (gb.leading_monomial_divides(r.record(i))) return false;
    return true;
}

} // namespace

TEST_CASE("property: normal forms are remainders") {
    Rng rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        Coeff p = std::vector<Coeff>{2, 3, 5, 7}[rng.below(4)];
        auto R = Ring::make(p, {"x", "y", "z"});
        std::vector<Polynomial> gens;
        for (std::size_t k = 0; k < 1 + rng.below(3); ++k) {
            Polynomial g = random_poly(rng, R, 1 + rng.below(3), 3);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal I(R, gens);
        const GroebnerBasis& gb = I.groebner();
        for (const Polynomial& g : gens) CHECK(gb.reduces_to_zero(g));
        for (int k = 0; k < 5; ++k) {
            Polynomial f = random_poly(rng, R, 1 + rng.below(6), 5);
            Polynomial r = gb.normal_form(f);
            CHECK(fully_reduced(gb, r));
            CHECK(ideal_membership(f - r, I));
        }
    }
}

TEST_CASE("property: colon bounds") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto R = Ring::make(std::vector<Coeff>{2, 3, 5}[rng.below(3)], {"x", "y", "z"});
        std::vector<Polynomial> ig, jg;
        for (int k = 0; k < 2; ++k) {
            Polynomial g = random_poly(rng, R, 1 + rng.below(2), 3);
            if (!g.is_zero()) ig.push_back(g);
        }
        Polynomial h = random_poly(rng, R, 1 + rng.below(2), 2);
        if (ig.empty() || h.is_zero()) continue;
        jg.push_back(h);
        Ideal I(R, ig), J(R, jg);
        Ideal C = colon_ideal(I, J);
        CHECK(ideal_contains(C, I));
        CHECK(ideal_contains(I, J * C));
    }
}

TEST_CASE("property: radical agrees with bounded power search") {
    Rng rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        auto R = Ring::make(std::vector<Coeff>{2, 3, 5}[rng.below(3)], {"x", "y", "z"});
        const std::size_t n = 3;
        std::vector<Polynomial> gens;
        for (std::size_t v = 0; v < n; ++v) gens.push_back(var(R, v).pow(1 + rng.below(3)));
        // One binomial.
        std::vector<Exponent> e1(n), e2(n);
        for (std::size_t v = 0; v < n; ++v) {
            e1[v] = static_cast<Exponent>(rng.below(2));
            e2[v] = static_cast<Exponent>(rng.below(2));
        }
        gens.push_back(Polynomial::term(R, Monomial(e1)) - Polynomial::term(R, Monomial(e2), 2));
        Ideal I(R, gens);
        Polynomial f = random_poly(rng, R, 1 + rng.below(3), 2);
        bool brute = false;
        Polynomial pw = cst(R, 1);
        for (int k = 1; k <= 20 && !brute; ++k) {
            pw = pw * f;
            brute = ideal_membership(pw, I);
        }
        if (f.is_zero()) brute = true;
        CHECK(radical_membership(f, I) == brute);
    }
}
