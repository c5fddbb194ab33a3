#ifndef FTHR_GROEBNER_HPP
#define FTHR_GROEBNER_HPP

#include "fthr/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fthr {

struct GroebnerOptions {
    // Homogeneous input only: drop S-pairs whose lcm degree exceeds the bound.
    // The result is then a Gröbner basis up to that degree.
    std::optional<std::uint64_t> max_degree;
    // 0 means "use limits().max_gb_pairs".
    std::uint64_t max_pairs = 0;
};

struct GroebnerStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
};

// Reduced Gröbner basis: monic elements sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, std::optional<std::uint64_t> degree_bound,
                  GroebnerStats stats);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::optional<std::uint64_t> degree_bound() const noexcept { return degree_bound_; }
    const GroebnerStats& stats() const noexcept { return stats_; }

    bool is_unit() const noexcept;
    std::vector<Monomial> leading_monomials() const;

    // Remainder of f on division by the basis; f is mapped into the basis ring
    // when only the monomial order differs.
    Polynomial normal_form(const Polynomial& f) const;
    bool reduces_to_zero(const Polynomial& f) const;
    bool leading_monomial_divides(const Exponent* record) const noexcept;

private:
    struct Lead {
        std::vector<Exponent> record;
        std::uint64_t mask;
    };

    RingPtr ring_;
    std::vector<Polynomial> elements_;
    std::vector<Lead> leads_;
    std::optional<std::uint64_t> degree_bound_;
    GroebnerStats stats_;
};

// Buchberger's algorithm with the Gebauer–Möller criteria and the normal
// selection strategy (sugar degree).
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    // The irrelevant ideal (x_1, ..., x_n).
    static Ideal maximal(RingPtr ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool has_no_generators() const noexcept { return gens_.empty(); }
    bool is_homogeneous() const noexcept;
    bool is_monomial() const noexcept;
    std::optional<std::uint64_t> max_generator_degree() const noexcept;

    // Reduced grevlex (ring order) basis, computed once and shared by copies.
    const GroebnerBasis& groebner() const;
    bool is_unit() const { return groebner().is_unit(); }

    Ideal operator+(const Ideal& other) const;
    Ideal operator*(const Ideal& other) const;

    std::string to_string() const;

private:
    struct Cache;

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& I);
// J ⊆ I
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

// I ∩ J by eliminating a tag variable from t·I + (1 − t)·J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
// (I : g) = (1/g)(I ∩ (g)).
Ideal colon_by_element(const Ideal& I, const Polynomial& g);
// (I : J) as the intersection of the per-generator colons.
Ideal colon_ideal(const Ideal& I, const Ideal& J);
// Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 − t·f).
bool radical_membership(const Polynomial& f, const Ideal& I);

// h / g when g divides h exactly; throws InvalidArgument otherwise.
Polynomial divide_exact(const Polynomial& h, const Polynomial& g);

} // namespace fthr

#endif // FTHR_GROEBNER_HPP
