#ifndef FTHR_POLYNOMIAL_HPP
#define FTHR_POLYNOMIAL_HPP

#include "fthr/field.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fthr {

using Exponent = std::uint32_t;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    std::uint64_t total_degree() const noexcept { return degree_; }

    bool divides(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const;
    // Requires divides(other): returns other / *this.
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, elimination };

    Kind kind = Kind::grevlex;
    // Block sizes for Kind::elimination; blocks are compared left to right,
    // each by degree first and then reverse-lexicographically.
    std::vector<std::size_t> blocks;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::lex, {}}; }
    static MonomialOrder elimination(std::vector<std::size_t> block_sizes) {
        return {Kind::elimination, std::move(block_sizes)};
    }

    std::string name() const;
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order. Every
// variable has degree 1.
class Ring {
public:
    Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

    static RingPtr make(std::uint64_t p, std::vector<std::string> variables,
                        MonomialOrder order = MonomialOrder::grevlex());

    const PrimeField& field() const noexcept { return field_; }
    Coeff characteristic() const noexcept { return field_.characteristic(); }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const MonomialOrder& order() const noexcept { return order_; }

    // Term records have nvars()+1 slots: total degree, then the exponents.
    std::size_t stride() const noexcept { return vars_.size() + 1; }

    // Three-way comparison of two term records under the ring order.
    int compare(const Exponent* a, const Exponent* b) const noexcept;
    int compare(const Monomial& a, const Monomial& b) const;

    bool same_as(const Ring& other) const noexcept;
    RingPtr with_order(MonomialOrder order) const;
    // New ring with `extra` prepended to the variable list.
    RingPtr with_leading_variables(const std::vector<std::string>& extra, MonomialOrder order) const;

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Homogeneity {
    bool homogeneous = true;
    // Empty for the zero polynomial (degree −∞) and for non-homogeneous input.
    std::optional<std::uint64_t> degree;
};

// Sparse polynomial in canonical form: terms strictly decreasing in the ring
// order, no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, const Monomial& m, Coeff c = 1);
    static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, std::int64_t>> terms);
    // Records in arbitrary order, possibly with repeated monomials or zero coefficients.
    static Polynomial from_unsorted_records(RingPtr ring, std::vector<Exponent> records, std::vector<Coeff> coeffs);
    // Records already in canonical order with nonzero coefficients.
    static Polynomial from_sorted_records(RingPtr ring, std::vector<Exponent> records, std::vector<Coeff> coeffs);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }

    Coeff coeff(std::size_t i) const noexcept { return coeffs_[i]; }
    const Exponent* record(std::size_t i) const noexcept { return records_.data() + i * ring_->stride(); }
    Exponent exponent(std::size_t i, std::size_t var) const noexcept { return record(i)[var + 1]; }
    std::uint64_t term_degree(std::size_t i) const noexcept { return record(i)[0]; }
    Monomial monomial(std::size_t i) const;

    Monomial leading_monomial() const { return monomial(0); }
    Coeff leading_coeff() const noexcept { return coeffs_.front(); }
    std::optional<std::uint64_t> degree() const noexcept;
    Homogeneity homogeneity() const noexcept;

    std::span<const Exponent> records() const noexcept { return records_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    Polynomial operator-() const;
    Polynomial scaled(Coeff c) const;
    Polynomial times_term(const Monomial& m, Coeff c) const;
    Polynomial monic() const;
    Polynomial pow(std::uint64_t k) const;
    // Same polynomial re-expressed in `target`; source variable i goes to var_map[i].
    Polynomial map_to(RingPtr target, std::span<const std::size_t> var_map) const;
    Polynomial with_ring_order(RingPtr target) const;

    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend bool operator==(const Polynomial& f, const Polynomial& g);

private:
    RingPtr ring_;
    std::vector<Exponent> records_;
    std::vector<Coeff> coeffs_;
};

void require_same_ring(const Polynomial& f, const Polynomial& g);
void require_same_ring(const Ring& a, const Ring& b);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

// f^(p^e) by scaling exponent vectors; coefficients are fixed by Frobenius on F_p.
Polynomial frobenius_power(const Polynomial& f, unsigned e);
Homogeneity is_homogeneous(const Polynomial& f);

// p^e, throwing ExponentOverflow if it leaves the exponent word.
std::uint64_t prime_power(std::uint64_t p, unsigned e);

} // namespace fthr

#endif // FTHR_POLYNOMIAL_HPP
