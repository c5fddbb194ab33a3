#ifndef FTHR_HILBERT_HPP
#define FTHR_HILBERT_HPP

#include "fthr/groebner.hpp"
#include "fthr/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace fthr {

// Integer polynomial in one variable t; entry i is the coefficient of t^i.
using IntPoly = std::vector<std::int64_t>;

// Monomial ideal given by its minimal generators (exponent vectors).
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
    MonomialIdeal(std::size_t nvars, std::vector<std::vector<Exponent>> generators);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<std::vector<Exponent>>& generators() const noexcept { return gens_; }
    bool is_unit() const noexcept;

    bool contains(const Exponent* exps) const noexcept;
    bool contains(const std::vector<Exponent>& exps) const noexcept { return contains(exps.data()); }
    // Pure power of x_i among the generators, if any.
    std::optional<Exponent> pure_power(std::size_t i) const noexcept;
    // Every variable has a pure power, i.e. S/M is finite dimensional.
    bool is_artinian() const noexcept;

private:
    std::size_t nvars_;
    std::vector<std::vector<Exponent>> gens_;
};

// Leading monomials of a Gröbner basis.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// Numerator N(t) with HS(S/M) = N(t) / (1 − t)^n, via pivot recursion.
IntPoly hilbert_numerator(const MonomialIdeal& M);

struct HilbertData {
    std::size_t nvars = 0;
    IntPoly numerator;
    // N(t) = (1 − t)^(n − dim) · reduced(t) with reduced(1) ≠ 0.
    IntPoly reduced;
    std::size_t dim = 0;
    std::int64_t degree = 0;

    // For dim = 0 the reduced numerator is the Hilbert function itself.
    std::uint64_t hilbert_function(std::uint64_t t) const;
    std::uint64_t colength() const;
    // Largest t with a nonzero graded piece; empty for the zero module.
    std::optional<std::uint64_t> top_degree() const;
};

HilbertData hilbert_data(const MonomialIdeal& M);

// Visit every monomial of total degree t outside M, in lexicographic order.
// The callback receives the exponent vector.
void for_each_standard_monomial(const MonomialIdeal& M, std::uint64_t t,
                                const std::function<void(const std::vector<Exponent>&)>& visit);
std::uint64_t count_standard_monomials(const MonomialIdeal& M, std::uint64_t t);

// All standard monomials of an Artinian monomial ideal. Throws
// NotZeroDimensional if M is not Artinian and SearchBudgetExceeded past
// limits().max_standard_monomials.
std::vector<Monomial> all_standard_monomials(const MonomialIdeal& M);

// Largest degree of a standard monomial of an Artinian M.
std::uint64_t artinian_top_degree(const MonomialIdeal& M);

} // namespace fthr

#endif // FTHR_HILBERT_HPP
