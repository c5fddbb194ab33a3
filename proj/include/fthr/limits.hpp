#ifndef FTHR_LIMITS_HPP
#define FTHR_LIMITS_HPP

#include <cstdint>

namespace fthr {

// Process-wide work budgets. Exceeding one raises SearchBudgetExceeded
// instead of letting a computation run unbounded. Set these before starting
// worker threads; they are read without synchronisation.
struct Limits {
    // S-pairs processed by a single Buchberger run.
    std::uint64_t max_gb_pairs = 2'000'000;
    // Largest exponent t for which a^t is materialised.
    std::uint64_t max_power = 1'000'000;
    // Matrix entries touched by the degree-slice linear algebra engine.
    std::uint64_t max_matrix_cells = 4'000'000'000ull;
    // Monomials enumerated while counting standard monomials.
    std::uint64_t max_standard_monomials = 50'000'000;
    // Largest p^(e·n) for which λ(S/m^[p^e]) based F-signature rows are attempted.
    std::uint64_t max_frobenius_length = 4'000'000;
};

Limits& limits();

} // namespace fthr

#endif // FTHR_LIMITS_HPP
