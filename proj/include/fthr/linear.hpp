#ifndef FTHR_LINEAR_HPP
#define FTHR_LINEAR_HPP

#include "fthr/field.hpp"
#include "fthr/hilbert.hpp"
#include "fthr/polynomial.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <optional>
#include <utility>
#include <vector>

namespace fthr {

// Sparse row: (column, nonzero coefficient) pairs.
using SparseRow = std::vector<std::pair<std::uint32_t, Coeff>>;

// Rank over F_p. Rows are split into connected components (rows sharing a
// column) and each block is eliminated densely.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, const PrimeField& F);

// Degree-by-degree linear algebra for a homogeneous ideal G = M + (g_1..g_k)
// of S, where M collects the monomial generators. In degree t the quotient
// (S/G)_t is the span of the degree-t monomials outside M modulo the rows
// u·g_j, u a monomial outside M.
class DegreeSliceEngine {
public:
    DegreeSliceEngine(RingPtr ring, const std::vector<Polynomial>& generators);

    const MonomialIdeal& monomial_part() const noexcept { return monomials_; }
    // Largest degree with (S/M)_t ≠ 0 when M is Artinian.
    std::optional<std::uint64_t> monomial_top_degree() const;

    // dim_K (S/G)_t
    std::uint64_t quotient_dimension(std::uint64_t t);
    // Every h (homogeneous of degree t) lies in G.
    bool contains(std::uint64_t t, const std::vector<Polynomial>& hs);

private:
    struct ExponentHash {
        std::size_t operator()(const std::vector<Exponent>& e) const noexcept;
    };
    struct Slice {
        std::uint64_t degree = 0;
        std::unordered_map<std::vector<Exponent>, std::uint32_t, ExponentHash> columns;
        std::vector<SparseRow> rows;
        std::size_t rank = 0;
    };

    Slice& slice(std::uint64_t t);
    SparseRow reduce_row(const Slice& s, const Polynomial& f, const std::vector<Exponent>* shift) const;

    RingPtr ring_;
    MonomialIdeal monomials_;
    std::vector<Polynomial> others_;
    // Only the most recent slice is kept; ranks are remembered per degree.
    std::optional<Slice> current_;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> dims_;
};

} // namespace fthr

#endif // FTHR_LINEAR_HPP
