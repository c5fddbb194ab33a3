#ifndef FTHR_F_INVARIANTS_HPP
#define FTHR_F_INVARIANTS_HPP

#include "fthr/groebner.hpp"
#include "fthr/quotient.hpp"
#include "fthr/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fthr {

// ν = max{t : a^t ⊄ J^[p^e]} in R, with ratio ν/p^e.
struct NuRecord {
    unsigned e = 0;
    std::uint64_t nu = 0;
    Rational ratio;
};

// Why a lower bound holds.
enum class LowerBasis {
    heuristic, // no certificate; the ring failed the F-purity test
    f_pure,    // ratios are non-decreasing because R is F-pure
    regular,   // polynomial ring: flatness of Frobenius gives the sharper bound
};
const char* lower_basis_name(LowerBasis b) noexcept;

// One candidate upper bound (ν^{I_e}_a(p^s) + μ)/p^(e+s) for the F-pure threshold.
struct UpperTerm {
    unsigned e = 0;
    unsigned s = 0;
    std::optional<std::uint64_t> nu;
    std::optional<Rational> value;
    std::string note; // reason when skipped
};

struct ThresholdEstimate {
    std::vector<NuRecord> records;
    std::uint64_t mu = 0;
    // max over records of ν/p^e
    Rational plain_lower;
    Rational lower;
    bool lower_certified = false;
    LowerBasis lower_basis = LowerBasis::heuristic;
    Rational upper;
    bool upper_certified = true;
    Rational width;
    // Only filled by fpt_estimate.
    std::vector<UpperTerm> upper_terms;

    bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

NuRecord nu(const Ideal& a, const Ideal& J, unsigned e, const QuotientContext& ctx);
ThresholdEstimate f_threshold(const Ideal& a, const Ideal& J, unsigned e_max, const QuotientContext& ctx);

// Fedder's criterion (I^[p] : I) ⊄ m^[p]; memoised in the context.
bool fedder_is_f_pure(const QuotientContext& ctx);

// Generators of (I^[q] : I) that are not already in m^[q], q = p^e. For
// I = (f) this is f^(q−1).
std::vector<Polynomial> frobenius_colon(const QuotientContext& ctx, unsigned e);

// I_e = (m^[q] : (I^[q] : I)) in S, returned by its reduced Gröbner basis.
Ideal splitting_ideal(const QuotientContext& ctx, unsigned e);

struct SplittingIdealRecord {
    unsigned e = 0;
    Ideal ideal;
    std::uint64_t b = 0;
    std::optional<std::uint64_t> colength;
};
SplittingIdealRecord splitting_record(const Ideal& a, unsigned e, const QuotientContext& ctx, bool with_colength);

// max{t : a^t ⊄ I_e}, decided without forming I_e: a^t ⊆ I_e iff
// a^t·(I^[q] : I) ⊆ m^[q].
std::uint64_t b_invariant(const Ideal& a, unsigned e, const QuotientContext& ctx);

ThresholdEstimate fpt_estimate(const Ideal& a, unsigned e_max, unsigned s_max, const QuotientContext& ctx);

enum class Verdict { consistent, verified, violated, inconclusive };
const char* verdict_name(Verdict v) noexcept;

struct FptComparisonRow {
    unsigned e = 0;
    // certified interval for c^{I_e}(a)
    Rational splitting_lower, splitting_upper;
    // p^e times the certified interval for c^m(a)
    Rational scaled_lower, scaled_upper;
    std::vector<UpperTerm> terms;
    Verdict verdict = Verdict::inconclusive;
};

struct FptComparison {
    Verdict verdict = Verdict::inconclusive;
    ThresholdEstimate cm;
    std::vector<FptComparisonRow> rows;
};

FptComparison check_fpt_equals_cm(const Ideal& a, unsigned e_max, const QuotientContext& ctx, unsigned s_max = 1);

// Smallest e ≤ e_max with c ∉ I_e. Finding none proves nothing.
std::optional<unsigned> strong_f_regularity_witness(const Polynomial& c, unsigned e_max, const QuotientContext& ctx);

struct TMinus1Bound {
    std::uint64_t D = 0;
    Rational upper;
    Rational bound;
};
// D·(upper + 1) with D one more than the top minimal generator degree of J
// and upper the certified bound for c^J(J).
TMinus1Bound thm_tminus1_bound(const Ideal& J, unsigned e_max, const QuotientContext& ctx);

// True when every term of f has some exponent ≥ q, i.e. f ∈ m^[q].
bool in_maximal_bracket(const Polynomial& f, std::uint64_t q) noexcept;

} // namespace fthr

#endif // FTHR_F_INVARIANTS_HPP
