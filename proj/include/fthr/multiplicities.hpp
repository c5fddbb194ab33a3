#ifndef FTHR_MULTIPLICITIES_HPP
#define FTHR_MULTIPLICITIES_HPP

#include "fthr/f_invariants.hpp"
#include "fthr/groebner.hpp"
#include "fthr/quotient.hpp"
#include "fthr/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fthr {

// λ(R/JR), the number of standard monomials of J + I.
std::uint64_t colength(const Ideal& J, const QuotientContext& ctx);

struct LengthRow {
    unsigned e = 0;
    std::uint64_t length = 0;
    Rational ratio; // length / p^(e·d)
};

struct HKSequence {
    Ideal J;
    std::size_t d = 0;
    std::vector<LengthRow> rows;
};

HKSequence hilbert_kunz_sequence(const Ideal& J, unsigned e_max, const QuotientContext& ctx);

enum class SignatureMethod { direct, gorenstein };
const char* signature_method_name(SignatureMethod m) noexcept;
SignatureMethod parse_signature_method(const std::string& name);

struct FSignatureEstimate {
    SignatureMethod method = SignatureMethod::direct;
    std::size_t d = 0;
    // direct: λ(R/I_e); gorenstein: λ(R/J^[q]) − λ(R/a^[q]).
    std::vector<LengthRow> rows;
    // e(R)/d!
    Rational lower_bound_target;
    // gorenstein only: a = (J + I : m) and the two length columns
    std::optional<Ideal> socle_ideal;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> gorenstein_lengths;
};

// The direct rows use λ(S/I_e) = λ(S/m^[q]) − λ(S/(m^[q] + (I^[q] : I))), valid
// because S/m^[q] is Gorenstein, so I_e is never formed.
FSignatureEstimate f_signature_sequence(unsigned e_max, const QuotientContext& ctx, SignatureMethod method,
                                        const std::optional<Ideal>& J_sop = std::nullopt);

// Checks that J has dim R generators, nonzero homogeneous, and is m-primary in R.
void require_system_of_parameters(const Ideal& J, const QuotientContext& ctx);

// Top degree of R/JR.
std::uint64_t a0_socle_degree(const Ideal& J, const QuotientContext& ctx);

// Σ deg f_i − n for a complete intersection; the dimension must be n − c.
std::int64_t a_top_complete_intersection(const QuotientContext& ctx);

struct Relation {
    std::string name;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::pair<std::string, Rational>> witnesses;
    std::string note;
};

struct VerifyOptions {
    unsigned e_max = 1;
    unsigned s_max = 1;
    // m-primary ideal for the ν-formula; m when empty
    std::optional<Ideal> J;
    // a_d(R); computed for complete intersections when empty
    std::optional<std::int64_t> a_top;
    std::optional<Ideal> J_sop;
    SignatureMethod method = SignatureMethod::direct;
    bool signature = true;
};

struct InvariantReport {
    std::optional<std::int64_t> a_top;
    std::string a_top_source; // "complete intersection", "user-asserted" or "unavailable"
    ThresholdEstimate fpt;
    ThresholdEstimate cm;
    std::optional<FSignatureEstimate> signature;
    std::vector<Relation> relations;
    std::vector<std::string> footnotes;
    Verdict verdict = Verdict::inconclusive;
};

InvariantReport verify_relations(const QuotientContext& ctx, const VerifyOptions& options);

} // namespace fthr

#endif // FTHR_MULTIPLICITIES_HPP
