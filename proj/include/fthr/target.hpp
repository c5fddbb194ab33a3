#ifndef FTHR_TARGET_HPP
#define FTHR_TARGET_HPP

#include "fthr/groebner.hpp"
#include "fthr/hilbert.hpp"
#include "fthr/ideal_calculus.hpp"
#include "fthr/linear.hpp"
#include "fthr/quotient.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fthr {

// The ideal G = (gens) + I of S, answering containment and graded-length
// questions about R/GR through the backend chosen by the context.
class TargetIdeal {
public:
    TargetIdeal(const QuotientContext& ctx, std::vector<Polynomial> gens);
    TargetIdeal(const QuotientContext& ctx, const Ideal& J) : TargetIdeal(ctx, J.generators()) {}

    Backend backend() const noexcept { return backend_; }
    const Ideal& ideal() const noexcept { return ideal_; }

    bool contains(const Polynomial& h);
    bool contains_all(const std::vector<Polynomial>& hs);
    // a^t ⊆ G
    bool contains_power(PowerCache& a, std::uint64_t t);

    // dim_K (S/G)_t
    std::uint64_t hilbert_function(std::uint64_t t);
    // Largest t with (S/G)_t ≠ 0; empty when G = S. Throws
    // NotZeroDimensional unless G is m-primary.
    std::optional<std::uint64_t> top_degree();
    std::uint64_t colength();

private:
    const GroebnerBasis& groebner();
    const HilbertData& hilbert();
    DegreeSliceEngine& engine();
    bool linear_has_artinian_part();

    Ideal ideal_;
    Backend backend_;
    bool homogeneous_;
    std::optional<HilbertData> hilbert_;
    std::unique_ptr<DegreeSliceEngine> engine_;
};

} // namespace fthr

#endif // FTHR_TARGET_HPP
