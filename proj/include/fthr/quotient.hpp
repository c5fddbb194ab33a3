#ifndef FTHR_QUOTIENT_HPP
#define FTHR_QUOTIENT_HPP

#include "fthr/groebner.hpp"
#include "fthr/hilbert.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fthr {

// How containment and colength questions are answered.
enum class Backend {
    automatic, // linear when there are more than five variables, else groebner
    groebner,
    linear,
};

const char* backend_name(Backend b) noexcept;
Backend parse_backend(const std::string& name);

struct ComputeOptions {
    Backend backend = Backend::automatic;
    // Independent per-e rows may run on this many threads.
    unsigned workers = 1;
};

// R = S/I for a homogeneous ideal I of the standard graded ring S.
class QuotientContext {
public:
    QuotientContext(RingPtr ring, std::vector<Polynomial> defining, ComputeOptions options = {});
    static QuotientContext polynomial_ring(RingPtr ring, ComputeOptions options = {}) {
        return QuotientContext(std::move(ring), {}, options);
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const Ideal& defining_ideal() const noexcept { return defining_; }
    Coeff characteristic() const noexcept { return ring_->characteristic(); }
    std::size_t nvars() const noexcept { return ring_->nvars(); }
    bool is_polynomial_ring() const noexcept { return defining_.has_no_generators(); }

    const ComputeOptions& options() const noexcept { return options_; }
    void set_options(ComputeOptions o) noexcept { options_ = o; }
    Backend resolved_backend() const noexcept;

    // Hilbert data of S/I from its initial ideal.
    const HilbertData& hilbert() const;
    std::size_t dim() const { return hilbert().dim; }
    std::int64_t multiplicity() const { return hilbert().degree; }

    // Memoises the F-purity verdict; compute runs at most once per context.
    bool f_pure(const std::function<bool()>& compute) const;

    // Per-context memo for derived objects (Frobenius colons, splitting
    // ideals). Copies of a context share it.
    template <class T, class F>
    const T& memoized(const std::string& key, F compute) const {
        auto p = memo_raw(key, [&] { return std::shared_ptr<const void>(std::make_shared<const T>(compute())); });
        return *static_cast<const T*>(p.get());
    }

private:
    struct State;

    std::shared_ptr<const void> memo_raw(const std::string& key,
                                         const std::function<std::shared_ptr<const void>()>& compute) const;

    RingPtr ring_;
    Ideal defining_;
    ComputeOptions options_;
    std::shared_ptr<State> state_;
};

// Monomials outside in(I + defining ideal): a K-basis of R/IR. Throws
// NotZeroDimensional unless every variable has a pure power in the
// initial ideal.
std::vector<Monomial> standard_monomials(const Ideal& I, const QuotientContext& ctx);

struct DimensionDegree {
    std::size_t dim;
    std::int64_t degree;
};
DimensionDegree hilbert_dimension_degree(const QuotientContext& ctx);

} // namespace fthr

#endif // FTHR_QUOTIENT_HPP
