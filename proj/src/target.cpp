#include "fthr/target.hpp"

#include "fthr/errors.hpp"

#include <map>

namespace fthr {

TargetIdeal::TargetIdeal(const QuotientContext& ctx, std::vector<Polynomial> gens)
    : ideal_(Ideal(ctx.ring(), std::move(gens)) + ctx.defining_ideal()), backend_(ctx.resolved_backend()) {
    homogeneous_ = ideal_.is_homogeneous();
    // The slice engine only handles homogeneous input.
    if (!homogeneous_) backend_ = Backend::groebner;
}

const GroebnerBasis& TargetIdeal::groebner() { return ideal_.groebner(); }

const HilbertData& TargetIdeal::hilbert() {
    if (!hilbert_) {
        if (ideal_.has_no_generators()) hilbert_ = hilbert_data(MonomialIdeal(ideal_.ring()->nvars()));
        else hilbert_ = hilbert_data(initial_ideal(groebner()));
    }
    return *hilbert_;
}

DegreeSliceEngine& TargetIdeal::engine() {
    if (!engine_) engine_ = std::make_unique<DegreeSliceEngine>(ideal_.ring(), ideal_.generators());
    return *engine_;
}

bool TargetIdeal::linear_has_artinian_part() { return engine().monomial_part().is_artinian(); }

bool TargetIdeal::contains(const Polynomial& h) { return contains_all({h}); }

bool TargetIdeal::contains_all(const std::vector<Polynomial>& hs) {
    if (backend_ == Backend::linear) {
        std::map<std::uint64_t, std::vector<Polynomial>> by_degree;
        bool homogeneous = true;
        for (const Polynomial& h : hs) {
            if (h.is_zero()) continue;
            auto hom = h.homogeneity();
            if (!hom.homogeneous) {
                homogeneous = false;
                break;
            }
            by_degree[*hom.degree].push_back(h);
        }
        if (homogeneous) {
            for (auto& [d, group] : by_degree)
                if (!engine().contains(d, group)) return false;
            return true;
        }
    }
    if (ideal_.has_no_generators())
        return std::all_of(hs.begin(), hs.end(), [](const Polynomial& h) { return h.is_zero(); });
    for (const Polynomial& h : hs)
        if (!groebner().reduces_to_zero(h)) return false;
    return true;
}

bool TargetIdeal::contains_power(PowerCache& a, std::uint64_t t) {
    require_same_ring(*a.base().ring(), *ideal_.ring());
    if (a.is_maximal() && homogeneous_) return hilbert_function(t) == 0;
    return contains_all(a.generators(t));
}

std::uint64_t TargetIdeal::hilbert_function(std::uint64_t t) {
    if (!homogeneous_) throw NotHomogeneous("graded pieces need a homogeneous ideal");
    if (backend_ == Backend::linear) return engine().quotient_dimension(t);
    return hilbert().hilbert_function(t);
}

std::optional<std::uint64_t> TargetIdeal::top_degree() {
    if (backend_ == Backend::linear && linear_has_artinian_part()) {
        auto top = engine().monomial_top_degree();
        if (!top) return std::nullopt;
        // S/G is standard graded, so its nonzero pieces form an initial segment.
        for (std::uint64_t t = *top + 1; t-- > 0;)
            if (engine().quotient_dimension(t) > 0) return t;
        return std::nullopt;
    }
    return hilbert().top_degree();
}

std::uint64_t TargetIdeal::colength() {
    if (backend_ == Backend::linear && linear_has_artinian_part()) {
        auto top = engine().monomial_top_degree();
        if (!top) return 0;
        std::uint64_t total = 0;
        for (std::uint64_t t = 0; t <= *top; ++t) {
            std::uint64_t h = engine().quotient_dimension(t);
            if (h == 0) break;
            total += h;
        }
        return total;
    }
    return hilbert().colength();
}

} // namespace fthr
