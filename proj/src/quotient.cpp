#include "fthr/quotient.hpp"

#include "fthr/errors.hpp"

#include <map>
#include <mutex>

namespace fthr {

const char* backend_name(Backend b) noexcept {
    switch (b) {
    case Backend::automatic: return "auto";
    case Backend::groebner: return "groebner";
    case Backend::linear: return "linear";
    }
    return "auto";
}

Backend parse_backend(const std::string& name) {
    if (name == "auto") return Backend::automatic;
    if (name == "groebner") return Backend::groebner;
    if (name == "linear") return Backend::linear;
    throw InvalidArgument("unknown backend '" + name + "' (expected auto, groebner or linear)");
}

struct QuotientContext::State {
    std::mutex mu;
    std::optional<HilbertData> hilbert;
    std::optional<bool> f_pure;
    std::mutex memo_mu;
    std::map<std::string, std::shared_ptr<const void>> memo;
};

QuotientContext::QuotientContext(RingPtr ring, std::vector<Polynomial> defining, ComputeOptions options)
    : ring_(ring), defining_(Ideal::zero(ring)), options_(options), state_(std::make_shared<State>()) {
    std::vector<Polynomial> gens;
    for (Polynomial& g : defining) {
        if (g.is_zero()) continue;
        if (g.is_constant()) throw UnitIdeal("defining ideal contains a nonzero constant");
        if (!g.homogeneity().homogeneous) throw NotHomogeneous("defining ideal must be homogeneous: " + g.to_string());
        gens.push_back(std::move(g));
    }
    defining_ = Ideal(ring_, std::move(gens));
}

Backend QuotientContext::resolved_backend() const noexcept {
    if (options_.backend != Backend::automatic) return options_.backend;
    return nvars() > 5 ? Backend::linear : Backend::groebner;
}

const HilbertData& QuotientContext::hilbert() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (!state_->hilbert) {
        MonomialIdeal in = defining_.has_no_generators() ? MonomialIdeal(nvars())
                                                         : initial_ideal(defining_.groebner());
        state_->hilbert = hilbert_data(in);
    }
    return *state_->hilbert;
}

bool QuotientContext::f_pure(const std::function<bool()>& compute) const {
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        if (state_->f_pure) return *state_->f_pure;
    }
    bool v = compute();
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->f_pure = v;
    return v;
}

std::shared_ptr<const void> QuotientContext::memo_raw(
    const std::string& key, const std::function<std::shared_ptr<const void>()>& compute) const {
    {
        std::lock_guard<std::mutex> lock(state_->memo_mu);
        auto it = state_->memo.find(key);
        if (it != state_->memo.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate fill stores the same value.
    auto v = compute();
    std::lock_guard<std::mutex> lock(state_->memo_mu);
    return state_->memo.emplace(key, std::move(v)).first->second;
}

std::vector<Monomial> standard_monomials(const Ideal& I, const QuotientContext& ctx) {
    require_same_ring(*I.ring(), *ctx.ring());
    Ideal G = I + ctx.defining_ideal();
    MonomialIdeal in = G.has_no_generators() ? MonomialIdeal(ctx.nvars()) : initial_ideal(G.groebner());
    return all_standard_monomials(in);
}

DimensionDegree hilbert_dimension_degree(const QuotientContext& ctx) {
    const HilbertData& h = ctx.hilbert();
    return {h.dim, h.degree};
}

} // namespace fthr
