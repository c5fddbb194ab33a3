#include "fthr/ideal_calculus.hpp"

#include "fthr/errors.hpp"
#include "fthr/limits.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fthr {

namespace {

// Strict weak order on polynomials of one ring, for duplicate detection.
struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        auto ra = a.records(), rb = b.records();
        if (!std::equal(ra.begin(), ra.end(), rb.begin()))
            return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
        auto ca = a.coeffs(), cb = b.coeffs();
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
};

} // namespace

bool is_maximal_ideal(const Ideal& a) {
    const RingPtr& R = a.ring();
    if (a.has_no_generators()) return R->nvars() == 0;
    // Cheap structural check first: the generators are exactly the variables.
    std::vector<bool> seen(R->nvars(), false);
    bool only_vars = true;
    for (const Polynomial& g : a.generators()) {
        Polynomial m = g.monic();
        if (!m.is_monomial() || m.term_degree(0) != 1) {
            only_vars = false;
            break;
        }
        for (std::size_t v = 0; v < R->nvars(); ++v)
            if (m.exponent(0, v)) seen[v] = true;
    }
    if (only_vars) return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (!a.is_homogeneous()) return false;
    for (const Polynomial& g : a.generators())
        if (g.degree() == 0u) return false;
    for (std::size_t v = 0; v < R->nvars(); ++v)
        if (!ideal_membership(Polynomial::variable(R, v), a)) return false;
    return true;
}

PowerCache::PowerCache(Ideal base, std::optional<std::uint64_t> max_t)
    : base_(std::move(base)), max_t_(max_t.value_or(limits().max_power)) {
    std::set<Polynomial, PolyLess> seen;
    for (const Polynomial& g : base_.generators())
        if (seen.insert(g.monic()).second) base_gens_.push_back(g.monic());
    maximal_ = is_maximal_ideal(base_);
    Level zero;
    zero.gens.push_back(Polynomial::constant(base_.ring(), 1));
    zero.last.push_back(0);
    levels_.push_back(std::move(zero));
}

const std::vector<Polynomial>& PowerCache::generators(std::uint64_t t) {
    std::lock_guard<std::mutex> lock(mu_);
    if (t > max_t_)
        throw SearchBudgetExceeded("power a^" + std::to_string(t) + " exceeds the power budget " +
                                   std::to_string(max_t_));
    while (levels_.size() <= t) {
        const Level& prev = levels_.back();
        Level next;
        std::map<Polynomial, std::size_t, PolyLess> seen;
        for (std::size_t k = 0; k < prev.gens.size(); ++k) {
            for (std::size_t i = prev.last[k]; i < base_gens_.size(); ++i) {
                Polynomial prod = prev.gens[k] * base_gens_[i];
                auto [it, fresh] = seen.emplace(prod, next.gens.size());
                if (!fresh) {
                    // Keep the smaller index so no extension is lost.
                    auto& l = next.last[it->second];
                    l = std::min(l, i);
                    continue;
                }
                next.gens.push_back(std::move(prod));
                next.last.push_back(i);
            }
        }
        levels_.push_back(std::move(next));
    }
    return levels_[t].gens;
}

Ideal ideal_power(const Ideal& a, std::uint64_t t) {
    PowerCache cache(a, std::max<std::uint64_t>(t, limits().max_power));
    return cache.power(t);
}

Ideal bracket_power(const Ideal& J, unsigned e) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : J.generators()) gens.push_back(frobenius_power(g, e));
    return Ideal(J.ring(), std::move(gens));
}

Ideal in_quotient(const Ideal& J, const QuotientContext& ctx) {
    require_same_ring(*J.ring(), *ctx.ring());
    return J + ctx.defining_ideal();
}

MinimalGenerators minimal_generators(const Ideal& a, const QuotientContext* ctx) {
    if (!a.is_homogeneous()) throw NotHomogeneous("minimal generators need a homogeneous ideal");
    MinimalGenerators out;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.generators()) {
        if (ctx && ideal_membership(g, ctx->defining_ideal())) continue;
        gens.push_back(g.monic());
    }
    // Higher degrees are tested (and dropped) first.
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Polynomial& x, const Polynomial& y) { return *x.degree() > *y.degree(); });
    for (const Polynomial& g : gens)
        if (g.is_constant()) throw UnitIdeal("minimal generators of the unit ideal");
    std::vector<bool> kept(gens.size(), true);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Polynomial> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i && kept[j]) rest.push_back(gens[j]);
        if (ctx)
            for (const Polynomial& f : ctx->defining_ideal().generators()) rest.push_back(f);
        if (!rest.empty() && ideal_membership(gens[i], Ideal(a.ring(), rest))) kept[i] = false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!kept[i]) continue;
        out.generators.push_back(gens[i]);
        out.max_degree = std::max(out.max_degree, *gens[i].degree());
    }
    out.mu = out.generators.size();
    std::reverse(out.generators.begin(), out.generators.end());
    return out;
}

} // namespace fthr
