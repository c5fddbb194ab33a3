#include "fthr/f_invariants.hpp"

#include "fthr/errors.hpp"
#include "fthr/ideal_calculus.hpp"
#include "fthr/limits.hpp"
#include "fthr/parallel.hpp"
#include "fthr/target.hpp"

#include <algorithm>

namespace fthr {

const char* lower_basis_name(LowerBasis b) noexcept {
    switch (b) {
    case LowerBasis::heuristic: return "heuristic";
    case LowerBasis::f_pure: return "f-pure";
    case LowerBasis::regular: return "regular";
    }
    return "heuristic";
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

bool in_maximal_bracket(const Polynomial& f, std::uint64_t q) noexcept {
    const std::size_t n = f.ring()->nvars();
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Exponent* r = f.record(k);
        bool hit = false;
        for (std::size_t v = 1; v <= n && !hit; ++v) hit = r[v] >= q;
        if (!hit) return false;
    }
    return true;
}

namespace {

std::uint64_t power_of_p(const QuotientContext& ctx, unsigned e) { return prime_power(ctx.characteristic(), e); }

Rational ratio(std::uint64_t num, std::uint64_t den) { return make_rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))); }

void require_context_ring(const Ideal& a, const QuotientContext& ctx) { require_same_ring(*a.ring(), *ctx.ring()); }

void require_proper_homogeneous(const Ideal& a, const char* what) {
    if (a.has_no_generators()) throw EmptyIdeal(std::string(what) + " is the zero ideal");
    if (!a.is_homogeneous()) throw NotHomogeneous(std::string(what) + " must be homogeneous");
    for (const Polynomial& g : a.generators())
        if (g.is_constant()) throw UnitIdeal(std::string(what) + " is the unit ideal");
}

void require_f_pure(const QuotientContext& ctx) {
    if (!fedder_is_f_pure(ctx)) throw NotFPure("the quotient ring is not F-pure");
}

// Validates the hypotheses of ν and returns μ(a) in R.
std::uint64_t validate_nu(const Ideal& a, const Ideal& J, const QuotientContext& ctx) {
    require_context_ring(a, ctx);
    require_context_ring(J, ctx);
    require_proper_homogeneous(a, "a");
    if (!J.is_homogeneous()) throw NotHomogeneous("J must be homogeneous");
    Ideal JI = in_quotient(J, ctx);
    if (JI.has_no_generators() || JI.is_unit()) {
        if (JI.has_no_generators()) throw NotInRadical("a is not contained in the radical of J = 0");
        throw UnitIdeal("J is the unit ideal of R");
    }
    for (const Polynomial& g : a.generators())
        if (!ideal_membership(g, JI) && !radical_membership(g, JI))
            throw NotInRadical("generator " + g.to_string() + " of a is not in the radical of J");
    auto mg = minimal_generators(a, &ctx);
    if (mg.mu == 0) throw EmptyIdeal("a is zero in R");
    return mg.mu;
}

// Largest t ≤ U with a^t ⊄ G, knowing a^0 ⊄ G and (by the power bound)
// a^(U+1) ⊆ G.
std::uint64_t largest_not_contained(TargetIdeal& G, PowerCache& a, std::uint64_t U) {
    if (a.is_maximal()) {
        // m^t ⊄ G exactly up to the top degree of S/G.
        if (auto top = G.top_degree(); top) return std::min(*top, U);
        return U;
    }
    std::uint64_t lo = 0, hi = U + 1;
    while (!G.contains_power(a, hi)) {
        // The bound guarantees containment; keep the search total regardless.
        lo = hi;
        hi = 2 * hi + 1;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (G.contains_power(a, mid)) hi = mid;
        else lo = mid;
    }
    return lo;
}

// max{t : a^t ⊄ J + I} by a linear scan from t = 0.
std::uint64_t nu_at_one(const Ideal& J, PowerCache& a, const QuotientContext& ctx) {
    TargetIdeal G(ctx, J);
    std::uint64_t t = 0;
    while (!G.contains_power(a, t + 1)) ++t;
    return t;
}

struct NuSetup {
    std::uint64_t mu;
    std::uint64_t nu1;
};

NuRecord nu_with(PowerCache& a, const NuSetup& setup, const Ideal& J, unsigned e, const QuotientContext& ctx) {
    const std::uint64_t q = power_of_p(ctx, e);
    const std::uint64_t U = q * (setup.nu1 + setup.mu);
    TargetIdeal G(ctx, bracket_power(J, e));
    NuRecord r;
    r.e = e;
    r.nu = largest_not_contained(G, a, U);
    r.ratio = ratio(r.nu, q);
    return r;
}

std::uint64_t power_budget(std::uint64_t mu, std::uint64_t q) {
    return std::min<std::uint64_t>(limits().max_power, 10 * q * std::max<std::uint64_t>(mu, 1));
}

// f^(q−1) = Π_i (f^(p−1))^[p^i]
Polynomial frobenius_colon_principal(const Polynomial& f, unsigned p, unsigned e) {
    Polynomial base = f.pow(p - 1);
    Polynomial r = Polynomial::constant(f.ring(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * frobenius_power(base, i);
    return r;
}

} // namespace

NuRecord nu(const Ideal& a, const Ideal& J, unsigned e, const QuotientContext& ctx) {
    const std::uint64_t mu = validate_nu(a, J, ctx);
    const std::string key = "nu/" + a.to_string() + "/" + J.to_string() + "/" + std::to_string(e);
    return ctx.memoized<NuRecord>(key, [&] {
        PowerCache pa(a, power_budget(mu, power_of_p(ctx, e)));
        NuSetup setup{mu, nu_at_one(J, pa, ctx)};
        return nu_with(pa, setup, J, e, ctx);
    });
}

ThresholdEstimate f_threshold(const Ideal& a, const Ideal& J, unsigned e_max, const QuotientContext& ctx) {
    if (e_max < 1) throw InvalidArgument("e_max must be at least 1");
    const std::uint64_t mu = validate_nu(a, J, ctx);
    const std::uint64_t p = ctx.characteristic();
    PowerCache pa(a, power_budget(mu, power_of_p(ctx, e_max)));
    NuSetup setup{mu, nu_at_one(J, pa, ctx)};

    ThresholdEstimate est;
    est.mu = mu;
    est.records.resize(e_max);
    parallel_indexed(e_max, ctx.options().workers,
                     [&](std::size_t i) { est.records[i] = nu_with(pa, setup, J, static_cast<unsigned>(i + 1), ctx); });

    bool first = true;
    for (const NuRecord& r : est.records) {
        const std::uint64_t q = power_of_p(ctx, r.e);
        Rational up = ratio(r.nu + mu, q);
        if (first || r.ratio > est.plain_lower) est.plain_lower = r.ratio;
        if (first || up < est.upper) est.upper = up;
        first = false;
    }
    est.upper_certified = true;
    if (ctx.is_polynomial_ring()) {
        // ν(pq) ≥ p·ν(q) + k with k = max{t : a^t ⊄ m^[p]}, hence
        // c ≥ (ν(q) + k/(p − 1))/q.
        const std::uint64_t k = nu_with(pa, {mu, 0}, Ideal::maximal(ctx.ring()), 1, ctx).nu;
        first = true;
        for (const NuRecord& r : est.records) {
            Rational v = (Rational(mpz_class(std::to_string(r.nu))) + ratio(k, p - 1)) / Rational(pow_z(p, r.e));
            v.canonicalize();
            if (first || v > est.lower) est.lower = v;
            first = false;
        }
        est.lower_basis = LowerBasis::regular;
        est.lower_certified = true;
    } else {
        est.lower = est.plain_lower;
        est.lower_certified = fedder_is_f_pure(ctx);
        est.lower_basis = est.lower_certified ? LowerBasis::f_pure : LowerBasis::heuristic;
    }
    est.width = est.upper - est.lower;
    return est;
}

bool fedder_is_f_pure(const QuotientContext& ctx) {
    return ctx.f_pure([&] {
        if (ctx.is_polynomial_ring()) return true;
        return !frobenius_colon(ctx, 1).empty();
    });
}

std::vector<Polynomial> frobenius_colon(const QuotientContext& ctx, unsigned e) {
    if (e < 1) throw InvalidArgument("Frobenius colon needs e ≥ 1");
    return ctx.memoized<std::vector<Polynomial>>("frobenius_colon/" + std::to_string(e), [&] {
        const RingPtr& S = ctx.ring();
        const std::uint64_t q = power_of_p(ctx, e);
        std::vector<Polynomial> out;
        if (ctx.is_polynomial_ring()) {
            out.push_back(Polynomial::constant(S, 1));
            return out;
        }
        const Ideal& I = ctx.defining_ideal();
        auto mg = minimal_generators(I);
        if (mg.mu == 1) {
            // (f^q : f) = (f^(q−1)) since S is a domain.
            Polynomial c = frobenius_colon_principal(mg.generators[0], ctx.characteristic(), e);
            if (!in_maximal_bracket(c, q)) out.push_back(c);
            return out;
        }
        Ideal C = colon_ideal(bracket_power(I, e), I);
        for (const Polynomial& g : C.generators())
            if (!in_maximal_bracket(g, q)) out.push_back(g);
        return out;
    });
}

Ideal splitting_ideal(const QuotientContext& ctx, unsigned e) {
    if (e < 1) throw InvalidArgument("splitting ideals are indexed by e ≥ 1");
    require_f_pure(ctx);
    return ctx.memoized<Ideal>("splitting_ideal/" + std::to_string(e), [&] {
        Ideal mq = bracket_power(Ideal::maximal(ctx.ring()), e);
        if (ctx.is_polynomial_ring()) return mq;
        const auto& C = frobenius_colon(ctx, e);
        Ideal Ie = colon_ideal(mq, Ideal(ctx.ring(), C));
        return Ideal(ctx.ring(), Ie.groebner().elements());
    });
}

std::uint64_t b_invariant(const Ideal& a, unsigned e, const QuotientContext& ctx) {
    if (e < 1) throw InvalidArgument("b is indexed by e ≥ 1");
    require_context_ring(a, ctx);
    require_proper_homogeneous(a, "a");
    require_f_pure(ctx);
    const std::uint64_t q = power_of_p(ctx, e);
    const auto& C = frobenius_colon(ctx, e);
    if (C.empty()) throw NotFPure("splitting ideal is the unit ideal");
    const std::size_t n = ctx.nvars();
    if (is_maximal_ideal(a)) {
        // A monomial h of degree t has h·w ∉ m^[q] for a term w with all
        // w_i < q iff h_i ≤ q − 1 − w_i, so the best t is Σ(q − 1 − w_i).
        std::uint64_t best = 0;
        bool any = false;
        for (const Polynomial& c : C)
            for (std::size_t k = 0; k < c.size(); ++k) {
                std::uint64_t room = 0;
                bool fits = true;
                for (std::size_t v = 0; v < n && fits; ++v) {
                    const Exponent w = c.exponent(k, v);
                    if (w >= q) fits = false;
                    else room += q - 1 - w;
                }
                if (!fits) continue;
                best = any ? std::max(best, room) : room;
                any = true;
            }
        return best;
    }
    std::uint64_t dmin = UINT64_MAX;
    for (const Polynomial& g : a.generators()) dmin = std::min<std::uint64_t>(dmin, *g.degree());
    // Every term of a^t·C has degree ≥ t·dmin; past n(q−1) it lies in m^[q].
    const std::uint64_t U = n * (q - 1) / dmin;
    PowerCache pa(a, U + 1);
    auto contained = [&](std::uint64_t t) {
        for (const Polynomial& h : pa.generators(t))
            for (const Polynomial& c : C)
                if (!in_maximal_bracket(h * c, q)) return false;
        return true;
    };
    std::uint64_t lo = 0, hi = U + 1;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (contained(mid)) hi = mid;
        else lo = mid;
    }
    return lo;
}

SplittingIdealRecord splitting_record(const Ideal& a, unsigned e, const QuotientContext& ctx, bool with_colength) {
    SplittingIdealRecord r{e, splitting_ideal(ctx, e), b_invariant(a, e, ctx), std::nullopt};
    if (with_colength) r.colength = TargetIdeal(ctx, r.ideal).colength();
    return r;
}

namespace {

// ν^{I_e}_a(p^s), or a note when the splitting ideal cannot be formed here.
UpperTerm splitting_term(const Ideal& a, unsigned e, unsigned s, std::uint64_t b_e, std::uint64_t mu,
                         const QuotientContext& ctx) {
    UpperTerm t;
    t.e = e;
    t.s = s;
    const std::uint64_t p = ctx.characteristic();
    if (s == 0) {
        t.nu = b_e;
    } else if (ctx.resolved_backend() != Backend::groebner) {
        t.note = "skipped: the splitting ideal is only formed with the groebner backend";
        return t;
    } else {
        try {
            Ideal Ie = splitting_ideal(ctx, e);
            t.nu = nu(a, Ie, s, ctx).nu;
        } catch (const SearchBudgetExceeded& ex) {
            t.note = std::string("skipped: ") + ex.what();
            return t;
        }
    }
    t.value = ratio(*t.nu + mu, prime_power(p, e + s));
    return t;
}

} // namespace

ThresholdEstimate fpt_estimate(const Ideal& a, unsigned e_max, unsigned s_max, const QuotientContext& ctx) {
    if (e_max < 1) throw InvalidArgument("e_max must be at least 1");
    require_context_ring(a, ctx);
    require_proper_homogeneous(a, "a");
    require_f_pure(ctx);
    const std::uint64_t p = ctx.characteristic();
    const std::uint64_t mu = minimal_generators(a, &ctx).mu;
    Ideal m = Ideal::maximal(ctx.ring());

    ThresholdEstimate est;
    est.mu = mu;
    est.records.resize(e_max);
    parallel_indexed(e_max, ctx.options().workers, [&](std::size_t i) {
        const unsigned e = static_cast<unsigned>(i + 1);
        const std::uint64_t b = b_invariant(a, e, ctx);
        est.records[i] = {e, b, ratio(b, prime_power(p, e))};
    });
    for (std::size_t i = 0; i < est.records.size(); ++i)
        if (i == 0 || est.records[i].ratio > est.plain_lower) est.plain_lower = est.records[i].ratio;

    if (ctx.is_polynomial_ring()) {
        const std::uint64_t k = est.records[0].nu;
        for (std::size_t i = 0; i < est.records.size(); ++i) {
            const NuRecord& r = est.records[i];
            Rational v = (Rational(mpz_class(std::to_string(r.nu))) + ratio(k, p - 1)) / Rational(pow_z(p, r.e));
            v.canonicalize();
            if (i == 0 || v > est.lower) est.lower = v;
        }
        est.lower_basis = LowerBasis::regular;
    } else {
        est.lower = est.plain_lower;
        est.lower_basis = LowerBasis::f_pure;
    }
    est.lower_certified = true;

    // e = 0 uses I_0 = m; e ≥ 1, s = 0 reuses b_e.
    for (unsigned s = 0; s <= s_max; ++s) {
        UpperTerm t;
        t.e = 0;
        t.s = s;
        t.nu = s == 0 ? 0 : nu(a, m, s, ctx).nu;
        t.value = ratio(*t.nu + mu, prime_power(p, s));
        est.upper_terms.push_back(t);
    }
    for (unsigned e = 1; e <= e_max; ++e)
        for (unsigned s = 0; s <= s_max; ++s)
            est.upper_terms.push_back(splitting_term(a, e, s, est.records[e - 1].nu, mu, ctx));
    bool first = true;
    for (const UpperTerm& t : est.upper_terms) {
        if (!t.value) continue;
        if (first || *t.value < est.upper) est.upper = *t.value;
        first = false;
    }
    est.upper_certified = true;
    est.width = est.upper - est.lower;
    return est;
}

FptComparison check_fpt_equals_cm(const Ideal& a, unsigned e_max, const QuotientContext& ctx, unsigned s_max) {
    require_f_pure(ctx);
    FptComparison out;
    Ideal m = Ideal::maximal(ctx.ring());
    out.cm = f_threshold(a, m, e_max, ctx);
    const std::uint64_t p = ctx.characteristic();
    const std::uint64_t mu = out.cm.mu;
    // Extra lower-bound slack in a polynomial ring, as in f_threshold.
    Rational slack = 0;
    if (ctx.is_polynomial_ring()) slack = ratio(nu(a, m, 1, ctx).nu, p - 1);

    bool all_consistent = true, any_violated = false;
    for (unsigned e = 1; e <= e_max; ++e) {
        FptComparisonRow row;
        row.e = e;
        const std::uint64_t b = b_invariant(a, e, ctx);
        bool first = true;
        for (unsigned s = 0; s <= s_max; ++s) {
            UpperTerm t = splitting_term(a, e, s, b, mu, ctx);
            if (t.nu) {
                // Undo the p^e normalisation: here the interval is for c^{I_e} itself.
                const Rational ps(pow_z(p, s));
                Rational lo = (Rational(mpz_class(std::to_string(*t.nu))) + slack) / ps;
                Rational hi = ratio(*t.nu + mu, prime_power(p, s));
                lo.canonicalize();
                if (first || lo > row.splitting_lower) row.splitting_lower = lo;
                if (first || hi < row.splitting_upper) row.splitting_upper = hi;
                first = false;
            }
            row.terms.push_back(t);
        }
        const Rational q(pow_z(p, e));
        row.scaled_lower = out.cm.lower * q;
        row.scaled_upper = out.cm.upper * q;
        if (row.splitting_upper < row.scaled_lower || row.scaled_upper < row.splitting_lower)
            row.verdict = Verdict::violated;
        else if (row.splitting_lower == row.splitting_upper && row.scaled_lower == row.scaled_upper &&
                 row.splitting_lower == row.scaled_lower)
            row.verdict = Verdict::consistent;
        else
            row.verdict = Verdict::inconclusive;
        any_violated |= row.verdict == Verdict::violated;
        all_consistent &= row.verdict == Verdict::consistent;
        out.rows.push_back(std::move(row));
    }
    out.verdict = any_violated ? Verdict::violated : all_consistent ? Verdict::consistent : Verdict::inconclusive;
    return out;
}

std::optional<unsigned> strong_f_regularity_witness(const Polynomial& c, unsigned e_max, const QuotientContext& ctx) {
    require_same_ring(*c.ring(), *ctx.ring());
    if (!c.homogeneity().homogeneous) throw NotHomogeneous("c must be homogeneous");
    if (c.is_zero() || ideal_membership(c, ctx.defining_ideal())) throw InvalidArgument("c must be nonzero in R");
    require_f_pure(ctx);
    for (unsigned e = 1; e <= e_max; ++e) {
        const std::uint64_t q = power_of_p(ctx, e);
        for (const Polynomial& g : frobenius_colon(ctx, e))
            if (!in_maximal_bracket(c * g, q)) return e;
    }
    return std::nullopt;
}

TMinus1Bound thm_tminus1_bound(const Ideal& J, unsigned e_max, const QuotientContext& ctx) {
    auto mg = minimal_generators(J, &ctx);
    TMinus1Bound r;
    r.D = mg.max_degree + 1;
    r.upper = f_threshold(J, J, e_max, ctx).upper;
    r.bound = Rational(mpz_class(std::to_string(r.D))) * (r.upper + 1);
    return r;
}

} // namespace fthr
