#include "fthr/multiplicities.hpp"

#include "fthr/errors.hpp"
#include "fthr/ideal_calculus.hpp"
#include "fthr/limits.hpp"
#include "fthr/parallel.hpp"
#include "fthr/target.hpp"

namespace fthr {

namespace {

Rational length_ratio(std::uint64_t length, std::uint64_t p, std::uint64_t e, std::size_t d) {
    return make_rational(mpz_class(std::to_string(length)), pow_z(p, e * d));
}

Rational integer(std::int64_t v) { return Rational(mpz_class(std::to_string(v))); }

void require_m_primary(const Ideal& J, const QuotientContext& ctx) {
    require_same_ring(*J.ring(), *ctx.ring());
    if (!J.is_homogeneous()) throw NotHomogeneous("J must be homogeneous");
    Ideal G = in_quotient(J, ctx);
    const RingPtr& R = ctx.ring();
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        Polynomial x = Polynomial::variable(R, i);
        if (!radical_membership(x, G)) throw NotZeroDimensional("J + I is not primary to the irrelevant ideal");
    }
}

// λ(S/m^[q]) − λ(S/(m^[q] + C)) with C = (I^[q] : I).
std::uint64_t splitting_colength(const QuotientContext& ctx, unsigned e) {
    const std::uint64_t q = prime_power(ctx.characteristic(), e);
    const std::size_t n = ctx.nvars();
    mpz_class full = pow_z(q, n);
    if (full > mpz_class(std::to_string(limits().max_frobenius_length)))
        throw SearchBudgetExceeded("λ(S/m^[" + std::to_string(q) + "]) = " + full.get_str() +
                                   " is above the Frobenius length budget");
    const std::uint64_t total = full.get_ui();
    const auto& C = frobenius_colon(ctx, e);
    if (C.empty()) return 0;
    std::vector<Polynomial> gens = bracket_power(Ideal::maximal(ctx.ring()), e).generators();
    gens.insert(gens.end(), C.begin(), C.end());
    QuotientContext S = QuotientContext::polynomial_ring(ctx.ring(), ctx.options());
    return total - TargetIdeal(S, gens).colength();
}

} // namespace

std::uint64_t colength(const Ideal& J, const QuotientContext& ctx) {
    require_same_ring(*J.ring(), *ctx.ring());
    if (!J.is_homogeneous()) throw NotHomogeneous("J must be homogeneous");
    return TargetIdeal(ctx, J).colength();
}

HKSequence hilbert_kunz_sequence(const Ideal& J, unsigned e_max, const QuotientContext& ctx) {
    if (e_max < 1) throw InvalidArgument("e_max must be at least 1");
    require_m_primary(J, ctx);
    HKSequence out{J, ctx.dim(), {}};
    const std::uint64_t p = ctx.characteristic();
    out.rows.resize(e_max);
    parallel_indexed(e_max, ctx.options().workers, [&](std::size_t i) {
        const unsigned e = static_cast<unsigned>(i + 1);
        const std::uint64_t l = colength(bracket_power(J, e), ctx);
        out.rows[i] = {e, l, length_ratio(l, p, e, out.d)};
    });
    return out;
}

const char* signature_method_name(SignatureMethod m) noexcept {
    return m == SignatureMethod::gorenstein ? "gorenstein" : "direct";
}

SignatureMethod parse_signature_method(const std::string& name) {
    if (name == "direct") return SignatureMethod::direct;
    if (name == "gorenstein") return SignatureMethod::gorenstein;
    throw InvalidArgument("unknown F-signature method '" + name + "' (direct, gorenstein)");
}

void require_system_of_parameters(const Ideal& J, const QuotientContext& ctx) {
    require_same_ring(*J.ring(), *ctx.ring());
    std::size_t count = 0;
    for (const Polynomial& g : J.generators()) {
        if (!g.homogeneity().homogeneous) throw NotSystemOfParameters("generator " + g.to_string() + " is not homogeneous");
        if (g.is_zero() || ideal_membership(g, ctx.defining_ideal()))
            throw NotSystemOfParameters("generator " + g.to_string() + " is zero in R");
        if (g.is_constant()) throw NotSystemOfParameters("generator " + g.to_string() + " is a unit");
        ++count;
    }
    if (count != ctx.dim())
        throw NotSystemOfParameters(std::to_string(count) + " generators given, dim R = " + std::to_string(ctx.dim()));
    try {
        require_m_primary(J, ctx);
    } catch (const NotZeroDimensional&) {
        throw NotSystemOfParameters("J is not primary to the irrelevant ideal of R");
    }
}

FSignatureEstimate f_signature_sequence(unsigned e_max, const QuotientContext& ctx, SignatureMethod method,
                                        const std::optional<Ideal>& J_sop) {
    if (e_max < 1) throw InvalidArgument("e_max must be at least 1");
    if (!fedder_is_f_pure(ctx)) throw NotFPure("the quotient ring is not F-pure");
    FSignatureEstimate out;
    out.method = method;
    out.d = ctx.dim();
    mpz_class fact = 1;
    for (std::size_t i = 2; i <= out.d; ++i) fact *= static_cast<unsigned long>(i);
    out.lower_bound_target = make_rational(mpz_class(std::to_string(ctx.multiplicity())), fact);
    const std::uint64_t p = ctx.characteristic();
    out.rows.resize(e_max);

    if (method == SignatureMethod::direct) {
        parallel_indexed(e_max, ctx.options().workers, [&](std::size_t i) {
            const unsigned e = static_cast<unsigned>(i + 1);
            const std::uint64_t l = splitting_colength(ctx, e);
            out.rows[i] = {e, l, length_ratio(l, p, e, out.d)};
        });
        return out;
    }

    if (!J_sop) throw NotSystemOfParameters("the gorenstein method needs a system of parameters");
    require_system_of_parameters(*J_sop, ctx);
    Ideal a = colon_ideal(in_quotient(*J_sop, ctx), Ideal::maximal(ctx.ring()));
    out.socle_ideal = a;
    out.gorenstein_lengths.resize(e_max);
    parallel_indexed(e_max, ctx.options().workers, [&](std::size_t i) {
        const unsigned e = static_cast<unsigned>(i + 1);
        const std::uint64_t lj = colength(bracket_power(*J_sop, e), ctx);
        const std::uint64_t la = colength(bracket_power(a, e), ctx);
        if (la > lj) throw InvalidArgument("λ(R/a^[q]) exceeds λ(R/J^[q]); R is not Gorenstein");
        out.gorenstein_lengths[i] = {lj, la};
        out.rows[i] = {e, lj - la, length_ratio(lj - la, p, e, out.d)};
    });
    return out;
}

std::uint64_t a0_socle_degree(const Ideal& J, const QuotientContext& ctx) {
    require_m_primary(J, ctx);
    auto top = TargetIdeal(ctx, J).top_degree();
    if (!top) throw UnitIdeal("R/JR is zero");
    return *top;
}

std::int64_t a_top_complete_intersection(const QuotientContext& ctx) {
    const auto& gens = ctx.defining_ideal().generators();
    const std::int64_t n = static_cast<std::int64_t>(ctx.nvars());
    const std::int64_t c = static_cast<std::int64_t>(gens.size());
    if (static_cast<std::int64_t>(ctx.dim()) != n - c)
        throw NotCompleteIntersection("dim R = " + std::to_string(ctx.dim()) + " but n − c = " + std::to_string(n - c));
    std::int64_t sum = 0;
    for (const Polynomial& f : gens) sum += static_cast<std::int64_t>(*f.degree());
    return sum - n;
}

namespace {

Verdict combine(const std::vector<Relation>& rs) {
    bool any_violated = false, all_verified = !rs.empty();
    for (const Relation& r : rs) {
        any_violated |= r.verdict == Verdict::violated;
        all_verified &= r.verdict == Verdict::verified;
    }
    return any_violated ? Verdict::violated : all_verified ? Verdict::verified : Verdict::inconclusive;
}

} // namespace

InvariantReport verify_relations(const QuotientContext& ctx, const VerifyOptions& options) {
    if (!fedder_is_f_pure(ctx)) throw NotFPure("the quotient ring is not F-pure");
    InvariantReport rep;
    const RingPtr& R = ctx.ring();
    const std::uint64_t p = ctx.characteristic();
    Ideal m = Ideal::maximal(R);

    if (options.a_top) {
        rep.a_top = options.a_top;
        rep.a_top_source = "user-asserted";
    } else {
        try {
            rep.a_top = a_top_complete_intersection(ctx);
            rep.a_top_source = "complete intersection";
        } catch (const NotCompleteIntersection&) {
            rep.a_top_source = "unavailable";
        }
    }

    rep.fpt = fpt_estimate(m, options.e_max, options.s_max, ctx);
    rep.cm = f_threshold(m, m, options.e_max, ctx);

    // fpt ≤ −a_d ≤ c^m
    Relation chain{"fpt_le_minus_a_le_cm", Verdict::inconclusive, {}, {}};
    chain.witnesses = {{"fpt_lower", rep.fpt.lower}, {"fpt_upper", rep.fpt.upper},
                       {"cm_lower", rep.cm.lower},   {"cm_upper", rep.cm.upper}};
    bool pinned = false, equality_certified = false;
    if (rep.a_top) {
        const Rational minus_a = integer(-*rep.a_top);
        chain.witnesses.insert(chain.witnesses.begin(), {"-a_d", minus_a});
        if (rep.fpt.lower > minus_a || rep.cm.upper < minus_a || rep.fpt.lower > rep.cm.upper)
            chain.verdict = Verdict::violated;
        else if (rep.fpt.upper <= minus_a && minus_a <= rep.cm.lower)
            chain.verdict = Verdict::verified;
        pinned = rep.fpt.contains(minus_a) && rep.cm.contains(minus_a);
        equality_certified = rep.fpt.lower == minus_a && rep.fpt.upper == minus_a && rep.cm.lower == minus_a &&
                             rep.cm.upper == minus_a;
        if (chain.verdict == Verdict::inconclusive) chain.note = "intervals overlap -a_d without separating it";
    } else {
        chain.note = "a_d unknown: not a complete intersection and no value supplied";
    }
    rep.relations.push_back(chain);

    // ν^J_m(q) = (a_0(R/J) − a_d)·q + a_d
    Relation formula{"nu_formula", Verdict::inconclusive, {}, {}};
    if (!rep.a_top) {
        formula.note = "a_d unknown";
    } else if (!pinned) {
        formula.note = "-a_d is not inside both threshold intervals; the equality case is not in view";
    } else {
        const Ideal J = options.J ? *options.J : m;
        const std::int64_t a0 = static_cast<std::int64_t>(a0_socle_degree(J, ctx));
        const std::int64_t ad = *rep.a_top;
        formula.witnesses.push_back({"a_0(R/J)", integer(a0)});
        bool all_match = true;
        for (unsigned e = 1; e <= options.e_max; ++e) {
            const std::int64_t q = static_cast<std::int64_t>(prime_power(p, e));
            const std::int64_t predicted = (a0 - ad) * q + ad;
            const std::int64_t got = static_cast<std::int64_t>(nu(m, J, e, ctx).nu);
            formula.witnesses.push_back({"nu(e=" + std::to_string(e) + ")", integer(got)});
            formula.witnesses.push_back({"predicted(e=" + std::to_string(e) + ")", integer(predicted)});
            all_match &= got == predicted;
        }
        if (all_match) formula.verdict = Verdict::verified;
        else if (equality_certified) formula.verdict = Verdict::violated;
        else formula.note = "mismatch, but fpt = c^m = -a_d is not certified";
    }
    rep.relations.push_back(formula);

    // s_e ≥ e(R)/d!
    Relation sig{"signature_bound", Verdict::inconclusive, {}, {}};
    if (!options.signature) {
        sig.note = "not requested";
    } else {
        try {
            rep.signature = f_signature_sequence(options.e_max, ctx, options.method, options.J_sop);
            sig.witnesses.push_back({"target", rep.signature->lower_bound_target});
            bool all_clear = true;
            for (const LengthRow& r : rep.signature->rows) {
                sig.witnesses.push_back({"s(e=" + std::to_string(r.e) + ")", r.ratio});
                all_clear &= r.ratio >= rep.signature->lower_bound_target;
            }
            if (all_clear) sig.verdict = Verdict::verified;
            else if (equality_certified) sig.verdict = Verdict::violated;
            else sig.note = "below the target at finite e while fpt = c^m is not certified";
        } catch (const SearchBudgetExceeded& ex) {
            sig.note = std::string("budget exceeded: ") + ex.what();
        }
    }
    rep.relations.push_back(sig);

    rep.footnotes.push_back(
        "The Gorenstein shortcut uses s(R) = e_HK(J) - e_HK(a) with a = (J : m); one proof line states "
        "s(R) = e_HK(a) - e_HK(J), which has the opposite sign since a contains J.");
    if (rep.a_top_source == "user-asserted") rep.footnotes.push_back("a_d was supplied by the user and not checked.");
    rep.verdict = combine(rep.relations);
    return rep;
}

} // namespace fthr
