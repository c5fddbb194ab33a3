#include "fthr/hilbert.hpp"

#include "fthr/errors.hpp"
#include "fthr/limits.hpp"

#include <algorithm>
#include <numeric>

namespace fthr {

namespace {

using Mono = std::vector<Exponent>;

std::uint64_t mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), std::uint64_t{0}); }

bool mono_divides(const Mono& a, const Exponent* b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
        auto da = mono_degree(a), db = mono_degree(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Mono> out;
    for (Mono& g : gens) {
        bool redundant = false;
        for (const Mono& h : out)
            if (mono_divides(h, g.data())) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("Hilbert series coefficient overflow");
    return r;
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add_shifted(IntPoly a, const IntPoly& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = checked_add(a[i + shift], b[i]);
    trim(a);
    return a;
}

// Multiply by (1 − t^d).
IntPoly times_one_minus(const IntPoly& a, std::size_t d) {
    IntPoly r = a;
    r.resize(a.size() + d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + d] = checked_add(r[i + d], -a[i]);
    trim(r);
    return r;
}

IntPoly numerator_rec(const std::vector<Mono>& gens, std::size_t n) {
    if (gens.empty()) return {1};
    for (const Mono& g : gens)
        if (mono_degree(g) == 0) return {};
    // Variable occurring in the most generators.
    std::vector<std::size_t> count(n, 0);
    for (const Mono& g : gens)
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) ++count[i];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (count[i] > count[pivot]) pivot = i;
    if (count[pivot] <= 1) {
        IntPoly r{1};
        for (const Mono& g : gens) r = times_one_minus(r, mono_degree(g));
        return r;
    }
    std::vector<Exponent> mixed;
    for (const Mono& g : gens) {
        if (!g[pivot]) continue;
        if (mono_degree(g) == g[pivot]) continue;
        mixed.push_back(g[pivot]);
    }
    std::sort(mixed.begin(), mixed.end());
    const Exponent k = mixed[mixed.size() / 2];

    std::vector<Mono> plus;
    Mono pw(n, 0);
    pw[pivot] = k;
    plus.push_back(pw);
    for (const Mono& g : gens)
        if (g[pivot] < k) plus.push_back(g);
    std::vector<Mono> colon;
    for (Mono g : gens) {
        g[pivot] = g[pivot] > k ? g[pivot] - k : 0;
        colon.push_back(std::move(g));
    }
    IntPoly a = numerator_rec(minimalize(std::move(plus)), n);
    IntPoly b = numerator_rec(minimalize(std::move(colon)), n);
    return add_shifted(std::move(a), b, k);
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<std::vector<Exponent>> generators) : nvars_(nvars) {
    for (const Mono& g : generators)
        if (g.size() != nvars) throw InvalidArgument("monomial generator has the wrong length");
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [](const Mono& g) { return mono_degree(g) == 0; });
}

bool MonomialIdeal::contains(const Exponent* exps) const noexcept {
    for (const Mono& g : gens_)
        if (mono_divides(g, exps)) return true;
    return false;
}

std::optional<Exponent> MonomialIdeal::pure_power(std::size_t i) const noexcept {
    for (const Mono& g : gens_)
        if (g[i] && mono_degree(g) == g[i]) return g[i];
    return std::nullopt;
}

bool MonomialIdeal::is_artinian() const noexcept {
    if (is_unit()) return true;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (!pure_power(i)) return false;
    return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring()->nvars();
    std::vector<Mono> gens;
    for (const Polynomial& g : gb.elements()) {
        const Exponent* r = g.record(0);
        gens.emplace_back(r + 1, r + 1 + n);
    }
    return MonomialIdeal(n, std::move(gens));
}

IntPoly hilbert_numerator(const MonomialIdeal& M) { return numerator_rec(M.generators(), M.nvars()); }

HilbertData hilbert_data(const MonomialIdeal& M) {
    HilbertData h;
    h.nvars = M.nvars();
    h.numerator = hilbert_numerator(M);
    IntPoly q = h.numerator;
    std::size_t k = 0;
    while (!q.empty() && k < h.nvars && std::accumulate(q.begin(), q.end(), std::int64_t{0}) == 0) {
        // q(t) = (1 − t)·r(t): r_i = q_0 + … + q_i.
        IntPoly r(q.size() - 1);
        std::int64_t acc = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) r[i] = acc = checked_add(acc, q[i]);
        trim(r);
        q = std::move(r);
        ++k;
    }
    h.reduced = q;
    h.dim = q.empty() ? 0 : h.nvars - k;
    h.degree = std::accumulate(q.begin(), q.end(), std::int64_t{0});
    return h;
}

std::uint64_t HilbertData::hilbert_function(std::uint64_t t) const {
    if (reduced.empty()) return 0;
    if (dim == 0) return t < reduced.size() ? static_cast<std::uint64_t>(reduced[t]) : 0;
    // Σ_i r_i · C(t − i + dim − 1, dim − 1)
    __int128 total = 0;
    for (std::size_t i = 0; i < reduced.size() && i <= t; ++i) {
        __int128 binom = 1;
        const std::uint64_t top = t - i + dim - 1;
        for (std::uint64_t j = 1; j < dim; ++j) binom = binom * (top - j + 1) / j;
        total += binom * reduced[i];
    }
    return static_cast<std::uint64_t>(total);
}

std::uint64_t HilbertData::colength() const {
    if (dim != 0) throw NotZeroDimensional("quotient is not finite dimensional");
    return static_cast<std::uint64_t>(degree);
}

std::optional<std::uint64_t> HilbertData::top_degree() const {
    if (dim != 0) throw NotZeroDimensional("quotient is not finite dimensional");
    if (reduced.empty()) return std::nullopt;
    return reduced.size() - 1;
}

void for_each_standard_monomial(const MonomialIdeal& M, std::uint64_t t,
                                const std::function<void(const std::vector<Exponent>&)>& visit) {
    const std::size_t n = M.nvars();
    if (M.is_unit()) return;
    if (n == 0) {
        if (t == 0) visit({});
        return;
    }
    std::vector<std::uint64_t> cap(n, t);
    bool only_pure = true;
    for (const Mono& g : M.generators()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) ++support, var = i;
        if (support == 1) cap[var] = std::min<std::uint64_t>(cap[var], g[var] - 1);
        else only_pure = false;
    }
    // Suffix sums of caps decide feasibility of the remaining degree.
    std::vector<std::uint64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = std::min<std::uint64_t>(suffix[i + 1] + cap[i], t);
    Mono cur(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t rest) {
        if (i + 1 == n) {
            if (rest > cap[i]) return;
            cur[i] = static_cast<Exponent>(rest);
            if (only_pure || !M.contains(cur)) visit(cur);
            cur[i] = 0;
            return;
        }
        const std::uint64_t hi = std::min(cap[i], rest);
        const std::uint64_t need = rest > suffix[i + 1] ? rest - suffix[i + 1] : 0;
        for (std::uint64_t e = need; e <= hi; ++e) {
            cur[i] = static_cast<Exponent>(e);
            if (!only_pure && e > 0 && M.contains(cur)) break;
            rec(i + 1, rest - e);
        }
        cur[i] = 0;
    };
    rec(0, t);
}

std::uint64_t count_standard_monomials(const MonomialIdeal& M, std::uint64_t t) {
    std::uint64_t c = 0;
    for_each_standard_monomial(M, t, [&](const std::vector<Exponent>&) { ++c; });
    return c;
}

std::vector<Monomial> all_standard_monomials(const MonomialIdeal& M) {
    if (!M.is_artinian()) throw NotZeroDimensional("monomial ideal has no pure power of some variable");
    std::vector<Monomial> out;
    if (M.is_unit()) return out;
    const std::uint64_t top = artinian_top_degree(M);
    const std::uint64_t budget = limits().max_standard_monomials;
    for (std::uint64_t t = 0; t <= top; ++t) {
        for_each_standard_monomial(M, t, [&](const std::vector<Exponent>& e) {
            if (out.size() >= budget)
                throw SearchBudgetExceeded("more than " + std::to_string(budget) + " standard monomials");
            out.emplace_back(e);
        });
    }
    return out;
}

std::uint64_t artinian_top_degree(const MonomialIdeal& M) {
    auto top = hilbert_data(M).top_degree();
    if (!top) throw UnitIdeal("quotient by the unit ideal has no standard monomials");
    return *top;
}

} // namespace fthr
