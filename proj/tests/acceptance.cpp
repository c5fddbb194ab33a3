// One PASS/FAIL line per acceptance criterion. The diagonal hypersurface in
// eight variables runs only with --slow.

#include "fthr/cli.hpp"
#include "fthr/errors.hpp"
#include "fthr/f_invariants.hpp"
#include "fthr/ideal_calculus.hpp"
#include "fthr/multiplicities.hpp"
#include "dense_oracle.hpp"
#include "fixtures.hpp"

#include <json.hpp>

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace fthr;
using namespace fthr::testing;

namespace {

// Wall-clock budgets in seconds, per criterion.
constexpr double budget_regular = 5;
constexpr double budget_fedder = 5;
constexpr double budget_cone = 120;
constexpr double budget_diagonal = 1800;
constexpr double budget_signature = 300;
constexpr double budget_properties = 600;
constexpr double budget_oracle = 300;

Rational q(long n, unsigned long d) { return make_rational(n, d); }

struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string str(const Rational& r) { return r.get_str(); }

std::string interval(const ThresholdEstimate& t) { return "[" + str(t.lower) + ", " + str(t.upper) + "]"; }

void regular_baseline(Checker& c) {
    QuotientContext ctx = plane5();
    Ideal m = Ideal::maximal(ctx.ring());
    c.expect(nu(m, m, 1, ctx).nu == 8, "nu(5) != 8");
    c.expect(nu(m, m, 2, ctx).nu == 48, "nu(25) != 48");
    ThresholdEstimate t = f_threshold(m, m, 2, ctx);
    c.expect(t.lower == 2 && t.upper == 2 && t.lower_certified && t.upper_certified,
             "threshold interval " + interval(t) + " is not certified [2, 2]");
    c.expect(t.records.back().ratio + q(2, 25) == t.upper, "upper != 48/25 + 2/25");
    ThresholdEstimate f = fpt_estimate(m, 2, 1, ctx);
    c.expect(f.contains(2), "fpt interval " + interval(f) + " misses 2");
    FSignatureEstimate s = f_signature_sequence(2, ctx, SignatureMethod::direct);
    for (const LengthRow& r : s.rows) c.expect(r.ratio == 1, "s_" + std::to_string(r.e) + " = " + str(r.ratio));
    c.expect(hilbert_dimension_degree(ctx).degree == 1, "e(R) != 1");
    c.expect(a_top_complete_intersection(ctx) == -2, "a_d != -2");
}

void fedder_examples(Checker& c) {
    c.expect(fedder_is_f_pure(cone3()), "quadric cone not F-pure");
    c.expect(!fedder_is_f_pure(nonpure2()), "x^2 + y^2 over F_2 reported F-pure");
    c.expect(fedder_is_f_pure(diagonal7()), "diagonal hypersurface not F-pure");
}

void determinantal(Checker& c) {
    QuotientContext ctx = cone3();
    Ideal m = Ideal::maximal(ctx.ring());
    c.expect(nu(m, m, 1, ctx).nu == 4, "nu(3) != 4");
    c.expect(nu(m, m, 2, ctx).nu == 16, "nu(9) != 16");
    ThresholdEstimate t = f_threshold(m, m, 2, ctx);
    c.expect(t.lower_certified && t.upper_certified, "c-interval not certified");
    c.expect(t.contains(2), "c-interval " + interval(t) + " misses 2");
    c.expect(t.upper - t.lower <= q(4, 9), "c-interval width " + str(t.upper - t.lower) + " > 4/9");
    ThresholdEstimate f = fpt_estimate(m, 1, 1, ctx);
    c.expect(f.contains(2), "fpt interval " + interval(f) + " misses 2");
    VerifyOptions opt;
    opt.e_max = 2;
    opt.signature = false;
    InvariantReport rep = verify_relations(ctx, opt);
    c.expect(rep.a_top && *rep.a_top == -2, "a_top != -2");
    const Relation& chain = rep.relations.at(0);
    c.expect(chain.name == "fpt_le_minus_a_le_cm", "first relation is " + chain.name);
    c.expect(chain.verdict != Verdict::violated, "fpt <= -a_d <= c^m reported violated");
    c.expect(rep.fpt.contains(2) && rep.cm.contains(2),
             "verify intervals fpt " + interval(rep.fpt) + " c " + interval(rep.cm) + " miss 2");
}

void diagonal(Checker& c) {
    QuotientContext ctx = diagonal7();
    Ideal m = Ideal::maximal(ctx.ring());
    c.expect(fedder_is_f_pure(ctx), "not F-pure");
    c.expect(nu(m, m, 1, ctx).nu == 36, "nu(7) != 36");
    ThresholdEstimate t = f_threshold(m, m, 1, ctx);
    c.expect(t.lower_certified && t.upper_certified, "c-interval not certified");
    c.expect(t.lower == q(36, 7) && t.upper == q(44, 7), "c-interval " + interval(t) + " != [36/7, 44/7]");
    c.expect(t.contains(6), "c-interval misses 6");
    const std::uint64_t b = b_invariant(m, 1, ctx);
    c.expect(34 <= b && b <= 42, "b(7) = " + std::to_string(b) + " outside [34, 42]");
    c.expect(a_top_complete_intersection(ctx) == -6, "a_top != -6");
    c.expect(hilbert_dimension_degree(ctx).degree == 2, "e(R) != 2");

    const std::string file = std::string(FTHR_TEST_DATA) + "/diagonal7.fthr";
    const char* argv[] = {"fthr", "verify", file.c_str(), "--emax", "1", "--no-timing"};
    std::ostringstream out, err;
    const int code = run_cli(6, argv, out, err);
    c.expect(code == 0, "verify exit code " + std::to_string(code));
    auto doc = nlohmann::ordered_json::parse(out.str());
    bool row36 = false;
    for (const auto& res : doc["results"])
        if (res["op"] == "threshold") row36 = res["rows"][0]["nu"] == 36;
    c.expect(row36, "verify threshold row is not 36");
    bool formula = false;
    for (const auto& rel : doc["relations"])
        if (rel["name"] == "nu_formula") formula = rel["verdict"] == "verified";
    c.expect(formula, "nu_formula not verified");
}

void signature_bound(Checker& c) {
    QuotientContext ctx = cone3();
    Ideal J = cone_sop(ctx.ring());
    const std::int64_t eR = hilbert_dimension_degree(ctx).degree;
    c.expect(eR == 2, "e(R) = " + std::to_string(eR));
    c.expect(colength(J, ctx) == 2, "lambda(R/J_sop) = " + std::to_string(colength(J, ctx)));
    FSignatureEstimate s = f_signature_sequence(2, ctx, SignatureMethod::gorenstein, J);
    c.expect(s.lower_bound_target == q(1, 3), "target " + str(s.lower_bound_target));
    c.expect(s.rows.size() == 2, "expected two rows");
    for (const LengthRow& r : s.rows)
        c.expect(r.ratio >= q(1, 3), "s_" + std::to_string(r.e) + " = " + str(r.ratio) + " < 1/3");
}

bool record_exact(const NuRecord& r, const Ideal& a, const Ideal& J, const QuotientContext& ctx) {
    Ideal target = in_quotient(bracket_power(J, r.e), ctx);
    return !ideal_contains(target, ideal_power(a, r.nu)) && ideal_contains(target, ideal_power(a, r.nu + 1)) &&
           r.ratio == make_rational(static_cast<long>(r.nu), prime_power(ctx.characteristic(), r.e));
}

void properties(Checker& c) {
    std::vector<std::function<bool()>> exactness;
    const std::vector<Case> corpus = random_corpus(0xf1, 20);
    // (a) ν(p^(e1+e2))/p^(e1+e2) ≤ ν(p^e1)/p^e1 + μ/p^e1
    for (const Case& k : corpus) {
        ThresholdEstimate t = f_threshold(k.a, k.J, 2, k.ctx);
        std::vector<NuRecord> all = {nu(k.a, k.J, 0, k.ctx), t.records[0], t.records[1]};
        const Rational mu(static_cast<long>(t.mu));
        for (unsigned e1 = 0; e1 <= 2; ++e1)
            for (unsigned e2 = 0; e1 + e2 <= 2; ++e2)
                c.expect(all[e1 + e2].ratio <= all[e1].ratio + mu / Rational(pow_z(k.ctx.characteristic(), e1)),
                         "(a) lemma inequality fails for a = " + k.a.to_string() + ", J = " + k.J.to_string());
        for (const NuRecord& r : all) exactness.push_back([r, k] { return record_exact(r, k.a, k.J, k.ctx); });
    }
    // (b)
    for (const Case& k : corpus)
        for (unsigned e = 0; e <= 1; ++e)
            c.expect(nu(k.a, bracket_power(k.J, 1), e, k.ctx).nu == nu(k.a, k.J, e + 1, k.ctx).nu,
                     "(b) bracket shift fails for J = " + k.J.to_string());
    // (c)
    for (const QuotientContext& ctx : f_pure_fixtures())
        c.expect(ideal_contains(splitting_ideal(ctx, 2), bracket_power(splitting_ideal(ctx, 1), 1)),
                 "(c) I_1^[p] not in I_2 for " + ctx.defining_ideal().to_string());
    // (d)
    for (const Case& k : corpus) {
        Ideal m = Ideal::maximal(k.ctx.ring());
        for (unsigned e = 0; e <= 1; ++e)
            c.expect(a0_socle_degree(bracket_power(k.J, e), k.ctx) == nu(m, k.J, e, k.ctx).nu,
                     "(d) a_0 != nu for J = " + k.J.to_string());
    }
    for (const QuotientContext& ctx : f_pure_fixtures()) {
        Ideal m = Ideal::maximal(ctx.ring());
        for (unsigned e = 1; e <= 2; ++e)
            c.expect(a0_socle_degree(bracket_power(m, e), ctx) == nu(m, m, e, ctx).nu,
                     "(d) a_0 != nu for " + ctx.defining_ideal().to_string());
    }
    // (e)
    for (const QuotientContext& ctx : f_pure_fixtures()) {
        Ideal m = Ideal::maximal(ctx.ring());
        ThresholdEstimate t = f_threshold(m, m, 2, ctx);
        c.expect(t.records[1].nu >= ctx.characteristic() * t.records[0].nu,
                 "(e) monotonicity fails for " + ctx.defining_ideal().to_string());
        for (const NuRecord& r : t.records) exactness.push_back([r, m, ctx] { return record_exact(r, m, m, ctx); });
    }
    // (f)
    std::size_t bad = 0;
    for (auto& check : exactness) bad += !check();
    c.expect(bad == 0, "(f) " + std::to_string(bad) + " of " + std::to_string(exactness.size()) + " records inexact");
}

void oracle_equivalence(Checker& c) {
    std::vector<Case> cases = random_corpus(0xf1, 20);
    for (Case& k : random_corpus(0x5eed, 10)) cases.push_back(std::move(k));
    for (const QuotientContext& ctx : f_pure_fixtures())
        if (ctx.characteristic() <= 3 && ctx.ring()->nvars() <= 3) {
            Ideal m = Ideal::maximal(ctx.ring());
            cases.push_back({QuotientContext(ctx.ring(), ctx.defining_ideal().generators(), {Backend::groebner, 1}),
                             m, m});
        }
    std::size_t agree = 0;
    for (const Case& k : cases) {
        const std::int64_t p = static_cast<std::int64_t>(k.ctx.characteristic());
        std::vector<Polynomial> frob;
        for (const Polynomial& g : k.J.generators()) frob.push_back(g.pow(static_cast<std::uint64_t>(p)));
        const std::uint64_t expected =
            dense_nu(k.a.generators(), frob, k.ctx.defining_ideal().generators(), k.ctx.ring()->nvars(), p);
        const std::uint64_t got = nu(k.a, k.J, 1, k.ctx).nu;
        c.expect(got == expected, "a = " + k.a.to_string() + ", J = " + k.J.to_string() + ": nu " +
                                      std::to_string(got) + " vs oracle " + std::to_string(expected));
        agree += got == expected;
    }
    c.expect(cases.size() >= 30, "too few fixtures");
    std::cerr << "  oracle agreed on " << agree << "/" << cases.size() << " fixtures\n";
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    void (*run)(Checker&);
    bool slow;
};

} // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) {
            slow = true;
        } else {
            std::cerr << "usage: acceptance [--slow]\n";
            return 1;
        }
    }
    const std::vector<Criterion> criteria = {
        {1, "regular ring baseline F_5[x,y]", budget_regular, regular_baseline, false},
        {2, "Fedder criterion examples", budget_fedder, fedder_examples, false},
        {3, "quadric cone F_3[x,y,z,w]/(xy-zw)", budget_cone, determinantal, false},
        {4, "diagonal hypersurface F_7[x1..x8]/(sum xi^2)", budget_diagonal, diagonal, true},
        {5, "F-signature lower bound on the quadric cone", budget_signature, signature_bound, false},
        {6, "property suites", budget_properties, properties, false},
        {7, "Groebner nu equals dense linear algebra nu", budget_oracle, oracle_equivalence, false},
    };
    int failed = 0;
    for (const Criterion& k : criteria) {
        if (k.slow && !slow) {
            std::cout << "SKIP " << k.id << " " << k.name << " (needs --slow)\n";
            continue;
        }
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            k.run(c);
        } catch (const Error& e) {
            c.failures.push_back(std::string(e.code()) + ": " + e.what());
        } catch (const std::exception& e) {
            c.failures.push_back(e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > k.budget) {
            std::ostringstream os;
            os << "took " << secs << " s, budget " << k.budget << " s";
            c.failures.push_back(os.str());
        }
        std::ostringstream took;
        took.precision(3);
        took << secs;
        std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << k.id << " " << k.name << " (" << took.str()
                  << " s)\n";
        for (const std::string& f : c.failures) std::cout << "    " << f << "\n";
        failed += !c.failures.empty();
    }
    return failed == 0 ? 0 : 1;
}
