#include "fthr/cli.hpp"

#include "fthr/errors.hpp"
#include "fthr/f_invariants.hpp"
#include "fthr/ideal_calculus.hpp"
#include "fthr/limits.hpp"
#include "fthr/multiplicities.hpp"
#include "fthr/problem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fthr {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

const std::vector<std::string> commands = {"fedder", "nu",   "threshold", "fpt",  "splitting", "hk",
                                           "fsig",   "ainv0", "atop",     "verify", "sweep"};

struct Flags {
    std::string command;
    std::string file;
    std::optional<unsigned> emax, smax, e;
    bool json = false, table = false, slow = false, no_timing = false;
    unsigned workers = 1;
    std::optional<std::uint64_t> max_gb_pairs, max_power;
    std::string a = "m", J = "m";
    std::optional<std::string> c, sop, atop;
    std::string method = "direct";
    std::string backend = "auto";
};

std::string r(const Rational& x) { return to_string(x); }

json generators_json(const Ideal& I) {
    json g = json::array();
    for (const Polynomial& f : I.generators()) g.push_back(f.to_string());
    return g;
}

json record_json(const NuRecord& rec) { return {{"e", rec.e}, {"nu", rec.nu}, {"ratio", r(rec.ratio)}}; }

json upper_term_json(const UpperTerm& t) {
    json j = {{"e", t.e}, {"s", t.s}};
    j["nu"] = t.nu ? json(*t.nu) : json(nullptr);
    j["value"] = t.value ? json(r(*t.value)) : json(nullptr);
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

json interval_json(const ThresholdEstimate& t) {
    return {{"lower", r(t.lower)}, {"upper", r(t.upper)}, {"width", r(t.width)}};
}

json estimate_result(const std::string& op, json params, const ThresholdEstimate& t, const std::string& provenance) {
    json j = {{"op", op}, {"params", std::move(params)}};
    j["interval"] = interval_json(t);
    json rows = json::array();
    for (const NuRecord& rec : t.records) rows.push_back(record_json(rec));
    j["rows"] = rows;
    j["mu"] = t.mu;
    j["plain_lower"] = r(t.plain_lower);
    j["certified"] = {{"lower", t.lower_certified}, {"upper", t.upper_certified}};
    j["lower_basis"] = lower_basis_name(t.lower_basis);
    if (!t.upper_terms.empty()) {
        json terms = json::array();
        for (const UpperTerm& u : t.upper_terms) terms.push_back(upper_term_json(u));
        j["upper_terms"] = terms;
    }
    j["provenance"] = provenance;
    return j;
}

json lengths_json(const std::vector<LengthRow>& rows) {
    json out = json::array();
    for (const LengthRow& l : rows) out.push_back({{"e", l.e}, {"length", l.length}, {"ratio", r(l.ratio)}});
    return out;
}

json signature_result(const FSignatureEstimate& s) {
    json j = {{"op", "fsig"}, {"params", {{"method", signature_method_name(s.method)}, {"d", s.d}}}};
    json rows = lengths_json(s.rows);
    for (std::size_t i = 0; i < s.gorenstein_lengths.size(); ++i) {
        rows[i]["length_J"] = s.gorenstein_lengths[i].first;
        rows[i]["length_a"] = s.gorenstein_lengths[i].second;
    }
    j["rows"] = rows;
    j["lower_bound_target"] = r(s.lower_bound_target);
    if (s.socle_ideal) j["socle_ideal"] = generators_json(*s.socle_ideal);
    j["certified"] = true;
    j["provenance"] = s.method == SignatureMethod::direct
                          ? "lengths of S/m^[q] minus S/(m^[q] + (I^[q] : I))"
                          : "lengths of R/J^[q] minus R/a^[q] with a = (J : m)";
    return j;
}

json relation_json(const Relation& rel) {
    json ev = json::object();
    for (auto& [k, v] : rel.witnesses) ev[k] = r(v);
    json j = {{"name", rel.name}, {"verdict", verdict_name(rel.verdict)}, {"evidence", ev}};
    if (!rel.note.empty()) j["note"] = rel.note;
    return j;
}

json context_json(const ProblemFile& pf, const QuotientContext& ctx) {
    json q = json::array();
    for (const Polynomial& f : pf.quotient) q.push_back(f.to_string());
    json ideals = json::object();
    for (auto& [name, gens] : pf.ideals) {
        json g = json::array();
        for (const Polynomial& f : gens) g.push_back(f.to_string());
        ideals[name] = g;
    }
    return {{"p", pf.p}, {"vars", pf.vars}, {"quotient", q}, {"ideals", ideals},
            {"backend", backend_name(ctx.resolved_backend())}};
}

std::string provenance_for(const QuotientContext& ctx) {
    return std::string("exact search, ") + backend_name(ctx.resolved_backend()) + " containment";
}

// ---- aligned text, derived from the JSON document ----

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void print_rows(std::ostream& os, const json& rows) {
    if (!rows.is_array() || rows.empty()) return;
    std::vector<std::string> keys;
    for (auto& [k, v] : rows[0].items())
        if (!v.is_structured()) keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
    for (const json& row : rows)
        for (std::size_t i = 0; i < keys.size(); ++i)
            width[i] = std::max(width[i], scalar_text(row.value(keys[i], json(nullptr))).size());
    os << "  ";
    for (std::size_t i = 0; i < keys.size(); ++i) os << std::left << std::setw(int(width[i]) + 2) << keys[i];
    os << "\n";
    for (const json& row : rows) {
        os << "  ";
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << std::left << std::setw(int(width[i]) + 2) << scalar_text(row.value(keys[i], json(nullptr)));
        os << "\n";
    }
}

void print_table(std::ostream& os, const json& doc) {
    const json& ctx = doc["context"];
    if (ctx.is_object()) {
        os << "ring F_" << ctx["p"].dump() << "[";
        for (std::size_t i = 0; i < ctx["vars"].size(); ++i) os << (i ? "," : "") << ctx["vars"][i].get<std::string>();
        os << "]";
        if (!ctx["quotient"].empty()) {
            os << "/(";
            for (std::size_t i = 0; i < ctx["quotient"].size(); ++i)
                os << (i ? ", " : "") << ctx["quotient"][i].get<std::string>();
            os << ")";
        }
        os << "  backend " << ctx["backend"].get<std::string>() << "\n";
    }
    for (const json& res : doc["results"]) {
        os << res["op"].get<std::string>();
        for (auto& [k, v] : res["params"].items()) os << "  " << k << "=" << scalar_text(v);
        os << "\n";
        for (auto& [k, v] : res.items()) {
            if (k == "op" || k == "params" || k == "rows" || k == "upper_terms") continue;
            if (k == "interval")
                os << "  interval [" << v["lower"].get<std::string>() << ", " << v["upper"].get<std::string>() << "]\n";
            else if (v.is_object()) {
                os << "  " << k << ":";
                for (auto& [kk, vv] : v.items()) os << " " << kk << "=" << scalar_text(vv);
                os << "\n";
            } else if (!v.is_array()) {
                os << "  " << k << ": " << scalar_text(v) << "\n";
            }
        }
        if (res.contains("rows")) print_rows(os, res["rows"]);
        if (res.contains("upper_terms")) {
            os << "  upper terms\n";
            print_rows(os, res["upper_terms"]);
        }
    }
    for (const json& rel : doc["relations"]) {
        os << "relation " << rel["name"].get<std::string>() << ": " << rel["verdict"].get<std::string>() << "\n";
        for (auto& [k, v] : rel["evidence"].items()) os << "  " << k << " = " << scalar_text(v) << "\n";
        if (rel.contains("note")) os << "  note: " << rel["note"].get<std::string>() << "\n";
    }
    if (doc.contains("footnotes"))
        for (const json& n : doc["footnotes"]) os << "note: " << n.get<std::string>() << "\n";
    for (const json& e : doc["errors"])
        os << "error " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
}

// ---- commands ----

struct Runner {
    const Flags& f;
    const ProblemFile& pf;
    const QuotientContext& ctx;
    json& results;
    json& relations;
    json& notes;
    std::ostream& out;
    unsigned emax, smax;

    Ideal ideal(const std::string& s) const { return pf.ideal(s); }

    void run() {
        const std::string& c = f.command;
        if (c == "fedder") fedder();
        else if (c == "nu") nu_cmd();
        else if (c == "threshold") threshold();
        else if (c == "fpt") fpt();
        else if (c == "splitting") splitting();
        else if (c == "hk") hk();
        else if (c == "fsig") fsig();
        else if (c == "ainv0") ainv0();
        else if (c == "atop") atop();
        else if (c == "verify") verify();
        else if (c == "sweep") sweep();
    }

    void fedder() {
        const bool pure = fedder_is_f_pure(ctx);
        results.push_back({{"op", "fedder"}, {"params", json::object()}, {"value", {{"f_pure", pure}}},
                           {"certified", true}, {"provenance", "Fedder criterion (I^[p] : I) not in m^[p]"}});
        if (f.c) {
            Polynomial c = parse_polynomial(*f.c, ctx.ring());
            auto w = strong_f_regularity_witness(c, emax, ctx);
            results.push_back({{"op", "strong_f_regularity_witness"},
                               {"params", {{"c", c.to_string()}, {"emax", emax}}},
                               {"value", {{"e", w ? json(*w) : json(nullptr)}}},
                               {"certified", w.has_value()},
                               {"provenance", "c times (I^[q] : I) not in m^[q]; none found proves nothing"}});
        }
    }

    void nu_cmd() {
        const unsigned e = f.e.value_or(emax);
        NuRecord rec = nu(ideal(f.a), ideal(f.J), e, ctx);
        json row = record_json(rec);
        results.push_back({{"op", "nu"},
                           {"params", {{"a", f.a}, {"J", f.J}, {"e", e}}},
                           {"value", row},
                           {"rows", json::array({row})},
                           {"certified", true},
                           {"provenance", provenance_for(ctx)}});
    }

    void threshold() {
        Ideal a = ideal(f.a), J = ideal(f.J);
        ThresholdEstimate t = f_threshold(a, J, emax, ctx);
        results.push_back(
            estimate_result("threshold", {{"a", f.a}, {"J", f.J}, {"emax", emax}}, t, provenance_for(ctx)));
        if (f.a == f.J) {
            TMinus1Bound b = thm_tminus1_bound(J, emax, ctx);
            results.push_back({{"op", "tminus1_bound"},
                               {"params", {{"J", f.J}, {"emax", emax}}},
                               {"value", {{"D", b.D}, {"upper", r(b.upper)}, {"bound", r(b.bound)}}},
                               {"certified", false},
                               {"provenance", "D times (certified upper bound + 1); reported only"}});
        }
    }

    void fpt() {
        Ideal a = ideal(f.a);
        ThresholdEstimate t = fpt_estimate(a, emax, smax, ctx);
        results.push_back(estimate_result("fpt", {{"a", f.a}, {"emax", emax}, {"smax", smax}}, t,
                                          "b from a^t (I^[q] : I) in m^[q]; upper terms via splitting ideals"));
        FptComparison cmp = check_fpt_equals_cm(a, emax, ctx, smax);
        json rows = json::array();
        for (const FptComparisonRow& row : cmp.rows)
            rows.push_back({{"e", row.e},
                            {"splitting_lower", r(row.splitting_lower)},
                            {"splitting_upper", r(row.splitting_upper)},
                            {"scaled_lower", r(row.scaled_lower)},
                            {"scaled_upper", r(row.scaled_upper)},
                            {"verdict", verdict_name(row.verdict)}});
        results.push_back({{"op", "fpt_equals_cm"},
                           {"params", {{"a", f.a}, {"emax", emax}, {"smax", smax}}},
                           {"value", {{"verdict", verdict_name(cmp.verdict)}}},
                           {"rows", rows},
                           {"certified", cmp.verdict != Verdict::inconclusive},
                           {"provenance", "c^{I_e}(a) against p^e c^m(a), interval by interval"}});
    }

    void splitting() {
        Ideal a = ideal(f.a);
        json rows = json::array();
        for (unsigned e = 1; e <= emax; ++e) {
            SplittingIdealRecord rec = splitting_record(a, e, ctx, true);
            json row = {{"e", e}, {"b", rec.b}};
            row["colength"] = rec.colength ? json(*rec.colength) : json(nullptr);
            row["generators"] = generators_json(rec.ideal);
            rows.push_back(row);
        }
        results.push_back({{"op", "splitting"},
                           {"params", {{"a", f.a}, {"emax", emax}}},
                           {"rows", rows},
                           {"certified", true},
                           {"provenance", "I_e = (m^[q] : (I^[q] : I)) by Groebner colon"}});
    }

    void hk() {
        HKSequence h = hilbert_kunz_sequence(ideal(f.J), emax, ctx);
        results.push_back({{"op", "hk"},
                           {"params", {{"J", f.J}, {"emax", emax}, {"d", h.d}}},
                           {"rows", lengths_json(h.rows)},
                           {"certified", true},
                           {"provenance", "standard monomial counts"}});
    }

    void fsig() {
        std::optional<Ideal> sop;
        if (f.sop) sop = ideal(*f.sop);
        results.push_back(signature_result(f_signature_sequence(emax, ctx, parse_signature_method(f.method), sop)));
    }

    void ainv0() {
        results.push_back({{"op", "ainv0"},
                           {"params", {{"J", f.J}}},
                           {"value", a0_socle_degree(ideal(f.J), ctx)},
                           {"certified", true},
                           {"provenance", "top degree of R/J"}});
    }

    void atop() {
        results.push_back({{"op", "atop"},
                           {"params", json::object()},
                           {"value", a_top_complete_intersection(ctx)},
                           {"certified", true},
                           {"provenance", "sum of generator degrees minus n for a complete intersection"}});
    }

    void verify() {
        VerifyOptions o;
        o.e_max = emax;
        o.s_max = smax;
        o.J = ideal(f.J);
        if (f.atop) {
            try {
                o.a_top = std::stoll(*f.atop);
            } catch (const std::exception&) {
                throw InvalidArgument("--atop expects an integer");
            }
        }
        if (f.sop) o.J_sop = ideal(*f.sop);
        o.method = parse_signature_method(f.sop && f.method == "direct" ? "gorenstein" : f.method);
        InvariantReport rep = verify_relations(ctx, o);
        results.push_back(estimate_result("fpt", {{"a", "m"}, {"emax", emax}, {"smax", smax}}, rep.fpt,
                                          "b from a^t (I^[q] : I) in m^[q]; upper terms via splitting ideals"));
        results.push_back(
            estimate_result("threshold", {{"a", "m"}, {"J", "m"}, {"emax", emax}}, rep.cm, provenance_for(ctx)));
        results.push_back({{"op", "atop"},
                           {"params", {{"source", rep.a_top_source}}},
                           {"value", rep.a_top ? json(*rep.a_top) : json(nullptr)},
                           {"certified", rep.a_top_source == "complete intersection"},
                           {"provenance", rep.a_top_source}});
        if (rep.signature) results.push_back(signature_result(*rep.signature));
        for (const Relation& rel : rep.relations) relations.push_back(relation_json(rel));
        for (const std::string& s : rep.footnotes) notes.push_back(s);
    }

    void sweep() {
        Ideal a = ideal(f.a), J = ideal(f.J);
        const bool pure = fedder_is_f_pure(ctx);
        json rows = json::array();
        for (unsigned e = 1; e <= emax; ++e) {
            ThresholdEstimate t = f_threshold(a, J, e, ctx);
            const NuRecord& rec = t.records.back();
            json row = record_json(rec);
            row["lower"] = r(t.lower);
            row["upper"] = r(t.upper);
            if (pure) row["b"] = b_invariant(a, e, ctx);
            if (f.table && !f.json) {
                out << "sweep e=" << e << "  nu=" << rec.nu << "  ratio=" << r(rec.ratio) << "  interval=["
                    << r(t.lower) << ", " << r(t.upper) << "]";
                if (pure) out << "  b=" << row["b"].dump();
                out << std::endl;
            }
            rows.push_back(row);
        }
        results.push_back({{"op", "sweep"},
                           {"params", {{"a", f.a}, {"J", f.J}, {"emax", emax}}},
                           {"rows", rows},
                           {"certified", true},
                           {"provenance", provenance_for(ctx)}});
    }
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read problem file '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Exact F-thresholds, F-pure thresholds and Frobenius multiplicities over F_p"};
    app.add_option("command", f.command, "fedder | nu | threshold | fpt | splitting | hk | fsig | ainv0 | atop | verify | sweep")
        ->required()
        ->check(CLI::IsMember(commands));
    app.add_option("problem", f.file, "problem file, or - for stdin")->required();
    app.add_option("--emax", f.emax, "largest Frobenius exponent e");
    app.add_option("--smax", f.smax, "largest inner exponent s for fpt upper terms");
    app.add_option("--e", f.e, "exponent for the nu command (default: emax)");
    app.add_flag("--json", f.json, "JSON report (the default)");
    app.add_flag("--table", f.table, "aligned text instead of JSON");
    app.add_flag("--slow", f.slow, "raise the linear-algebra and Frobenius length budgets");
    app.add_flag("--no-timing", f.no_timing, "omit the timing block");
    app.add_option("--workers", f.workers, "threads for independent e rows")->check(CLI::PositiveNumber);
    app.add_option("--max-gb-pairs", f.max_gb_pairs, "S-pair budget per Groebner run");
    app.add_option("--max-power", f.max_power, "largest materialised power a^t");
    app.add_option("--a", f.a, "ideal a (a name from the file, m, or generators)");
    app.add_option("--J", f.J, "ideal J (a name from the file, m, or generators)");
    app.add_option("--c", f.c, "element for the strong F-regularity witness search");
    app.add_option("--sop", f.sop, "system of parameters for the gorenstein F-signature method");
    app.add_option("--atop", f.atop, "user-asserted a_d(R) for verify");
    app.add_option("--method", f.method, "F-signature method")->check(CLI::IsMember({"direct", "gorenstein"}));
    app.add_option("--backend", f.backend, "containment backend")->check(CLI::IsMember({"auto", "groebner", "linear"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    const auto start = std::chrono::steady_clock::now();
    json doc;
    doc["tool"] = {{"name", "fthr"}, {"version", tool_version}};
    doc["command"] = f.command;
    doc["input_digest"] = nullptr;
    doc["context"] = nullptr;
    json results = json::array(), relations = json::array(), errors = json::array(), notes = json::array();
    const Limits saved = limits();
    try {
        const std::string text = read_input(f.file);
        doc["input_digest"] = "fnv1a64:" + hex64(fnv1a64(text));
        ProblemFile pf = parse_problem(text);
        if (auto v = f.max_gb_pairs ? f.max_gb_pairs : pf.max_gb_pairs) limits().max_gb_pairs = *v;
        if (auto v = f.max_power ? f.max_power : pf.max_power) limits().max_power = *v;
        if (f.slow) {
            limits().max_frobenius_length *= 16;
            limits().max_matrix_cells *= 16;
        }
        ComputeOptions opts{parse_backend(f.backend), f.workers};
        QuotientContext ctx = pf.context(opts);
        doc["context"] = context_json(pf, ctx);
        const unsigned emax = f.emax.value_or(pf.emax.value_or(1));
        const unsigned smax = f.smax.value_or(pf.smax.value_or(1));
        doc["params"] = {{"emax", emax}, {"smax", smax}, {"backend", f.backend}, {"workers", f.workers}};
        Runner run{f, pf, ctx, results, relations, notes, out, emax, smax};
        run.run();
    } catch (const Error& e) {
        errors.push_back({{"code", e.code()}, {"message", e.what()}});
    } catch (const std::exception& e) {
        errors.push_back({{"code", "InternalError"}, {"message", e.what()}});
    }
    limits() = saved;
    doc["results"] = results;
    doc["relations"] = relations;
    doc["errors"] = errors;
    if (!notes.empty()) doc["footnotes"] = notes;
    if (!f.no_timing) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        doc["timing"] = {{"total_ms", std::round(ms * 1000) / 1000}};
    }

    if (f.table && !f.json) print_table(out, doc);
    else out << doc.dump(2) << "\n";

    if (!errors.empty()) return 1;
    for (const json& rel : relations)
        if (rel["verdict"] == "violated") return 2;
    return 0;
}

} // namespace fthr
