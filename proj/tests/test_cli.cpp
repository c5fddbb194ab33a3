#include "fthr/cli.hpp"
#include "fthr/errors.hpp"
#include "fthr/problem.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace fthr;
using namespace fthr::testing;
using json = nlohmann::ordered_json;

namespace {

std::string data(const std::string& name) { return std::string(FTHR_TEST_DATA) + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"fthr"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string(FTHR_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

json strip_timing(json d) {
    d.erase("timing");
    return d;
}

} // namespace

TEST_CASE("parse problem examples") {
    ProblemFile pf = parse_problem("p = 3\nvars = x,y,z,w\nquotient = x*y - z*w");
    CHECK(pf.p == 3);
    CHECK(pf.vars == std::vector<std::string>{"x", "y", "z", "w"});
    REQUIRE(pf.quotient.size() == 1);
    CHECK(pf.quotient[0].to_string() == "x*y - z*w");
    QuotientContext ctx = pf.context();
    CHECK_FALSE(ctx.is_polynomial_ring());

    CHECK_THROWS_AS(parse_problem("p = 4\nvars = x"), NotPrime);
    CHECK_THROWS_AS(parse_problem("p = 5\nvars = x,y\nideal a = x + y^2"), NotHomogeneousInput);
    CHECK_THROWS_AS(parse_problem("p = 5\nvars = x,y\nquotient = x^2 + y"), NotHomogeneousInput);
}

TEST_CASE("parse errors carry a location") {
    auto loc = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_problem(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        FAIL("no parse error");
        return {0, 0};
    };
    CHECK(loc("p = 5\nvars = x, y\nideal a = x + * y") == std::pair<std::size_t, std::size_t>{3, 15});
    CHECK(loc("p = 5\nvars = x, y\nideal a = x + q") == std::pair<std::size_t, std::size_t>{3, 15});
    CHECK(loc("p = 5\nvars = x, y\nideal a = (x + y") == std::pair<std::size_t, std::size_t>{3, 17});
    CHECK(loc("p = 5\nvars = x, y\nideal a = 2x") == std::pair<std::size_t, std::size_t>{3, 12});
    CHECK(loc("p = 5\nvars = x, x") == std::pair<std::size_t, std::size_t>{2, 11});
    CHECK(loc("p = 5\nvars = x\nfoo = 3").first == 3);
    CHECK(loc("p = 5\nvars = x\nideal m = x").first == 3);
    CHECK(loc("vars = x").first == 1);
    CHECK(loc("p = 5\nvars = x\nideal a = x,").first == 3);
    CHECK(loc("p = 5\nvars = x\nideal a = x\nideal a = x").first == 4);
    CHECK(loc("p = 5\nvars = x\nnonsense").first == 3);
}

TEST_CASE("polynomial expressions") {
    auto R = Ring::make(5, {"x", "y"});
    Polynomial x = var(R, 0), y = var(R, 1);
    CHECK(parse_polynomial("(x + y)^2", R) == x * x + cst(R, 2) * x * y + y * y);
    CHECK(parse_polynomial("-x^2 - -y^2", R) == y * y - x * x);
    CHECK(parse_polynomial("7*x", R) == cst(R, 2) * x);
    CHECK(parse_polynomial("5*x + y", R) == y);
    CHECK(parse_polynomial("123456789012345678901234567890*x", R) == Polynomial(R));
    CHECK(parse_polynomial("x*y*x", R) == x * x * y);
    CHECK(parse_polynomial("(x - y)*(x + y)", R) == x * x - y * y);
    CHECK(parse_polynomial("  2 ", R) == cst(R, 2));
    CHECK_THROWS_AS(parse_polynomial("x^", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^99999999999", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", R), ParseError);
}

TEST_CASE("property: render round trip") {
    Rng rng(0xc11);
    for (int k = 0; k < 30; ++k) {
        const std::uint64_t primes[] = {2, 3, 5, 7, 11};
        ProblemFile pf;
        pf.p = primes[rng.below(5)];
        const std::size_t n = 1 + rng.below(4);
        for (std::size_t i = 0; i < n; ++i) pf.vars.push_back("v" + std::to_string(i));
        auto R = Ring::make(pf.p, pf.vars);
        if (rng.below(2)) pf.quotient.push_back(random_poly(rng, R, 3, 3, true, 1 + rng.below(3)));
        const std::size_t ni = rng.below(3);
        for (std::size_t i = 0; i < ni; ++i) {
            std::vector<Polynomial> g;
            for (std::size_t j = 0; j <= rng.below(3); ++j) g.push_back(random_poly(rng, R, 4, 4, true, rng.below(4)));
            pf.ideals.emplace_back("I" + std::to_string(i), g);
        }
        if (rng.below(2)) pf.emax = static_cast<unsigned>(rng.below(4));
        if (rng.below(2)) pf.max_power = rng.below(1000);
        const std::string text = render_problem(pf);
        CAPTURE(text);
        CHECK(parse_problem(text) == pf);
        CHECK(render_problem(parse_problem(text)) == text);
    }
}

TEST_CASE("fnv1a digest") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("cli fedder on the cone") {
    Run r = cli({"fedder", data("cone3.fthr")});
    CHECK(r.code == 0);
    json d = r.doc();
    CHECK(d["results"][0]["value"]["f_pure"] == true);
    CHECK(d["errors"].empty());
    CHECK(d["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(d["context"]["backend"] == "groebner");

    Run n = cli({"fedder", data("nonpure2.fthr")});
    CHECK(n.code == 0);
    CHECK(n.doc()["results"][0]["value"]["f_pure"] == false);
}

TEST_CASE("cli threshold on the plane") {
    Run r = cli({"threshold", data("plane5.fthr"), "--a", "m", "--J", "m", "--emax", "2"});
    CHECK(r.code == 0);
    json res = r.doc()["results"][0];
    CHECK(res["op"] == "threshold");
    CHECK(res["interval"]["upper"] == "2/1");
    CHECK(res["interval"]["lower"] == "2/1");
    CHECK(res["certified"]["lower"] == true);
    CHECK(res["certified"]["upper"] == true);
    CHECK(res["rows"][1]["ratio"] == "48/25");
}

TEST_CASE("cli commands produce results") {
    const std::string cone = data("cone3.fthr");
    for (const std::string& cmd : {"nu", "fpt", "splitting", "hk", "ainv0", "atop", "sweep"}) {
        CAPTURE(cmd);
        Run r = cli({cmd, cone, "--no-timing"});
        CHECK(r.code == 0);
        json d = r.doc();
        CHECK(d["errors"].empty());
        CHECK_FALSE(d["results"].empty());
        CHECK_FALSE(d.contains("timing"));
    }
    Run nu = cli({"nu", cone, "--e", "2"});
    CHECK(nu.doc()["results"][0]["value"]["nu"] == 16);
    Run hk = cli({"hk", cone, "--J", "J"});
    CHECK(hk.doc()["results"][0]["rows"][0]["length"] == 54);
    Run fs = cli({"fsig", cone, "--method", "gorenstein", "--sop", "J"});
    CHECK(fs.code == 0);
    CHECK(fs.doc()["results"][0]["rows"][0]["ratio"] == "19/27");
    Run inl = cli({"ainv0", cone, "--J", "x^3, y^3, z^3, w^3"});
    CHECK(inl.doc()["results"][0]["value"] == 4);
    Run w = cli({"fedder", cone, "--c", "x", "--emax", "2"});
    CHECK(w.doc()["results"][1]["value"]["e"] == 1);
}

TEST_CASE("cli verify") {
    Run r = cli({"verify", data("cone3.fthr"), "--sop", "J"});
    CHECK(r.code == 0);
    json d = r.doc();
    REQUIRE(d["relations"].size() == 3);
    CHECK(d["relations"][1]["name"] == "nu_formula");
    CHECK(d["relations"][1]["verdict"] == "verified");
    CHECK(d["relations"][0]["verdict"] != "violated");
    CHECK_FALSE(d["footnotes"].empty());

    Run bad = cli({"verify", data("cone3.fthr"), "--atop", "-5"});
    CHECK(bad.code == 2);
    CHECK(bad.doc()["relations"][0]["verdict"] == "violated");
}

TEST_CASE("cli errors") {
    Run missing = cli({"fedder", data("no_such_file.fthr")});
    CHECK(missing.code == 1);
    CHECK(missing.doc()["errors"][0]["code"] == "InvalidArgument");

    std::string notprime = write_temp("notprime.fthr", "p = 4\nvars = x\n");
    Run np = cli({"fedder", notprime});
    CHECK(np.code == 1);
    CHECK(np.doc()["errors"][0]["code"] == "NotPrime");

    std::string bad = write_temp("bad.fthr", "p = 5\nvars = x, y\nideal a = x +\n");
    Run pe = cli({"fedder", bad});
    CHECK(pe.code == 1);
    CHECK(pe.doc()["errors"][0]["code"] == "ParseError");

    Run fp = cli({"splitting", data("nonpure2.fthr")});
    CHECK(fp.code == 1);
    CHECK(fp.doc()["errors"][0]["code"] == "NotFPure");

    Run budget = cli({"nu", data("cone3.fthr"), "--e", "2", "--max-power", "3", "--a", "x, y"});
    CHECK(budget.code == 1);
    CHECK(budget.doc()["errors"][0]["code"] == "SearchBudgetExceeded");

    Run usage = cli({"frobnicate", data("cone3.fthr")});
    CHECK(usage.code == 1);
    Run noarg = cli({});
    CHECK(noarg.code == 1);
}

TEST_CASE("cli output is deterministic") {
    for (const std::string& cmd : {"verify", "fpt", "sweep"}) {
        Run a = cli({cmd, data("cone3.fthr"), "--emax", "2"});
        Run b = cli({cmd, data("cone3.fthr"), "--emax", "2"});
        CHECK(strip_timing(a.doc()).dump() == strip_timing(b.doc()).dump());
        Run na = cli({cmd, data("cone3.fthr"), "--emax", "2", "--no-timing"});
        CHECK(na.out == cli({cmd, data("cone3.fthr"), "--emax", "2", "--no-timing"}).out);
    }
}

TEST_CASE("cli table output") {
    Run r = cli({"sweep", data("plane5.fthr"), "--emax", "2", "--table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep e=1") != std::string::npos);
    CHECK(r.out.find("48/25") != std::string::npos);
    Run v = cli({"verify", data("plane5.fthr"), "--table"});
    CHECK(v.out.find("relation nu_formula: verified") != std::string::npos);
}

TEST_CASE("binary exit codes") {
    auto status = [](const std::string& args) {
        const std::string cmd = std::string(FTHR_BINARY) + " " + args + " > /dev/null 2>&1";
        const int s = std::system(cmd.c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("fedder " + data("cone3.fthr")) == 0);
    CHECK(status("verify " + data("cone3.fthr") + " --atop -5") == 2);
    CHECK(status("ainv0 " + data("cone3.fthr") + " --J x") == 1);
    CHECK(status("--help") == 0);
    CHECK(status("threshold - < " + data("plane5.fthr")) == 0);
}
