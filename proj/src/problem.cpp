#include "fthr/problem.hpp"

#include "fthr/errors.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace fthr {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
public:
    ExprParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column)
        : s_(text), ring_(ring), line_(line), column_(column) {}

    Polynomial parse_all() {
        Polynomial f = expr();
        skip();
        if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_ + i_, what); }

    void skip() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial f = term();
        for (;;) {
            if (eat('+')) f = f + term();
            else if (eat('-')) f = f - term();
            else return f;
        }
    }

    Polynomial term() {
        Polynomial f = unary();
        while (eat('*')) f = f * unary();
        return f;
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!eat('^')) return base;
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an exponent");
        std::uint64_t e = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            e = e * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
            if (e > std::numeric_limits<Exponent>::max()) fail("exponent too large");
            ++i_;
        }
        return base.pow(e);
    }

    Polynomial atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Polynomial f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t p = ring_->characteristic();
            std::uint64_t v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                v = (v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0')) % p;
            if (i_ < s_.size() && ident_start(s_[i_])) fail("missing '*' between coefficient and variable");
            return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
        }
        if (ident_start(c)) {
            const std::size_t start = i_;
            while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
            const std::string name(s_.substr(start, i_ - start));
            const auto& vars = ring_->variables();
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (vars[v] == name) return Polynomial::variable(ring_, v);
            i_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const RingPtr& ring_;
    std::size_t line_, column_;
    std::size_t i_ = 0;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (offset) *offset += a;
    return s.substr(a, b - a);
}

struct Piece {
    std::string_view text;
    std::size_t column; // 1-based
};

// Split on commas that are not inside parentheses.
std::vector<Piece> split_list(std::string_view s, std::size_t column) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back({s.substr(start, i - start), column + start});
            start = i + 1;
        }
    }
    return out;
}

std::vector<Polynomial> parse_generators(std::string_view s, const RingPtr& ring, std::size_t line,
                                         std::size_t column, const std::string& what) {
    std::vector<Polynomial> out;
    for (const Piece& piece : split_list(s, column)) {
        std::size_t col = piece.column;
        std::string_view t = trim(piece.text, &col);
        if (t.empty()) throw ParseError(line, col, "empty generator in " + what);
        Polynomial f = parse_polynomial(t, ring, line, col);
        if (!f.homogeneity().homogeneous)
            throw NotHomogeneousInput(std::to_string(line) + ":" + std::to_string(col) + ": generator " +
                                      f.to_string() + " of " + what + " is not homogeneous");
        out.push_back(std::move(f));
    }
    return out;
}

std::uint64_t parse_count(std::string_view s, std::size_t line, std::size_t column) {
    if (s.empty()) throw ParseError(line, column, "expected a non-negative integer");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(line, column + i, "expected a non-negative integer");
        if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) throw ParseError(line, column, "number too large");
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
    }
    return v;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !ident_start(s[0])) return false;
    for (char c : s)
        if (!ident_char(c)) return false;
    return true;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
    return ExprParser(text, ring, line, column).parse_all();
}

RingPtr ProblemFile::ring() const {
    // Reuse the ring the generators were parsed in, when there is one.
    if (!quotient.empty()) return quotient.front().ring();
    for (auto& [name, gens] : ideals)
        if (!gens.empty()) return gens.front().ring();
    return Ring::make(p, vars);
}

QuotientContext ProblemFile::context(ComputeOptions options) const { return QuotientContext(ring(), quotient, options); }

Ideal ProblemFile::ideal(const std::string& name_or_generators) const {
    RingPtr R = ring();
    if (name_or_generators == "m") return Ideal::maximal(R);
    for (auto& [name, gens] : ideals)
        if (name == name_or_generators) return Ideal(R, gens);
    return Ideal(R, parse_generators(name_or_generators, R, 1, 1, "the ideal argument"));
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
    if (a.p != b.p || a.vars != b.vars || a.emax != b.emax || a.smax != b.smax || a.max_gb_pairs != b.max_gb_pairs ||
        a.max_power != b.max_power || a.quotient.size() != b.quotient.size() || a.ideals.size() != b.ideals.size())
        return false;
    for (std::size_t i = 0; i < a.quotient.size(); ++i)
        if (a.quotient[i].to_string() != b.quotient[i].to_string()) return false;
    for (std::size_t i = 0; i < a.ideals.size(); ++i) {
        if (a.ideals[i].first != b.ideals[i].first || a.ideals[i].second.size() != b.ideals[i].second.size())
            return false;
        for (std::size_t k = 0; k < a.ideals[i].second.size(); ++k)
            if (a.ideals[i].second[k].to_string() != b.ideals[i].second[k].to_string()) return false;
    }
    return true;
}

ProblemFile parse_problem(std::string_view text) {
    struct Line {
        std::size_t number;
        std::string key;
        std::string_view value;
        std::size_t column;
    };
    std::vector<Line> lines;
    std::size_t number = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        std::size_t col = 1;
        std::string_view s = trim(raw, &col);
        if (s.empty() || s[0] == '#') continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string_view::npos) throw ParseError(number, col, "expected 'key = value'");
        std::size_t kcol = col;
        std::string_view key = trim(s.substr(0, eq), &kcol);
        std::size_t vcol = col + eq + 1;
        std::string_view value = trim(s.substr(eq + 1), &vcol);
        lines.push_back({number, std::string(key), value, vcol});
        if (key.empty()) throw ParseError(number, kcol, "missing key");
    }

    ProblemFile out;
    bool have_p = false, have_vars = false;
    for (const Line& l : lines) {
        if (l.key == "p") {
            if (have_p) throw ParseError(l.number, 1, "p given twice");
            out.p = parse_count(l.value, l.number, l.column);
            have_p = true;
        } else if (l.key == "vars") {
            if (have_vars) throw ParseError(l.number, 1, "vars given twice");
            std::set<std::string> seen;
            for (const Piece& piece : split_list(l.value, l.column)) {
                std::size_t c = piece.column;
                std::string_view v = trim(piece.text, &c);
                if (!is_identifier(v)) throw ParseError(l.number, c, "bad variable name '" + std::string(v) + "'");
                if (!seen.insert(std::string(v)).second)
                    throw ParseError(l.number, c, "duplicate variable '" + std::string(v) + "'");
                out.vars.emplace_back(v);
            }
            have_vars = true;
        }
    }
    if (!have_p) throw ParseError(1, 1, "missing 'p = <prime>'");
    if (!have_vars) throw ParseError(1, 1, "missing 'vars = ...'");
    RingPtr R = out.ring(); // NotPrime surfaces here

    std::set<std::string> names;
    bool have_quotient = false;
    for (const Line& l : lines) {
        if (l.key == "p" || l.key == "vars") continue;
        if (l.key == "quotient") {
            if (have_quotient) throw ParseError(l.number, 1, "quotient given twice");
            out.quotient = parse_generators(l.value, R, l.number, l.column, "the quotient");
            have_quotient = true;
        } else if (l.key.rfind("ideal", 0) == 0 && l.key.size() > 5 && std::isspace(static_cast<unsigned char>(l.key[5]))) {
            std::size_t c = 6;
            std::string name(trim(std::string_view(l.key).substr(5), &c));
            if (!is_identifier(name)) throw ParseError(l.number, c, "bad ideal name '" + name + "'");
            if (name == "m") throw ParseError(l.number, c, "the name m is reserved for the irrelevant ideal");
            if (!names.insert(name).second) throw ParseError(l.number, c, "ideal '" + name + "' defined twice");
            out.ideals.emplace_back(name, parse_generators(l.value, R, l.number, l.column, "ideal " + name));
        } else if (l.key == "emax") {
            out.emax = static_cast<unsigned>(parse_count(l.value, l.number, l.column));
        } else if (l.key == "smax") {
            out.smax = static_cast<unsigned>(parse_count(l.value, l.number, l.column));
        } else if (l.key == "max_gb_pairs") {
            out.max_gb_pairs = parse_count(l.value, l.number, l.column);
        } else if (l.key == "max_power") {
            out.max_power = parse_count(l.value, l.number, l.column);
        } else {
            throw ParseError(l.number, 1, "unknown key '" + l.key + "'");
        }
    }
    return out;
}

std::string render_problem(const ProblemFile& problem) {
    std::ostringstream os;
    auto list = [&](const std::vector<Polynomial>& gens) {
        for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
    };
    os << "p = " << problem.p << "\n";
    os << "vars = ";
    for (std::size_t i = 0; i < problem.vars.size(); ++i) os << (i ? ", " : "") << problem.vars[i];
    os << "\n";
    if (!problem.quotient.empty()) {
        os << "quotient = ";
        list(problem.quotient);
        os << "\n";
    }
    for (auto& [name, gens] : problem.ideals) {
        os << "ideal " << name << " = ";
        list(gens);
        os << "\n";
    }
    if (problem.emax) os << "emax = " << *problem.emax << "\n";
    if (problem.smax) os << "smax = " << *problem.smax << "\n";
    if (problem.max_gb_pairs) os << "max_gb_pairs = " << *problem.max_gb_pairs << "\n";
    if (problem.max_power) os << "max_power = " << *problem.max_power << "\n";
    return os.str();
}

} // namespace fthr
