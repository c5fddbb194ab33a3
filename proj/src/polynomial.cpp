#include "fthr/polynomial.hpp"

#include "fthr/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fthr {

namespace {

constexpr std::uint64_t kExponentLimit = std::numeric_limits<Exponent>::max();

Exponent checked_exponent(std::uint64_t v) {
    if (v > kExponentLimit) throw ExponentOverflow("exponent " + std::to_string(v) + " exceeds the exponent word");
    return static_cast<Exponent>(v);
}

} // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    degree_ = d;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
    std::vector<Exponent> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<Exponent> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::elimination: {
        std::string s = "elimination(";
        for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
        return s + ")";
    }
    }
    return "?";
}

// ---------------------------------------------------------------- Ring

Ring::Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(std::move(order)) {
    if (order_.kind == MonomialOrder::Kind::elimination) {
        std::size_t total = std::accumulate(order_.blocks.begin(), order_.blocks.end(), std::size_t{0});
        if (total != vars_.size()) throw InvalidArgument("elimination block sizes do not cover the variables");
    }
}

RingPtr Ring::make(std::uint64_t p, std::vector<std::string> variables, MonomialOrder order) {
    return std::make_shared<const Ring>(PrimeField(p), std::move(variables), std::move(order));
}

int Ring::compare(const Exponent* a, const Exponent* b) const noexcept {
    const std::size_t n = vars_.size();
    switch (order_.kind) {
    case MonomialOrder::Kind::grevlex:
        if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
        for (std::size_t i = n; i >= 1; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    case MonomialOrder::Kind::lex:
        for (std::size_t i = 1; i <= n; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    case MonomialOrder::Kind::elimination: {
        std::size_t start = 1;
        for (std::size_t len : order_.blocks) {
            std::uint64_t da = 0, db = 0;
            for (std::size_t i = start; i < start + len; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = start + len; i > start; --i)
                if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
            start += len;
        }
        return 0;
    }
    }
    return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
    std::vector<Exponent> ra(stride()), rb(stride());
    ra[0] = checked_exponent(a.total_degree());
    rb[0] = checked_exponent(b.total_degree());
    std::copy(a.exponents().begin(), a.exponents().end(), ra.begin() + 1);
    std::copy(b.exponents().begin(), b.exponents().end(), rb.begin() + 1);
    return compare(ra.data(), rb.data());
}

bool Ring::same_as(const Ring& other) const noexcept {
    return this == &other || (field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_);
}

RingPtr Ring::with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(field_, vars_, std::move(order));
}

RingPtr Ring::with_leading_variables(const std::vector<std::string>& extra, MonomialOrder order) const {
    std::vector<std::string> names = extra;
    names.insert(names.end(), vars_.begin(), vars_.end());
    return std::make_shared<const Ring>(field_, std::move(names), std::move(order));
}

void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_as(b)) throw RingMismatch("operands live in different rings");
}

void require_same_ring(const Polynomial& f, const Polynomial& g) { require_same_ring(*f.ring(), *g.ring()); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgument("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Polynomial f(std::move(ring));
    Coeff v = f.ring_->field().reduce(c);
    if (v != 0) {
        f.records_.assign(f.ring_->stride(), 0);
        f.coeffs_.push_back(v);
    }
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    const std::size_t n = ring->nvars();
    return term(std::move(ring), Monomial::variable(n, i));
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, Coeff c) {
    if (m.size() != ring->nvars()) throw RingMismatch("monomial length does not match the ring");
    Polynomial f(std::move(ring));
    c %= f.ring_->characteristic();
    if (c == 0) return f;
    f.records_.push_back(checked_exponent(m.total_degree()));
    f.records_.insert(f.records_.end(), m.exponents().begin(), m.exponents().end());
    f.coeffs_.push_back(c);
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, std::int64_t>> terms) {
    std::vector<Exponent> recs;
    std::vector<Coeff> cs;
    recs.reserve(terms.size() * ring->stride());
    for (const auto& [m, c] : terms) {
        if (m.size() != ring->nvars()) throw RingMismatch("monomial length does not match the ring");
        recs.push_back(checked_exponent(m.total_degree()));
        recs.insert(recs.end(), m.exponents().begin(), m.exponents().end());
        cs.push_back(ring->field().reduce(c));
    }
    return from_unsorted_records(std::move(ring), std::move(recs), std::move(cs));
}

Polynomial Polynomial::from_unsorted_records(RingPtr ring, std::vector<Exponent> records, std::vector<Coeff> coeffs) {
    Polynomial f(std::move(ring));
    const Ring& R = *f.ring_;
    const std::size_t st = R.stride();
    const std::size_t count = coeffs.size();
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return R.compare(records.data() + a * st, records.data() + b * st) > 0;
    });
    f.records_.reserve(records.size());
    f.coeffs_.reserve(count);
    for (std::size_t k = 0; k < count;) {
        const Exponent* r = records.data() + idx[k] * st;
        Coeff c = 0;
        std::size_t j = k;
        while (j < count && R.compare(records.data() + idx[j] * st, r) == 0) {
            c = R.field().add(c, coeffs[idx[j]] % R.characteristic());
            ++j;
        }
        if (c != 0) {
            f.records_.insert(f.records_.end(), r, r + st);
            f.coeffs_.push_back(c);
        }
        k = j;
    }
    return f;
}

Polynomial Polynomial::from_sorted_records(RingPtr ring, std::vector<Exponent> records, std::vector<Coeff> coeffs) {
    Polynomial f(std::move(ring));
    f.records_ = std::move(records);
    f.coeffs_ = std::move(coeffs);
    return f;
}

bool Polynomial::is_constant() const noexcept { return coeffs_.empty() || (coeffs_.size() == 1 && records_[0] == 0); }

Monomial Polynomial::monomial(std::size_t i) const {
    const Exponent* r = record(i);
    return Monomial(std::vector<Exponent>(r + 1, r + ring_->stride()));
}

std::optional<std::uint64_t> Polynomial::degree() const noexcept {
    if (is_zero()) return std::nullopt;
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < size(); ++i) d = std::max<std::uint64_t>(d, term_degree(i));
    return d;
}

Homogeneity Polynomial::homogeneity() const noexcept {
    if (is_zero()) return {true, std::nullopt};
    const std::uint64_t d = term_degree(0);
    for (std::size_t i = 1; i < size(); ++i)
        if (term_degree(i) != d) return {false, std::nullopt};
    return {true, d};
}

Polynomial Polynomial::operator-() const {
    Polynomial g = *this;
    for (Coeff& c : g.coeffs_) c = ring_->field().neg(c);
    return g;
}

Polynomial Polynomial::scaled(Coeff c) const {
    c %= ring_->characteristic();
    if (c == 0) return Polynomial(ring_);
    Polynomial g = *this;
    for (Coeff& x : g.coeffs_) x = ring_->field().mul(x, c);
    return g;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
    c %= ring_->characteristic();
    if (c == 0 || is_zero()) return Polynomial(ring_);
    const std::size_t st = ring_->stride();
    Polynomial g(ring_);
    g.records_ = records_;
    g.coeffs_ = coeffs_;
    for (std::size_t i = 0; i < size(); ++i) {
        Exponent* r = g.records_.data() + i * st;
        r[0] = checked_exponent(std::uint64_t{r[0]} + m.total_degree());
        for (std::size_t v = 0; v < ring_->nvars(); ++v) r[v + 1] += m[v];
        g.coeffs_[i] = ring_->field().mul(g.coeffs_[i], c);
    }
    return g;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::map_to(RingPtr target, std::span<const std::size_t> var_map) const {
    if (target->characteristic() != ring_->characteristic())
        throw RingMismatch("cannot map between different characteristics");
    if (var_map.size() != ring_->nvars()) throw InvalidArgument("variable map has the wrong length");
    const std::size_t st = ring_->stride(), tst = target->stride();
    std::vector<Exponent> recs(size() * tst, 0);
    for (std::size_t i = 0; i < size(); ++i) {
        const Exponent* r = record(i);
        Exponent* t = recs.data() + i * tst;
        t[0] = r[0];
        for (std::size_t v = 0; v < ring_->nvars(); ++v) t[var_map[v] + 1] += r[v + 1];
        (void)st;
    }
    return from_unsorted_records(std::move(target), std::move(recs), coeffs_);
}

Polynomial Polynomial::with_ring_order(RingPtr target) const {
    if (target->variables() != ring_->variables() || target->characteristic() != ring_->characteristic())
        throw RingMismatch("reordering requires the same variables");
    return from_unsorted_records(std::move(target), records_, coeffs_);
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        std::int64_t c = ring_->field().centered(coeffs_[i]);
        const bool constant_term = term_degree(i) == 0;
        if (i == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        bool wrote = false;
        if (a != 1 || constant_term) {
            os << a;
            wrote = true;
        }
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            Exponent e = exponent(i, v);
            if (e == 0) continue;
            if (wrote) os << "*";
            os << ring_->variables()[v];
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

namespace {

// f + s*g for a scalar s, by merging the two sorted term lists.
Polynomial merge_add(const Polynomial& f, const Polynomial& g, Coeff s) {
    require_same_ring(f, g);
    const Ring& R = *f.ring();
    const PrimeField& F = R.field();
    const std::size_t st = R.stride();
    std::vector<Exponent> recs;
    std::vector<Coeff> cs;
    recs.reserve((f.size() + g.size()) * st);
    cs.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        int c;
        if (i == f.size()) c = -1;
        else if (j == g.size()) c = 1;
        else c = R.compare(f.record(i), g.record(j));
        if (c > 0) {
            recs.insert(recs.end(), f.record(i), f.record(i) + st);
            cs.push_back(f.coeff(i));
            ++i;
        } else if (c < 0) {
            Coeff v = F.mul(g.coeff(j), s);
            if (v) {
                recs.insert(recs.end(), g.record(j), g.record(j) + st);
                cs.push_back(v);
            }
            ++j;
        } else {
            Coeff v = F.add(f.coeff(i), F.mul(g.coeff(j), s));
            if (v) {
                recs.insert(recs.end(), f.record(i), f.record(i) + st);
                cs.push_back(v);
            }
            ++i;
            ++j;
        }
    }
    return Polynomial::from_sorted_records(f.ring(), std::move(recs), std::move(cs));
}

} // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge_add(f, g, 1); }

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    return merge_add(f, g, f.ring()->field().neg(1));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
    const Ring& R = *f.ring();
    const std::size_t st = R.stride();
    const std::size_t n = R.nvars();
    std::vector<Exponent> recs(f.size() * g.size() * st);
    std::vector<Coeff> cs(f.size() * g.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Exponent* a = f.record(i);
        for (std::size_t j = 0; j < g.size(); ++j, ++k) {
            const Exponent* b = g.record(j);
            Exponent* r = recs.data() + k * st;
            r[0] = checked_exponent(std::uint64_t{a[0]} + b[0]);
            for (std::size_t v = 1; v <= n; ++v) r[v] = a[v] + b[v];
            cs[k] = R.field().mul(f.coeff(i), g.coeff(j));
        }
    }
    return Polynomial::from_unsorted_records(f.ring(), std::move(recs), std::move(cs));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.ring_->same_as(*g.ring_) && f.coeffs_ == g.coeffs_ && f.records_ == g.records_;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::uint64_t prime_power(std::uint64_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > kExponentLimit / p) throw ExponentOverflow("p^e exceeds the exponent word");
        q *= p;
    }
    return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
    const std::uint64_t q = prime_power(f.ring()->characteristic(), e);
    if (q == 1) return f;
    std::vector<Exponent> recs(f.records().begin(), f.records().end());
    // Scaling every exponent vector by q preserves any monomial order, so the
    // result is already in canonical order.
    for (Exponent& x : recs) x = checked_exponent(std::uint64_t{x} * q);
    return Polynomial::from_sorted_records(f.ring(), std::move(recs),
                                           std::vector<Coeff>(f.coeffs().begin(), f.coeffs().end()));
}

Homogeneity is_homogeneous(const Polynomial& f) { return f.homogeneity(); }

} // namespace fthr
