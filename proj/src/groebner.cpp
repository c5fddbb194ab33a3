#include "fthr/groebner.hpp"

#include "fthr/errors.hpp"
#include "fthr/limits.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>

namespace fthr {

Limits& limits() {
    static Limits instance;
    return instance;
}

namespace {

std::uint64_t support_mask(const Exponent* record, std::size_t nvars) noexcept {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < nvars; ++v)
        if (record[v + 1]) m |= std::uint64_t{1} << (v % 64);
    return m;
}

bool record_divides(const Exponent* a, const Exponent* b, std::size_t nvars) noexcept {
    if (a[0] > b[0]) return false;
    for (std::size_t v = 1; v <= nvars; ++v)
        if (a[v] > b[v]) return false;
    return true;
}

// Working polynomial for reductions: sorted term list consumed from the front.
struct Work {
    std::vector<Exponent> recs;
    std::vector<Coeff> cs;
    std::size_t head = 0;

    bool empty() const noexcept { return head == cs.size(); }
};

// Replace w by w − c·u·g where the leading terms cancel; u is the record
// lm(w) − lm(g). Both leading terms are skipped.
void subtract_multiple(Work& w, const Polynomial& g, const Exponent* u, Coeff c, const Ring& R,
                       std::vector<Exponent>& shifted, Work& out) {
    const std::size_t st = R.stride();
    const std::size_t n = R.nvars();
    const PrimeField& F = R.field();
    const Coeff neg_c = F.neg(c);
    out.recs.clear();
    out.cs.clear();
    out.head = 0;
    const std::size_t fsz = w.cs.size();
    std::size_t i = w.head + 1, j = 1;
    shifted.resize(st);
    auto load = [&](std::size_t k) {
        const Exponent* r = g.record(k);
        for (std::size_t v = 0; v <= n; ++v) shifted[v] = r[v] + u[v];
    };
    if (j < g.size()) load(j);
    while (i < fsz || j < g.size()) {
        int cmp;
        if (i == fsz) cmp = -1;
        else if (j == g.size()) cmp = 1;
        else cmp = R.compare(w.recs.data() + i * st, shifted.data());
        if (cmp > 0) {
            out.recs.insert(out.recs.end(), w.recs.data() + i * st, w.recs.data() + (i + 1) * st);
            out.cs.push_back(w.cs[i]);
            ++i;
        } else if (cmp < 0) {
            out.recs.insert(out.recs.end(), shifted.begin(), shifted.end());
            out.cs.push_back(F.mul(g.coeff(j), neg_c));
            ++j;
            if (j < g.size()) load(j);
        } else {
            Coeff v = F.add(w.cs[i], F.mul(g.coeff(j), neg_c));
            if (v) {
                out.recs.insert(out.recs.end(), shifted.begin(), shifted.end());
                out.cs.push_back(v);
            }
            ++i;
            ++j;
            if (j < g.size()) load(j);
        }
    }
    std::swap(w, out);
}

struct Reducer {
    const Ring& R;
    // Candidate reducers: monic polynomials with cached lead data.
    std::vector<const Polynomial*> polys;
    std::vector<const Exponent*> leads;
    std::vector<std::uint64_t> masks;

    explicit Reducer(const Ring& ring) : R(ring) {}

    void add(const Polynomial* p, const Exponent* lead, std::uint64_t mask) {
        polys.push_back(p);
        leads.push_back(lead);
        masks.push_back(mask);
    }

    std::ptrdiff_t find_divisor(const Exponent* rec) const noexcept {
        const std::uint64_t m = support_mask(rec, R.nvars());
        for (std::size_t k = 0; k < polys.size(); ++k) {
            if ((masks[k] & ~m) != 0) continue;
            if (record_divides(leads[k], rec, R.nvars())) return static_cast<std::ptrdiff_t>(k);
        }
        return -1;
    }

    // Full normal form: top and tail reduction.
    Polynomial reduce(const Polynomial& f) const {
        const std::size_t st = R.stride();
        Work w{std::vector<Exponent>(f.records().begin(), f.records().end()),
               std::vector<Coeff>(f.coeffs().begin(), f.coeffs().end()), 0};
        Work scratch;
        std::vector<Exponent> shifted, u(st);
        std::vector<Exponent> out_recs;
        std::vector<Coeff> out_cs;
        while (!w.empty()) {
            const Exponent* lead = w.recs.data() + w.head * st;
            std::ptrdiff_t k = find_divisor(lead);
            if (k < 0) {
                out_recs.insert(out_recs.end(), lead, lead + st);
                out_cs.push_back(w.cs[w.head]);
                ++w.head;
                continue;
            }
            const Exponent* gl = leads[k];
            for (std::size_t v = 0; v < st; ++v) u[v] = lead[v] - gl[v];
            subtract_multiple(w, *polys[k], u.data(), w.cs[w.head], R, shifted, scratch);
        }
        return Polynomial::from_sorted_records(f.ring(), std::move(out_recs), std::move(out_cs));
    }

    bool reduces_to_zero(const Polynomial& f) const {
        const std::size_t st = R.stride();
        Work w{std::vector<Exponent>(f.records().begin(), f.records().end()),
               std::vector<Coeff>(f.coeffs().begin(), f.coeffs().end()), 0};
        Work scratch;
        std::vector<Exponent> shifted, u(st);
        while (!w.empty()) {
            const Exponent* lead = w.recs.data() + w.head * st;
            std::ptrdiff_t k = find_divisor(lead);
            if (k < 0) return false;
            const Exponent* gl = leads[k];
            for (std::size_t v = 0; v < st; ++v) u[v] = lead[v] - gl[v];
            subtract_multiple(w, *polys[k], u.data(), w.cs[w.head], R, shifted, scratch);
        }
        return true;
    }
};

struct Entry {
    Polynomial poly;
    std::vector<Exponent> lead;
    std::uint64_t mask;
    std::uint64_t sugar;
    bool active;
};

struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
    std::uint64_t sugar;
};

std::vector<Exponent> lcm_record(const Exponent* a, const Exponent* b, std::size_t n) {
    std::vector<Exponent> r(n + 1);
    std::uint64_t d = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        r[v] = std::max(a[v], b[v]);
        d += r[v];
    }
    if (d > std::numeric_limits<Exponent>::max()) throw ExponentOverflow("lcm degree overflow");
    r[0] = static_cast<Exponent>(d);
    return r;
}

bool coprime(const Exponent* a, const Exponent* b, std::size_t n) noexcept {
    for (std::size_t v = 1; v <= n; ++v)
        if (a[v] && b[v]) return false;
    return true;
}

class Buchberger {
public:
    Buchberger(RingPtr ring, const GroebnerOptions& opt) : ring_(std::move(ring)), R_(*ring_), opt_(opt) {
        budget_ = opt.max_pairs ? opt.max_pairs : limits().max_gb_pairs;
    }

    GroebnerBasis run(std::vector<Polynomial> input) {
        // Seed with the inputs sorted by leading monomial, each reduced
        // against those already present.
        std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
            return R_.compare(a.record(0), b.record(0)) < 0;
        });
        for (Polynomial& f : input) {
            Polynomial h = reducer().reduce(f);
            if (h.is_zero()) continue;
            insert(h.monic(), h.homogeneity().homogeneous ? *h.degree() : *f.degree());
            if (unit_) return finish();
        }
        while (!pairs_.empty()) {
            Pair pr = std::move(pairs_.back());
            pairs_.pop_back();
            if (opt_.max_degree && pr.lcm[0] > *opt_.max_degree) continue;
            if (++stats_.pairs_reduced > budget_)
                throw SearchBudgetExceeded("Buchberger exceeded " + std::to_string(budget_) + " S-pairs");
            Polynomial s = s_polynomial(pr);
            Polynomial h = reducer().reduce(s);
            if (h.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            insert(h.monic(), pr.sugar);
            if (unit_) break;
        }
        return finish();
    }

private:
    const Reducer& reducer() {
        if (!reducer_valid_) {
            reducer_cache_ = std::make_unique<Reducer>(R_);
            for (const Entry& e : basis_)
                if (e.active) reducer_cache_->add(&e.poly, e.lead.data(), e.mask);
            reducer_valid_ = true;
        }
        return *reducer_cache_;
    }

    Polynomial s_polynomial(const Pair& pr) const {
        const Entry& a = basis_[pr.i];
        const Entry& b = basis_[pr.j];
        const std::size_t n = R_.nvars();
        std::vector<Exponent> ua(n), ub(n);
        for (std::size_t v = 0; v < n; ++v) {
            ua[v] = pr.lcm[v + 1] - a.lead[v + 1];
            ub[v] = pr.lcm[v + 1] - b.lead[v + 1];
        }
        return a.poly.times_term(Monomial(std::move(ua)), 1) - b.poly.times_term(Monomial(std::move(ub)), 1);
    }

    void insert(Polynomial h, std::uint64_t sugar) {
        const std::size_t n = R_.nvars();
        if (h.is_constant()) unit_ = true;
        Entry e{h, std::vector<Exponent>(h.record(0), h.record(0) + R_.stride()), support_mask(h.record(0), n),
                sugar, true};
        const std::size_t hi = basis_.size();
        basis_.push_back(std::move(e));
        reducer_valid_ = false;
        if (unit_) return;
        update(hi);
    }

    // Gebauer–Möller pair update for the new element hi.
    void update(std::size_t hi) {
        const std::size_t n = R_.nvars();
        const Exponent* lh = basis_[hi].lead.data();

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < hi; ++g) {
            if (!basis_[g].active) continue;
            ++stats_.pairs_considered;
            const Entry& eg = basis_[g];
            Pair p{g, hi, lcm_record(lh, eg.lead.data(), n), 0};
            std::uint64_t sa = eg.sugar + (p.lcm[0] - eg.lead[0]);
            std::uint64_t sb = basis_[hi].sugar + (p.lcm[0] - lh[0]);
            p.sugar = std::max(sa, sb);
            candidates.push_back(std::move(p));
        }

        // Criterion M/F on the new pairs.
        std::vector<bool> keep(candidates.size(), false);
        std::vector<bool> alive(candidates.size(), true);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Pair& pc = candidates[c];
            alive[c] = false;
            bool kept = coprime(lh, basis_[pc.i].lead.data(), n);
            if (!kept) {
                kept = true;
                for (std::size_t d = 0; d < candidates.size(); ++d) {
                    if (d == c || !(alive[d] || keep[d])) continue;
                    if (record_divides(candidates[d].lcm.data(), pc.lcm.data(), n)) {
                        kept = false;
                        break;
                    }
                }
            }
            keep[c] = kept;
        }
        std::vector<Pair> fresh;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!keep[c]) continue;
            // Product criterion.
            if (coprime(lh, basis_[candidates[c].i].lead.data(), n)) continue;
            fresh.push_back(std::move(candidates[c]));
        }

        // Criterion B on old pairs.
        std::vector<Pair> survivors;
        survivors.reserve(pairs_.size() + fresh.size());
        for (Pair& p : pairs_) {
            bool drop = false;
            if (record_divides(lh, p.lcm.data(), n)) {
                auto l1 = lcm_record(basis_[p.i].lead.data(), lh, n);
                auto l2 = lcm_record(basis_[p.j].lead.data(), lh, n);
                drop = l1 != p.lcm && l2 != p.lcm;
            }
            if (!drop) survivors.push_back(std::move(p));
        }
        for (Pair& p : fresh) survivors.push_back(std::move(p));
        pairs_ = std::move(survivors);

        for (std::size_t g = 0; g < hi; ++g)
            if (basis_[g].active && record_divides(lh, basis_[g].lead.data(), n)) basis_[g].active = false;

        // Smallest pair (sugar, then lcm) at the back.
        std::sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar > b.sugar;
            return R_.compare(a.lcm.data(), b.lcm.data()) > 0;
        });
    }

    GroebnerBasis finish() {
        const std::size_t n = R_.nvars();
        if (unit_) {
            std::vector<Polynomial> one{Polynomial::constant(ring_, 1)};
            return GroebnerBasis(ring_, std::move(one), opt_.max_degree, stats_);
        }
        // Minimal basis: active elements no leading monomial of which is
        // divisible by another's.
        std::vector<const Entry*> minimal;
        for (const Entry& e : basis_) {
            if (!e.active) continue;
            bool redundant = false;
            for (const Entry* m : minimal)
                if (record_divides(m->lead.data(), e.lead.data(), n)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                         [&](const Entry* m) { return record_divides(e.lead.data(), m->lead.data(), n); }),
                          minimal.end());
            minimal.push_back(&e);
        }
        // Interreduce tails.
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            Reducer red(R_);
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k) red.add(&minimal[l]->poly, minimal[l]->lead.data(), minimal[l]->mask);
            const Polynomial& f = minimal[k]->poly;
            Polynomial lead = Polynomial::from_sorted_records(
                ring_, std::vector<Exponent>(f.record(0), f.record(0) + R_.stride()), {f.coeff(0)});
            Polynomial tail = f - lead;
            out.push_back(lead + red.reduce(tail));
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return R_.compare(a.record(0), b.record(0)) < 0;
        });
        return GroebnerBasis(ring_, std::move(out), opt_.max_degree, stats_);
    }

    RingPtr ring_;
    const Ring& R_;
    GroebnerOptions opt_;
    std::uint64_t budget_;
    std::vector<Entry> basis_;
    std::vector<Pair> pairs_;
    GroebnerStats stats_;
    bool unit_ = false;
    std::unique_ptr<Reducer> reducer_cache_;
    bool reducer_valid_ = false;
};

} // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, std::optional<std::uint64_t> degree_bound,
                             GroebnerStats stats)
    : ring_(std::move(ring)), elements_(std::move(elements)), degree_bound_(degree_bound), stats_(stats) {
    for (const Polynomial& g : elements_) {
        leads_.push_back({std::vector<Exponent>(g.record(0), g.record(0) + ring_->stride()),
                          support_mask(g.record(0), ring_->nvars())});
    }
}

bool GroebnerBasis::is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const Polynomial& g : elements_) out.push_back(g.leading_monomial());
    return out;
}

bool GroebnerBasis::leading_monomial_divides(const Exponent* record) const noexcept {
    const std::uint64_t m = support_mask(record, ring_->nvars());
    for (const Lead& l : leads_) {
        if ((l.mask & ~m) != 0) continue;
        if (record_divides(l.record.data(), record, ring_->nvars())) return true;
    }
    return false;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    Polynomial g = f.ring()->same_as(*ring_) ? f : f.with_ring_order(ring_);
    Reducer red(*ring_);
    for (std::size_t k = 0; k < elements_.size(); ++k) red.add(&elements_[k], leads_[k].record.data(), leads_[k].mask);
    return red.reduce(g);
}

bool GroebnerBasis::reduces_to_zero(const Polynomial& f) const {
    if (f.is_zero()) return true;
    Polynomial g = f.ring()->same_as(*ring_) ? f : f.with_ring_order(ring_);
    Reducer red(*ring_);
    for (std::size_t k = 0; k < elements_.size(); ++k) red.add(&elements_[k], leads_[k].record.data(), leads_[k].mask);
    return red.reduces_to_zero(g);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
    if (generators.empty()) throw InvalidArgument("buchberger needs at least one generator to fix the ring");
    const RingPtr& base = generators.front().ring();
    RingPtr ring = base->order() == order ? base : base->with_order(order);
    std::vector<Polynomial> input;
    for (const Polynomial& g : generators) {
        if (g.ring()->variables() != ring->variables() || g.ring()->characteristic() != ring->characteristic())
            throw RingMismatch("generators live in different rings");
        if (g.is_zero()) continue;
        input.push_back(g.ring()->same_as(*ring) ? g : g.with_ring_order(ring));
    }
    if (input.empty()) return GroebnerBasis(ring, {}, options.max_degree, {});
    Buchberger engine(ring, options);
    return engine.run(std::move(input));
}

// ---------------------------------------------------------------- cache

namespace {

std::string cache_key(const Ideal& I) {
    std::vector<std::string> parts;
    for (const Polynomial& g : I.generators()) {
        Polynomial m = g.monic();
        std::string s(reinterpret_cast<const char*>(m.records().data()), m.records().size() * sizeof(Exponent));
        s.append(reinterpret_cast<const char*>(m.coeffs().data()), m.coeffs().size() * sizeof(Coeff));
        parts.push_back(std::move(s));
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    const Ring& R = *I.ring();
    std::string key = std::to_string(R.characteristic()) + "|" + R.order().name() + "|";
    for (const std::string& v : R.variables()) key += v + ",";
    for (const std::string& p : parts) key += std::to_string(p.size()) + ":" + p;
    return key;
}

class GroebnerCache {
public:
    std::shared_ptr<const GroebnerBasis> find(const std::string& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second;
    }
    void store(const std::string& key, std::shared_ptr<const GroebnerBasis> gb) {
        std::lock_guard<std::mutex> lock(mu_);
        if (map_.size() > 512) map_.clear();
        map_.emplace(key, std::move(gb));
    }

private:
    std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> map_;
};

GroebnerCache& global_cache() {
    static GroebnerCache cache;
    return cache;
}

} // namespace

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (Polynomial& g : generators) {
        require_same_ring(*g.ring(), *ring_);
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(std::move(ring), std::move(vars));
}

bool Ideal::is_homogeneous() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.homogeneity().homogeneous; });
}

bool Ideal::is_monomial() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::optional<std::uint64_t> Ideal::max_generator_degree() const noexcept {
    std::optional<std::uint64_t> d;
    for (const Polynomial& g : gens_) d = std::max(d.value_or(0), *g.degree());
    return d;
}

const GroebnerBasis& Ideal::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        if (gens_.empty()) {
            cache_->gb = std::make_shared<const GroebnerBasis>(ring_, std::vector<Polynomial>{}, std::nullopt,
                                                               GroebnerStats{});
        } else {
            const std::string key = cache_key(*this);
            cache_->gb = global_cache().find(key);
            if (!cache_->gb) {
                cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, ring_->order()));
                global_cache().store(key, cache_->gb);
            }
        }
    }
    return *cache_->gb;
}

Ideal Ideal::operator+(const Ideal& other) const {
    require_same_ring(*ring_, *other.ring_);
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
    require_same_ring(*ring_, *other.ring_);
    std::vector<Polynomial> g;
    for (const Polynomial& a : gens_)
        for (const Polynomial& b : other.gens_) g.push_back(a * b);
    return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    require_same_ring(*f.ring(), *I.ring());
    if (f.is_zero()) return true;
    if (I.has_no_generators()) return false;
    return I.groebner().reduces_to_zero(f);
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    for (const Polynomial& g : J.generators())
        if (!ideal_membership(g, I)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring());
    const RingPtr& R = I.ring();
    if (I.has_no_generators() || J.has_no_generators()) return Ideal::zero(R);
    const std::size_t n = R->nvars();
    std::string tag = "_t";
    while (std::find(R->variables().begin(), R->variables().end(), tag) != R->variables().end()) tag += "_";
    RingPtr T = R->with_leading_variables({tag}, MonomialOrder::elimination({1, n}));
    std::vector<std::size_t> shift(n);
    for (std::size_t v = 0; v < n; ++v) shift[v] = v + 1;
    Polynomial t = Polynomial::variable(T, 0);
    Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(t * g.map_to(T, shift));
    for (const Polynomial& g : J.generators()) gens.push_back(one_minus_t * g.map_to(T, shift));
    GroebnerBasis gb = buchberger(gens, T->order());
    std::vector<std::size_t> back(n + 1);
    back[0] = 0;
    for (std::size_t v = 0; v < n; ++v) back[v + 1] = v;
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements()) {
        bool free_of_tag = true;
        for (std::size_t k = 0; k < g.size() && free_of_tag; ++k) free_of_tag = g.exponent(k, 0) == 0;
        if (!free_of_tag) continue;
        // Drop the tag coordinate; reuse map_to onto a ring with the tag merged away.
        std::vector<Exponent> recs;
        std::vector<Coeff> cs;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const Exponent* r = g.record(k);
            recs.push_back(r[0]);
            recs.insert(recs.end(), r + 2, r + 2 + n);
            cs.push_back(g.coeff(k));
        }
        out.push_back(Polynomial::from_unsorted_records(R, std::move(recs), std::move(cs)));
    }
    return Ideal(R, std::move(out));
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& g) {
    require_same_ring(h, g);
    if (g.is_zero()) throw DivisionByZeroGenerator("division by the zero polynomial");
    const Ring& R = *g.ring();
    const std::size_t n = R.nvars();
    Polynomial rest = h;
    std::vector<std::pair<Monomial, std::int64_t>> q;
    const Coeff inv_lc = R.field().inv(g.leading_coeff());
    while (!rest.is_zero()) {
        if (!record_divides(g.record(0), rest.record(0), n)) throw InvalidArgument("division is not exact");
        Monomial lg = g.leading_monomial();
        Monomial u = lg.quotient_of(rest.leading_monomial());
        Coeff c = R.field().mul(rest.leading_coeff(), inv_lc);
        rest = rest - g.times_term(u, c);
        q.emplace_back(std::move(u), c);
    }
    return Polynomial::from_terms(g.ring(), std::move(q));
}

Ideal colon_by_element(const Ideal& I, const Polynomial& g) {
    require_same_ring(*I.ring(), *g.ring());
    if (g.is_zero()) throw DivisionByZeroGenerator("colon by the zero polynomial");
    if (g.is_constant()) return I;
    if (I.has_no_generators()) return I;
    Ideal meet = ideal_intersection(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> out;
    for (const Polynomial& h : meet.generators()) out.push_back(divide_exact(h, g));
    return Ideal(I.ring(), std::move(out));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring());
    if (J.has_no_generators()) throw DivisionByZeroGenerator("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const Polynomial& g : J.generators()) {
        Ideal c = colon_by_element(I, g);
        // (I : g) = S when g ∈ I; it does not cut the intersection down.
        if (acc && c.is_unit()) continue;
        acc = acc && !acc->is_unit() ? ideal_intersection(*acc, c) : c;
    }
    Ideal out = *acc;
    // Return the reduced basis as generators so later Frobenius powers stay small.
    if (!out.has_no_generators()) return Ideal(out.ring(), out.groebner().elements());
    return out;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    require_same_ring(*f.ring(), *I.ring());
    if (ideal_membership(f, I)) return true;
    if (I.has_no_generators()) return false;
    const RingPtr& R = I.ring();
    const std::size_t n = R->nvars();
    std::string tag = "_t";
    while (std::find(R->variables().begin(), R->variables().end(), tag) != R->variables().end()) tag += "_";
    RingPtr T = R->with_leading_variables({tag}, MonomialOrder::grevlex());
    std::vector<std::size_t> shift(n);
    for (std::size_t v = 0; v < n; ++v) shift[v] = v + 1;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(g.map_to(T, shift));
    gens.push_back(Polynomial::constant(T, 1) - Polynomial::variable(T, 0) * f.map_to(T, shift));
    return buchberger(gens, T->order()).is_unit();
}

} // namespace fthr
