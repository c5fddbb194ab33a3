#include "fthr/linear.hpp"

#include "fthr/errors.hpp"
#include "fthr/limits.hpp"

#include <algorithm>
#include <numeric>

namespace fthr {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::size_t dense_rank(std::vector<std::vector<Coeff>>& m, std::size_t ncols, const PrimeField& F) {
    const std::uint64_t p = F.characteristic();
    std::vector<std::vector<Coeff>> pivots;
    std::vector<std::size_t> pivot_col;
    for (auto& row : m) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            const std::size_t c = pivot_col[k];
            const Coeff f = row[c];
            if (!f) continue;
            const std::uint64_t neg = p - f;
            const auto& pr = pivots[k];
            for (std::size_t j = c; j < ncols; ++j)
                if (pr[j]) row[j] = static_cast<Coeff>((row[j] + neg * pr[j]) % p);
        }
        std::size_t lead = 0;
        while (lead < ncols && !row[lead]) ++lead;
        if (lead == ncols) continue;
        const Coeff inv = F.inv(row[lead]);
        for (std::size_t j = lead; j < ncols; ++j) row[j] = F.mul(row[j], inv);
        // Keep pivots sorted by column so that the reduction sweep stays in order.
        auto pos = std::lower_bound(pivot_col.begin(), pivot_col.end(), lead) - pivot_col.begin();
        pivot_col.insert(pivot_col.begin() + pos, lead);
        pivots.insert(pivots.begin() + pos, std::move(row));
        if (pivots.size() == ncols) break;
    }
    return pivots.size();
}

} // namespace

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, const PrimeField& F) {
    if (ncols == 0) return 0;
    UnionFind uf(ncols);
    for (const SparseRow& r : rows)
        for (std::size_t k = 1; k < r.size(); ++k) uf.unite(r[0].first, r[k].first);
    // Group columns and rows by component.
    std::vector<std::uint32_t> local(ncols);
    std::unordered_map<std::uint32_t, std::uint32_t> block_of_root;
    std::vector<std::uint32_t> block_cols;
    for (std::uint32_t c = 0; c < ncols; ++c) {
        auto root = uf.find(c);
        auto [it, fresh] = block_of_root.emplace(root, static_cast<std::uint32_t>(block_cols.size()));
        if (fresh) block_cols.push_back(0);
        local[c] = block_cols[it->second]++;
    }
    std::vector<std::vector<const SparseRow*>> block_rows(block_cols.size());
    for (const SparseRow& r : rows)
        if (!r.empty()) block_rows[block_of_root[uf.find(r[0].first)]].push_back(&r);

    std::size_t rank = 0;
    std::uint64_t cells = 0;
    const std::uint64_t budget = limits().max_matrix_cells;
    for (std::size_t b = 0; b < block_cols.size(); ++b) {
        const auto& br = block_rows[b];
        if (br.empty()) continue;
        const std::size_t nc = block_cols[b];
        if (br.size() == 1 || nc == 1) {
            ++rank;
            continue;
        }
        cells += static_cast<std::uint64_t>(br.size()) * nc;
        if (cells > budget)
            throw SearchBudgetExceeded("linear algebra exceeded " + std::to_string(budget) + " matrix cells");
        std::vector<std::vector<Coeff>> dense(br.size(), std::vector<Coeff>(nc, 0));
        for (std::size_t i = 0; i < br.size(); ++i)
            for (auto [c, v] : *br[i]) dense[i][local[c]] = v;
        // Rows with early leading columns first.
        std::sort(dense.begin(), dense.end(), [](const auto& a, const auto& b) {
            auto fa = std::find_if(a.begin(), a.end(), [](Coeff v) { return v != 0; }) - a.begin();
            auto fb = std::find_if(b.begin(), b.end(), [](Coeff v) { return v != 0; }) - b.begin();
            return fa < fb;
        });
        rank += dense_rank(dense, nc, F);
    }
    return rank;
}

std::size_t DegreeSliceEngine::ExponentHash::operator()(const std::vector<Exponent>& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent x : e) h = (h ^ x) * 1099511628211ull;
    return h;
}

DegreeSliceEngine::DegreeSliceEngine(RingPtr ring, const std::vector<Polynomial>& generators)
    : ring_(std::move(ring)), monomials_(ring_->nvars()) {
    const std::size_t n = ring_->nvars();
    std::vector<std::vector<Exponent>> mono;
    for (const Polynomial& g : generators) {
        require_same_ring(*g.ring(), *ring_);
        if (g.is_zero()) continue;
        if (!g.homogeneity().homogeneous) throw NotHomogeneous("degree-slice engine needs homogeneous generators");
        if (g.is_monomial()) mono.emplace_back(g.record(0) + 1, g.record(0) + 1 + n);
        else others_.push_back(g.monic());
    }
    monomials_ = MonomialIdeal(n, std::move(mono));
}

std::optional<std::uint64_t> DegreeSliceEngine::monomial_top_degree() const {
    if (!monomials_.is_artinian()) return std::nullopt;
    if (monomials_.is_unit()) return std::nullopt;
    return artinian_top_degree(monomials_);
}

SparseRow DegreeSliceEngine::reduce_row(const Slice& s, const Polynomial& f, const std::vector<Exponent>* shift) const {
    const std::size_t n = ring_->nvars();
    SparseRow row;
    std::vector<Exponent> e(n);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Exponent* r = f.record(k);
        for (std::size_t v = 0; v < n; ++v) e[v] = r[v + 1] + (shift ? (*shift)[v] : 0);
        if (monomials_.contains(e)) continue;
        auto it = s.columns.find(e);
        if (it == s.columns.end()) throw InvalidArgument("term outside the degree slice");
        row.emplace_back(it->second, f.coeff(k));
    }
    std::sort(row.begin(), row.end());
    return row;
}

DegreeSliceEngine::Slice& DegreeSliceEngine::slice(std::uint64_t t) {
    if (current_ && current_->degree == t) return *current_;
    current_.reset();
    Slice s;
    s.degree = t;
    for_each_standard_monomial(monomials_, t, [&](const std::vector<Exponent>& e) {
        s.columns.emplace(e, static_cast<std::uint32_t>(s.columns.size()));
    });
    if (s.columns.size() > limits().max_standard_monomials)
        throw SearchBudgetExceeded("degree slice has too many monomials");
    for (const Polynomial& g : others_) {
        const std::uint64_t d = *g.degree();
        if (d > t) continue;
        for_each_standard_monomial(monomials_, t - d, [&](const std::vector<Exponent>& u) {
            SparseRow row = reduce_row(s, g, &u);
            if (!row.empty()) s.rows.push_back(std::move(row));
        });
    }
    s.rank = sparse_rank(s.rows, s.columns.size(), ring_->field());
    dims_[t] = {s.columns.size(), s.rank};
    current_ = std::move(s);
    return *current_;
}

std::uint64_t DegreeSliceEngine::quotient_dimension(std::uint64_t t) {
    auto it = dims_.find(t);
    if (it != dims_.end()) return it->second.first - it->second.second;
    const Slice& s = slice(t);
    return s.columns.size() - s.rank;
}

bool DegreeSliceEngine::contains(std::uint64_t t, const std::vector<Polynomial>& hs) {
    std::vector<SparseRow> extra;
    for (const Polynomial& h : hs) {
        if (h.is_zero()) continue;
        auto hom = h.homogeneity();
        if (!hom.homogeneous || *hom.degree != t) throw InvalidArgument("containment test needs degree-t forms");
    }
    if (hs.empty()) return true;
    Slice& s = slice(t);
    for (const Polynomial& h : hs) {
        if (h.is_zero()) continue;
        SparseRow row = reduce_row(s, h, nullptr);
        if (!row.empty()) extra.push_back(std::move(row));
    }
    if (extra.empty()) return true;
    if (s.rank == s.columns.size()) return true;
    std::vector<SparseRow> all = s.rows;
    all.insert(all.end(), extra.begin(), extra.end());
    return sparse_rank(all, s.columns.size(), ring_->field()) == s.rank;
}

} // namespace fthr
