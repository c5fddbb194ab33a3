#ifndef FTHR_IDEAL_CALCULUS_HPP
#define FTHR_IDEAL_CALCULUS_HPP

#include "fthr/groebner.hpp"
#include "fthr/quotient.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace fthr {

// Generators of a^t for increasing t. a^(t+1) is built from a^t times the
// generators of a; each product is formed once per multiset of generator
// indices and exact duplicates are dropped.
class PowerCache {
public:
    // max_t bounds how far the ladder may grow (default limits().max_power).
    explicit PowerCache(Ideal base, std::optional<std::uint64_t> max_t = std::nullopt);

    const Ideal& base() const noexcept { return base_; }
    // True when the base is the irrelevant ideal of its ring.
    bool is_maximal() const noexcept { return maximal_; }
    std::uint64_t max_t() const noexcept { return max_t_; }

    // References stay valid for the cache's lifetime.
    const std::vector<Polynomial>& generators(std::uint64_t t);
    Ideal power(std::uint64_t t) { return Ideal(base_.ring(), generators(t)); }

private:
    struct Level {
        std::vector<Polynomial> gens;
        std::vector<std::size_t> last; // largest base index used by each product
    };

    Ideal base_;
    std::vector<Polynomial> base_gens_;
    bool maximal_ = false;
    std::uint64_t max_t_;
    std::mutex mu_;
    std::deque<Level> levels_;
};

Ideal ideal_power(const Ideal& a, std::uint64_t t);
// (g_1..g_k)^[p^e] = (g_1^(p^e)..g_k^(p^e))
Ideal bracket_power(const Ideal& J, unsigned e);
// J + I in the ambient ring.
Ideal in_quotient(const Ideal& J, const QuotientContext& ctx);

struct MinimalGenerators {
    std::uint64_t mu = 0;
    // Largest degree of a minimal homogeneous generator.
    std::uint64_t max_degree = 0;
    std::vector<Polynomial> generators;
};

// Minimal homogeneous generators of a (of aR when ctx is given): drop a
// generator when it lies in the ideal of the rest (plus I), trying higher
// degrees first.
MinimalGenerators minimal_generators(const Ideal& a, const QuotientContext* ctx = nullptr);

// a is the irrelevant ideal (x_1..x_n).
bool is_maximal_ideal(const Ideal& a);

} // namespace fthr

#endif // FTHR_IDEAL_CALCULUS_HPP
