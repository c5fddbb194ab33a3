#ifndef FTHR_PROBLEM_HPP
#define FTHR_PROBLEM_HPP

#include "fthr/groebner.hpp"
#include "fthr/quotient.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fthr {

// A problem file: the ring, the quotient and named ideals.
//
//   p = 3
//   vars = x, y, z, w
//   quotient = x*y - z*w
//   ideal J = x, y, z + w
//   emax = 2
//
// Lines starting with '#' are comments. The name m is reserved for the
// irrelevant ideal.
struct ProblemFile {
    std::uint64_t p = 0;
    std::vector<std::string> vars;
    std::vector<Polynomial> quotient;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
    std::optional<unsigned> emax, smax;
    std::optional<std::uint64_t> max_gb_pairs, max_power;

    RingPtr ring() const;
    QuotientContext context(ComputeOptions options = {}) const;
    // Named ideal, m, or an inline comma-separated generator list.
    Ideal ideal(const std::string& name_or_generators) const;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

ProblemFile parse_problem(std::string_view text);

// Polynomial expression in the given ring: integers, variables, + - * ^ and
// parentheses. line/column locate the text for diagnostics.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column = 1);

// Text that parse_problem maps back to an equal problem.
std::string render_problem(const ProblemFile& problem);

} // namespace fthr

#endif // FTHR_PROBLEM_HPP
