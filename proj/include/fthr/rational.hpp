#ifndef FTHR_RATIONAL_HPP
#define FTHR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fthr {

using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::uint64_t den) {
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<unsigned long>(den)));
    r.canonicalize();
    return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Always "numerator/denominator", also for integers ("2/1").
inline std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline mpz_class pow_z(std::uint64_t p, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

} // namespace fthr

#endif // FTHR_RATIONAL_HPP
