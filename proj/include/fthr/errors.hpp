#ifndef FTHR_ERRORS_HPP
#define FTHR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fthr {

// Every failure carries a stable machine-readable code; the CLI copies it
// into the "errors" array of the report.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FTHR_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

FTHR_DEFINE_ERROR(ZeroInverse)
FTHR_DEFINE_ERROR(NotPrime)
FTHR_DEFINE_ERROR(RingMismatch)
FTHR_DEFINE_ERROR(ExponentOverflow)
FTHR_DEFINE_ERROR(DivisionByZeroGenerator)
FTHR_DEFINE_ERROR(NotZeroDimensional)
FTHR_DEFINE_ERROR(NotHomogeneous)
FTHR_DEFINE_ERROR(SearchBudgetExceeded)
FTHR_DEFINE_ERROR(NotInRadical)
FTHR_DEFINE_ERROR(EmptyIdeal)
FTHR_DEFINE_ERROR(UnitIdeal)
FTHR_DEFINE_ERROR(NotFPure)
FTHR_DEFINE_ERROR(NotSystemOfParameters)
FTHR_DEFINE_ERROR(NotCompleteIntersection)
FTHR_DEFINE_ERROR(NotHomogeneousInput)
FTHR_DEFINE_ERROR(InvalidArgument)

#undef FTHR_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace fthr

#endif // FTHR_ERRORS_HPP
