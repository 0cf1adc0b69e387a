#ifndef LAGRANGE_KIT_ERRORS_HPP
#define LAGRANGE_KIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagrange_kit
{

// Root of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define LAGRANGE_KIT_DECLARE_ERROR(name)                                                                               \
    class name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        explicit name(const std::string &what) : Error(#name ": " + what) {}                                          \
    }

// Series arithmetic.
LAGRANGE_KIT_DECLARE_ERROR(DivisionByZero);
LAGRANGE_KIT_DECLARE_ERROR(DivisionByNonUnit);
LAGRANGE_KIT_DECLARE_ERROR(DivisionByZeroSeries);
LAGRANGE_KIT_DECLARE_ERROR(TruncationMismatch);
LAGRANGE_KIT_DECLARE_ERROR(OutOfPrecision);
LAGRANGE_KIT_DECLARE_ERROR(NonIntegrableResidue);
LAGRANGE_KIT_DECLARE_ERROR(BadConstantTerm);
LAGRANGE_KIT_DECLARE_ERROR(InadmissibleComposition);
LAGRANGE_KIT_DECLARE_ERROR(NotReversible);
LAGRANGE_KIT_DECLARE_ERROR(NotAPowerSeries);

// Lagrange inversion.
LAGRANGE_KIT_DECLARE_ERROR(FormAUndefined);
LAGRANGE_KIT_DECLARE_ERROR(UnguardedCoefficient);
LAGRANGE_KIT_DECLARE_ERROR(InvalidArgument);

// Identity catalog.
LAGRANGE_KIT_DECLARE_ERROR(DegreeViolation);
LAGRANGE_KIT_DECLARE_ERROR(InsufficientRange);
LAGRANGE_KIT_DECLARE_ERROR(UnknownIdentity);

// Combinatorial oracles.
LAGRANGE_KIT_DECLARE_ERROR(SizeLimit);
LAGRANGE_KIT_DECLARE_ERROR(InvalidCode);
LAGRANGE_KIT_DECLARE_ERROR(BadSequence);
LAGRANGE_KIT_DECLARE_ERROR(NotATree);

#undef LAGRANGE_KIT_DECLARE_ERROR

// Malformed text input; position is the 0-based offset of the offending character.
class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error("ParseError at position " + std::to_string(position) + ": " + what), m_position(position)
    {
    }
    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

} // namespace lagrange_kit

#endif
