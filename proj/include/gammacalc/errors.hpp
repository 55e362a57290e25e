#ifndef GAMMACALC_ERRORS_HPP
#define GAMMACALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammacalc {

// Base of every domain error raised by the library. Malformed input that is
// not a law violation is reported as std::invalid_argument instead.
class GammaError : public std::runtime_error
{
public:
  GammaError(std::string kind, std::string const &what)
  : std::runtime_error(kind + ": " + what),
    _kind(std::move(kind))
  {}

  std::string const &kind() const { return _kind; }

private:
  std::string _kind;
};

#define GAMMACALC_ERROR(NAME)                                                  \
  class NAME : public GammaError                                               \
  {                                                                            \
  public:                                                                      \
    explicit NAME(std::string const &what) : GammaError(#NAME, what) {}        \
  };

GAMMACALC_ERROR(SubsetNotInvariant)
GAMMACALC_ERROR(DegreeMismatch)
GAMMACALC_ERROR(SubobjectNotClosed)
GAMMACALC_ERROR(NotCofibrant)
GAMMACALC_ERROR(NotGenerated)
GAMMACALC_ERROR(BinaturalityViolation)
GAMMACALC_ERROR(TheoryInvalid)
GAMMACALC_ERROR(AlgebraInvalid)
GAMMACALC_ERROR(NotReflexive)
GAMMACALC_ERROR(StructureNotInduced)
GAMMACALC_ERROR(SizeGuard)

#undef GAMMACALC_ERROR

// Element budget for iterated constructions. Initialised from the
// GAMMACALC_BUDGET environment variable, default 100000.
std::size_t element_budget();
void set_element_budget(std::size_t budget);

// Throws SizeGuard if count exceeds the budget.
void check_budget(std::size_t count, char const *what);

} // namespace gammacalc

#endif // GAMMACALC_ERRORS_HPP
