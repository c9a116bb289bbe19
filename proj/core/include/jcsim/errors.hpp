#pragma once

#include <stdexcept>
#include <string>

namespace jcsim {

// Broad failure categories. The CLI maps `invalid_argument` to exit code 2
// and every other category to exit code 3.
enum class ErrorCategory {
    invalid_argument,
    numeric,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

#define JCSIM_DEFINE_ERROR(Name, Category)                                     \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(ErrorCategory::Category, what) {}                          \
    }

// A photon number or support exceeds the representable cutoff.
JCSIM_DEFINE_ERROR(TruncationError, invalid_argument);
// Two operands were built over different cutoffs.
JCSIM_DEFINE_ERROR(ShapeError, invalid_argument);
// Operation requires a unit-norm state.
JCSIM_DEFINE_ERROR(NormalizationError, invalid_argument);
JCSIM_DEFINE_ERROR(InvalidSpecError, invalid_argument);
JCSIM_DEFINE_ERROR(ArgumentError, invalid_argument);

// A superposition cancelled to the zero vector.
JCSIM_DEFINE_ERROR(DegenerateStateError, numeric);
// The requested measurement outcome has (numerically) zero probability.
JCSIM_DEFINE_ERROR(DegenerateEventError, numeric);
// Mandel Q requested for a state with vanishing mean photon number.
JCSIM_DEFINE_ERROR(UndefinedQError, numeric);
JCSIM_DEFINE_ERROR(ConvergenceError, numeric);
// A distribution is not concentrated on two Fock components.
JCSIM_DEFINE_ERROR(NotTwoComponentError, numeric);

#undef JCSIM_DEFINE_ERROR

}  // namespace jcsim
