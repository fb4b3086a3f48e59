#pragma once
#include <stdexcept>
#include <string>

namespace fracfield {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exceptions that signal a numerical limitation rather than bad input.
struct NumericError : Error {
  using Error::Error;
};

struct NonConvergence : NumericError { using NumericError::NumericError; };
struct QuadratureFailure : NumericError { using NumericError::NumericError; };
struct DifferentiationFailure : NumericError { using NumericError::NumericError; };
struct ContourFailure : NumericError { using NumericError::NumericError; };
struct TailDominance : NumericError { using NumericError::NumericError; };
struct SlowDecay : NumericError { using NumericError::NumericError; };
struct CoincidentPoles : NumericError { using NumericError::NumericError; };

struct DomainError : Error { using Error::Error; };
struct ValidityError : Error { using Error::Error; };
struct NoClosedForm : Error { using Error::Error; };
struct NoSeriesForm : Error { using Error::Error; };
struct OutOfRegime : Error { using Error::Error; };

}  // namespace fracfield
