#pragma once

#include <stdexcept>

namespace drumgeo {

// Base for all library errors, so callers can catch one type at the boundary.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error { using Error::Error; };
struct InvalidPerm : Error { using Error::Error; };
struct NotMember : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct NonIntegralResult : Error { using Error::Error; };
struct DegenerateAction : Error { using Error::Error; };
struct NotTransitive : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct IndexMismatch : Error { using Error::Error; };
struct NotTransitiveSubgroup : Error { using Error::Error; };
struct PreconditionUnmet : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct MismatchedParameters : Error { using Error::Error; };
struct InsufficientSpectrum : Error { using Error::Error; };
struct NonPrime : Error { using Error::Error; };
struct DegenerateParameters : Error { using Error::Error; };

}  // namespace drumgeo
