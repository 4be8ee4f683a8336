#pragma once

#include <stdexcept>
#include <string>

namespace casimir3
{
// Base of every error raised by the library. Numerical non-convergence is
// not an exception: results carry a converged flag instead.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

#define CASIMIR3_DECLARE_ERROR(NAME)      \
    class NAME : public Error             \
    {                                     \
      public:                             \
        using Error::Error;               \
    }

CASIMIR3_DECLARE_ERROR(DegenerateGeometry);
CASIMIR3_DECLARE_ERROR(InvalidArgument);
CASIMIR3_DECLARE_ERROR(PoleOnAxis);
CASIMIR3_DECLARE_ERROR(RegionMismatch);
CASIMIR3_DECLARE_ERROR(ExtrapolationUnstable);
CASIMIR3_DECLARE_ERROR(ImaginaryResidue);
CASIMIR3_DECLARE_ERROR(CoincidentPoints);
CASIMIR3_DECLARE_ERROR(GeometryTooLarge);

#undef CASIMIR3_DECLARE_ERROR

}  // namespace casimir3
