// SPDX-License-Identifier: Apache-2.0

#ifndef MPPT_ERRORS_HPP
#define MPPT_ERRORS_HPP

#include <stdexcept>

namespace mppt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegenerateLevel : Error { using Error::Error; };
struct SingularShift : Error { using Error::Error; };
struct SeriesDiverges : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct SpectrumHit : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct SumAlphaZero : Error { using Error::Error; };
struct GapViolation : Error { using Error::Error; };
struct NearSingularCorrection : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct DoesNotCommute : Error { using Error::Error; };
struct IllConditionedGram : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct NoisyData : Error { using Error::Error; };

}  // namespace mppt

#endif  // MPPT_ERRORS_HPP
