// SPDX-License-Identifier: Apache-2.0

#ifndef MPPT_CONTOUR_HPP
#define MPPT_CONTOUR_HPP

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "mppt/operator_core.hpp"
#include "mppt/types.hpp"

namespace mppt {

/// Rectangular contour crossing the real axis exactly at lambdaMin and
/// lambdaMax, of half-height imagHalfHeight, traversed counterclockwise.
struct Contour {
  Contour(double lambdaMin, double lambdaMax, double imagHalfHeight, int pointsPerEdge);
  double lambdaMin;
  double lambdaMax;
  double imagHalfHeight;
  int pointsPerEdge;

  std::array<Complex, 4> corners() const;
  double maxAbsZ() const;
  /// Distance from a point to the contour rectangle (boundary curve).
  double distanceTo(Complex z) const;
};

/// Contour enclosing only the level eigenvalue of the given decomposition,
/// with crossings at the midpoints of its gaps. The pair `neighbors`
/// overrides (lambda^{k-1}, lambda^{k+1}), e.g. for a contour shared between
/// several operators. A missing neighbor is handled by reflecting the
/// opposite gap.
Contour defaultContour(const SpectralData& spec,
                       std::optional<std::pair<double, double>> neighbors = std::nullopt);

/// Contour with crossings at the window bounds.
Contour windowContour(const GapWindow& window, int pointsPerEdge = 32);

/// (1/2 pi i) times the counterclockwise contour integral of f, by the
/// composite trapezoid rule per edge with Richardson-accelerated doubling of
/// pointsPerEdge until successive accelerated values differ by less than
/// tolGoal. Throws NoConvergence when the 2^14 points-per-edge cap is hit.
Matrix contourIntegrate(const std::function<Matrix(Complex)>& f, const Contour& contour,
                        double tolGoal);

}  // namespace mppt

#endif  // MPPT_CONTOUR_HPP
