// SPDX-License-Identifier: Apache-2.0

#include "mppt/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace mppt {

namespace {

constexpr int kPointsPerEdgeCap = 1 << 14;

double segmentDistance(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((z - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}  // namespace

Contour::Contour(double lambdaMin_, double lambdaMax_, double imagHalfHeight_, int pointsPerEdge_)
    : lambdaMin(lambdaMin_),
      lambdaMax(lambdaMax_),
      imagHalfHeight(imagHalfHeight_),
      pointsPerEdge(pointsPerEdge_) {
  if (!(lambdaMin < lambdaMax)) throw std::invalid_argument("Contour: lambdaMin < lambdaMax");
  if (!(imagHalfHeight > 0.0)) throw std::invalid_argument("Contour: imagHalfHeight > 0");
  if (pointsPerEdge < 1) throw std::invalid_argument("Contour: pointsPerEdge >= 1");
}

std::array<Complex, 4> Contour::corners() const {
  return {Complex(lambdaMin, -imagHalfHeight), Complex(lambdaMax, -imagHalfHeight),
          Complex(lambdaMax, imagHalfHeight), Complex(lambdaMin, imagHalfHeight)};
}

double Contour::maxAbsZ() const {
  double m = 0.0;
  for (Complex c : corners()) m = std::max(m, std::abs(c));
  return m;
}

double Contour::distanceTo(Complex z) const {
  const auto cs = corners();
  double d = std::numeric_limits<double>::infinity();
  for (int e = 0; e < 4; ++e) d = std::min(d, segmentDistance(z, cs[e], cs[(e + 1) % 4]));
  return d;
}

Contour defaultContour(const SpectralData& spec,
                       std::optional<std::pair<double, double>> neighbors) {
  const Index d = spec.dim();
  const int k = spec.level;
  const double lambdaK = spec.levelEigenvalue();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double below = neighbors ? neighbors->first : (k > 1 ? spec.eigenvalues(k - 2) : nan);
  double above = neighbors ? neighbors->second : (k < d ? spec.eigenvalues(k) : nan);
  if (std::isnan(below) && std::isnan(above))
    throw DegenerateLevel("defaultContour: no neighboring eigenvalue to separate from");

  const double tol = degeneracyTolerance(spec.eigenvalues);
  if ((!std::isnan(below) && lambdaK - below <= tol) ||
      (!std::isnan(above) && above - lambdaK <= tol))
    throw DegenerateLevel("defaultContour: level eigenvalue is not isolated");

  const double lambdaMin =
      !std::isnan(below) ? (below + lambdaK) / 2.0 : lambdaK - (above - lambdaK) / 2.0;
  const double lambdaMax =
      !std::isnan(above) ? (lambdaK + above) / 2.0 : lambdaK + (lambdaK - below) / 2.0;
  return Contour(lambdaMin, lambdaMax, std::max(1.0, lambdaMax - lambdaMin), 32);
}

Contour windowContour(const GapWindow& window, int pointsPerEdge) {
  return Contour(window.lambdaMin, window.lambdaMax,
                 std::max(1.0, window.lambdaMax - window.lambdaMin), pointsPerEdge);
}

Matrix contourIntegrate(const std::function<Matrix(Complex)>& f, const Contour& contour,
                        double tolGoal) {
  if (contour.pointsPerEdge < 8)
    throw std::invalid_argument("contourIntegrate: pointsPerEdge must be >= 8");
  const auto cs = contour.corners();

  // Per-edge trapezoid node sums: nodes[e] = f(a)/2 + sum interior + f(b)/2.
  // Doubling only adds the new midpoints, and the integral is
  //   T(n) = sum_e (dz_e / n) nodes[e](n).
  int n = contour.pointsPerEdge;
  std::array<Matrix, 4> nodes;
  for (int e = 0; e < 4; ++e) {
    const Complex a = cs[e], b = cs[(e + 1) % 4];
    Matrix acc = (f(a) + f(b)) / 2.0;
    for (int i = 1; i < n; ++i)
      acc += f(a + (b - a) * (static_cast<double>(i) / n));
    nodes[e] = std::move(acc);
  }
  auto total = [&](int subdivisions) {
    Matrix acc = (cs[1] - cs[0]) / static_cast<double>(subdivisions) * nodes[0];
    for (int e = 1; e < 4; ++e)
      acc += (cs[(e + 1) % 4] - cs[e]) / static_cast<double>(subdivisions) * nodes[e];
    return acc;
  };

  const Complex scale = 1.0 / (Complex(0.0, 2.0) * std::numbers::pi);
  Matrix trapezoid = total(n);
  Matrix accelerated;
  bool haveAccelerated = false;
  while (n < kPointsPerEdgeCap) {
    for (int e = 0; e < 4; ++e) {
      const Complex a = cs[e], b = cs[(e + 1) % 4];
      for (int i = 0; i < n; ++i)
        nodes[e] += f(a + (b - a) * ((2.0 * i + 1.0) / (2.0 * n)));
    }
    n *= 2;
    Matrix refined = total(n);
    Matrix extrapolated = (4.0 * refined - trapezoid) / 3.0;
    if (haveAccelerated) {
      const double diff = (extrapolated - accelerated).cwiseAbs().maxCoeff();
      if (diff < tolGoal) return scale * extrapolated;
    }
    accelerated = std::move(extrapolated);
    haveAccelerated = true;
    trapezoid = std::move(refined);
  }
  throw NoConvergence("contourIntegrate: points-per-edge cap reached before tolerance");
}

}  // namespace mppt
