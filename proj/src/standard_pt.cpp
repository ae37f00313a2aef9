// SPDX-License-Identifier: Apache-2.0

#include "mppt/standard_pt.hpp"

#include <limits>

namespace mppt {

StandardExpansion standardTerms(const SpectralData& ref, const HermitianOperator& g,
                                int maxOrder) {
  if (maxOrder < 0 || maxOrder > 3)
    throw UnsupportedOrder("standardTerms: only orders 0..3 are implemented");
  if (g.dim() != ref.dim()) throw DimensionMismatch("standardTerms: dimension mismatch");

  const Matrix& P = ref.projector.matrix();
  const Matrix& K = ref.pseudoInverse.matrix();
  const Matrix& G = g.matrix();

  StandardExpansion out;
  out.terms.push_back(P);

  if (maxOrder >= 1) out.terms.push_back(P * G * K + K * G * P);

  if (maxOrder >= 2) {
    const Matrix K2 = K * K;
    out.terms.push_back((P * G * K * G * K + K * G * P * G * K + K * G * K * G * P) -
                        (P * G * P * G * K2 + P * G * K2 * G * P + K2 * G * P * G * P));
    if (maxOrder >= 3) {
      const Matrix K3 = K2 * K;
      Matrix t = (P * G * P * G * P * G * K3 + P * G * P * G * K3 * G * P +
                  P * G * K3 * G * P * G * P + K3 * G * P * G * P * G * P);
      t += (P * G * K * G * K * G * K + K * G * P * G * K * G * K +
            K * G * K * G * P * G * K + K * G * K * G * K * G * P);
      t -= (P * G * P * G * K2 * G * K + P * G * P * G * K * G * K2 +
            K * G * K2 * G * P * G * P + K2 * G * K * G * P * G * P);
      t -= (P * G * K * G * K2 * G * P + P * G * K2 * G * K * G * P +
            P * G * K * G * P * G * K2 + P * G * K2 * G * P * G * K);
      t -= (K * G * P * G * K2 * G * P + K2 * G * P * G * K * G * P +
            K * G * P * G * P * G * K2 + K2 * G * P * G * P * G * K);
      out.terms.push_back(std::move(t));
    }
  }

  Matrix acc = Matrix::Zero(ref.dim(), ref.dim());
  for (const Matrix& term : out.terms) {
    acc += term;
    out.partialSums.push_back(acc);
  }
  return out;
}

int chooseClosest(const std::vector<ReferencePoint>& points, const HermitianOperator& target,
                  const NormContext& ctx, ClosestRule rule, int order,
                  const Matrix* exactProjector) {
  if (points.empty()) throw std::invalid_argument("chooseClosest: empty point list");
  if (rule == ClosestRule::Fair && exactProjector == nullptr)
    throw std::invalid_argument("chooseClosest: the Fair rule needs the exact projector");

  int best = 0;
  double bestValue = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    double value;
    if (rule == ClosestRule::ByNorm) {
      value = normE(target.matrix() - points[i].G.matrix(), ctx);
    } else {
      const HermitianOperator gi = target - points[i].G;
      const StandardExpansion exp = standardTerms(points[i].spec, gi, order);
      value = normE(*exactProjector - exp.sum(order), ctx);
    }
    if (value < bestValue) {
      bestValue = value;
      best = i;
    }
  }
  return best;
}

}  // namespace mppt
