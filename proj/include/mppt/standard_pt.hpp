// SPDX-License-Identifier: Apache-2.0

#ifndef MPPT_STANDARD_PT_HPP
#define MPPT_STANDARD_PT_HPP

#include <vector>

#include "mppt/operator_core.hpp"

namespace mppt {

/// One known point G_j with its spectral data.
struct ReferencePoint {
  HermitianOperator G;
  SpectralData spec;
};

/// Single-point density-matrix perturbation series around one reference:
/// terms P_0..P_l and partial sums.
struct StandardExpansion {
  int referenceIndex = -1;         // 0-based, -1 when the caller chose no index
  std::vector<Matrix> terms;       // P_0 .. P_maxOrder
  std::vector<Matrix> partialSums; // cumulative sums of the above

  int maxOrder() const { return static_cast<int>(terms.size()) - 1; }
  const Matrix& sum(int order) const { return partialSums.at(order); }
};

/// Expansion of the projector of H(G_1 + g) in powers of g about the
/// reference eigensystem, up to maxOrder <= 3.
StandardExpansion standardTerms(const SpectralData& ref, const HermitianOperator& g,
                                int maxOrder);

enum class ClosestRule {
  ByNorm,  // argmin_i ||G - G_i||_e
  Fair,    // argmin_i ||F(G) - P^i_order||_e, needs the exact projector
};

/// Index (0-based) of the reference point standard perturbation theory should
/// expand around. Ties break to the smallest index. The Fair rule requires
/// the exact projector of H(G); it is meant for benchmarking flows where that
/// projector is computed anyway.
int chooseClosest(const std::vector<ReferencePoint>& points, const HermitianOperator& target,
                  const NormContext& ctx, ClosestRule rule, int order,
                  const Matrix* exactProjector = nullptr);

}  // namespace mppt

#endif  // MPPT_STANDARD_PT_HPP
