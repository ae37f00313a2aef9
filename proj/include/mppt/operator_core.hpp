// SPDX-License-Identifier: Apache-2.0

#ifndef MPPT_OPERATOR_CORE_HPP
#define MPPT_OPERATOR_CORE_HPP

#include <optional>
#include <vector>

#include "mppt/types.hpp"

namespace mppt {

/// Eigensystem of one Hamiltonian H = H0 + G at a selected level, together
/// with the rank-one spectral projector F and the pseudo-inverse K of
/// (lambda_k - H) that vanishes on the k-th eigenspace.
struct SpectralData {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, same order
  int level = 1;           // 1-based index k
  HermitianOperator projector;
  HermitianOperator pseudoInverse;
  std::optional<int> sourceIndex;

  Index dim() const { return eigenvalues.size(); }
  double levelEigenvalue() const { return eigenvalues(level - 1); }
  Vector levelVector() const { return eigenvectors.col(level - 1); }
};

/// Weighted-norm context: caches the weights (H0 + mu)^{+-kappa/2} built once
/// from the eigendecomposition of the fixed H0.
class NormContext {
 public:
  NormContext(const HermitianOperator& H0, double mu = 1.0, double kappa = 1.0);

  double mu() const { return mu_; }
  double kappa() const { return kappa_; }
  const HermitianOperator& weightPlus() const { return weightPlus_; }
  const HermitianOperator& weightMinus() const { return weightMinus_; }
  Index dim() const { return weightPlus_.dim(); }

 private:
  double mu_;
  double kappa_;
  HermitianOperator weightPlus_;
  HermitianOperator weightMinus_;
};

/// Real window [lambdaMin, lambdaMax] meant to isolate the k-th eigenvalue.
struct GapWindow {
  GapWindow(double lambdaMin, double lambdaMax, int level);
  double lambdaMin;
  double lambdaMax;
  int level;
};

/// Relative tolerance used for all simple-eigenvalue checks.
double degeneracyTolerance(const RealVector& eigenvalues);

/// Largest singular value.
double spectralNorm(const Matrix& A);

/// Full eigendecomposition of H at level k (1-based). The level eigenvalue
/// must be simple.
SpectralData decompose(const HermitianOperator& H, int k);

/// K_{ij} = sum_{a != k} (lambda_i - lambda^a(G_j))^{-1} u_a(G_j) u_a(G_j)^*,
/// the pseudo-inverse of (lambda_i - H(G_j)) vanishing on the k-th eigenspace
/// of H(G_j).
HermitianOperator crossPseudoInverse(const SpectralData& specJ, double lambdaI);

/// Closed-form recurrence K_{ij} = K_j (1 + (lambda_i - lambda_j) K_j)^{-1},
/// valid while |lambda_i - lambda_j| * ||K_j|| < 1.
HermitianOperator kijFromKj(const HermitianOperator& Kj, const HermitianOperator& Fj,
                            double lambdaI, double lambdaJ);

/// Density-matrix norm  ||W A W||  with W = (H0 + mu)^{kappa/2}.
double normE(const Matrix& A, const NormContext& ctx);

/// Dual parameter norm  ||W^{-1} G W^{-1}||.
double normA(const Matrix& G, const NormContext& ctx);

/// Relative distance 2||W(A-B)W||_F / (||WAW||_F + ||WBW||_F) with
/// W = (H0 + 1)^{kappa/2}. kappa = 1 is the energy distance, kappa = -1 the
/// dual one.
double relativeDistance(const Matrix& A, const Matrix& B, double kappa,
                        const HermitianOperator& H0);

/// Same, with the weight W precomputed (avoids refactorizing H0 in sweeps).
double relativeDistance(const Matrix& A, const Matrix& B, const Matrix& weight);

/// (H0 + 1)^{kappa/2} from the eigendecomposition of H0.
Matrix distanceWeight(const HermitianOperator& H0, double kappa);

/// (z - H)^{-1} for z off the spectrum of H.
Matrix resolvent(const HermitianOperator& H, Complex z);

/// Explicit a-priori bound on max_z ||(z - H(G))^{-1}||_e over a contour at
/// distance xi from the spectrum:
///   2 (1 + |mu - eta| / (eta + minSpec))
///     * (1 + 2 |eta + maxAbsZ| (1 + |eta + maxAbsZ| / xi)).
double resolventBoundRHS(double mu, double eta, double minSpec, double maxAbsZ, double xi);

/// Smallest c such that |G| <= eps H0 + c in the form sense, read off the
/// discrete operators.
double admissibilityConstant(const HermitianOperator& G, const HermitianOperator& H0, double eps);

/// True iff for every convex combination of the Gs sampled on a deterministic
/// simplex lattice (`samples` points per edge, vertices always included) the
/// spectrum of H0 + sum theta_j G_j meets the window exactly in its k-th
/// eigenvalue.
bool gapCheck(const HermitianOperator& H0, const std::vector<HermitianOperator>& Gs, int k,
              const GapWindow& window, int samples);

/// Window isolating the k-th eigenvalue of every H0 + X simultaneously, with
/// crossings at midpoints of the worst-case gaps. Throws GapViolation when the
/// levels interleave.
GapWindow sharedWindow(const HermitianOperator& H0, const std::vector<HermitianOperator>& Xs,
                       int k);

}  // namespace mppt

#endif  // MPPT_OPERATOR_CORE_HPP
