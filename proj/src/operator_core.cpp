// SPDX-License-Identifier: Apache-2.0

#include "mppt/operator_core.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace mppt {

namespace {

constexpr double kSimplicityFactor = 1e-8;

void requireSameDim(Index a, Index b, const char* where) {
  if (a != b) throw DimensionMismatch(std::string(where) + ": dimension mismatch");
}

// U f(D) U* for a Hermitian eigensystem (D diagonal of f-transformed values).
Matrix spectralFunction(const RealVector& values, const Matrix& vectors) {
  return hermitianPart((vectors * values.cast<Complex>().asDiagonal()) * vectors.adjoint());
}

}  // namespace

double degeneracyTolerance(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  const double diameter = eigenvalues(eigenvalues.size() - 1) - eigenvalues(0);
  return kSimplicityFactor * diameter;
}

double spectralNorm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(A).singularValues()(0);
}

NormContext::NormContext(const HermitianOperator& H0, double mu, double kappa)
    : mu_(mu),
      kappa_(kappa),
      weightPlus_(HermitianOperator::Identity(H0.dim())),
      weightMinus_(HermitianOperator::Identity(H0.dim())) {
  if (kappa < 0.0 || kappa > 1.0)
    throw std::invalid_argument("NormContext: kappa must lie in [0, 1]");
  if (kappa == 0.0) return;  // weights are exactly the identity
  Eigen::SelfAdjointEigenSolver<Matrix> es(H0.matrix());
  if (es.info() != Eigen::Success) throw Error("NormContext: eigendecomposition failed");
  const RealVector& w = es.eigenvalues();
  if (w(0) + mu <= 0.0)
    throw std::invalid_argument("NormContext: mu must exceed -min spec(H0)");
  RealVector plus(w.size()), minus(w.size());
  for (Index a = 0; a < w.size(); ++a) {
    plus(a) = std::pow(w(a) + mu, kappa / 2.0);
    minus(a) = 1.0 / plus(a);
  }
  weightPlus_ = HermitianOperator(spectralFunction(plus, es.eigenvectors()));
  weightMinus_ = HermitianOperator(spectralFunction(minus, es.eigenvectors()));
}

GapWindow::GapWindow(double lambdaMin_, double lambdaMax_, int level_)
    : lambdaMin(lambdaMin_), lambdaMax(lambdaMax_), level(level_) {
  if (!(lambdaMin < lambdaMax)) throw std::invalid_argument("GapWindow: lambdaMin < lambdaMax");
  if (level < 1) throw std::invalid_argument("GapWindow: level must be >= 1");
}

SpectralData decompose(const HermitianOperator& H, int k) {
  const Index d = H.dim();
  if (k < 1 || k > d) throw IndexOutOfRange("decompose: level out of range");
  Eigen::SelfAdjointEigenSolver<Matrix> es(H.matrix());
  if (es.info() != Eigen::Success) throw Error("decompose: eigendecomposition failed");
  const RealVector w = es.eigenvalues();
  const Matrix V = es.eigenvectors();

  const double tol = degeneracyTolerance(w);
  const double gapLo = k > 1 ? w(k - 1) - w(k - 2) : std::numeric_limits<double>::infinity();
  const double gapHi = k < d ? w(k) - w(k - 1) : std::numeric_limits<double>::infinity();
  if (std::min(gapLo, gapHi) <= tol)
    throw DegenerateLevel("decompose: eigenvalue " + std::to_string(k) + " is not simple");

  const Vector uk = V.col(k - 1);
  Matrix F = uk * uk.adjoint();

  RealVector coeff = RealVector::Zero(d);
  for (Index a = 0; a < d; ++a)
    if (a != k - 1) coeff(a) = 1.0 / (w(k - 1) - w(a));
  Matrix K = spectralFunction(coeff, V);

  return SpectralData{w, V, k, HermitianOperator(std::move(F)), HermitianOperator(std::move(K)),
                      std::nullopt};
}

HermitianOperator crossPseudoInverse(const SpectralData& specJ, double lambdaI) {
  const Index d = specJ.dim();
  const int k = specJ.level;
  const double tol = degeneracyTolerance(specJ.eigenvalues);
  RealVector coeff = RealVector::Zero(d);
  for (Index a = 0; a < d; ++a) {
    if (a == k - 1) continue;
    const double shift = lambdaI - specJ.eigenvalues(a);
    if (std::abs(shift) <= tol)
      throw SingularShift("crossPseudoInverse: shift collides with eigenvalue " +
                          std::to_string(a + 1));
    coeff(a) = 1.0 / shift;
  }
  return HermitianOperator(spectralFunction(coeff, specJ.eigenvectors));
}

HermitianOperator kijFromKj(const HermitianOperator& Kj, const HermitianOperator& Fj,
                            double lambdaI, double lambdaJ) {
  requireSameDim(Kj.dim(), Fj.dim(), "kijFromKj");
  const double shift = lambdaI - lambdaJ;
  if (std::abs(shift) * spectralNorm(Kj.matrix()) >= 1.0)
    throw SeriesDiverges("kijFromKj: |lambda_i - lambda_j| ||K_j|| >= 1");
  const Index d = Kj.dim();
  // 1 + shift K_j acts as the identity on range(F_j), so the full-space
  // inverse exists under the smallness condition.
  const Matrix M = Matrix::Identity(d, d) + shift * Kj.matrix();
  return HermitianOperator(hermitianPart(Kj.matrix() * M.inverse()));
}

double normE(const Matrix& A, const NormContext& ctx) {
  requireSameDim(A.rows(), ctx.dim(), "normE");
  requireSameDim(A.cols(), ctx.dim(), "normE");
  if (ctx.kappa() == 0.0) return spectralNorm(A);
  const Matrix& W = ctx.weightPlus().matrix();
  return spectralNorm(W * A * W);
}

double normA(const Matrix& G, const NormContext& ctx) {
  requireSameDim(G.rows(), ctx.dim(), "normA");
  requireSameDim(G.cols(), ctx.dim(), "normA");
  if (ctx.kappa() == 0.0) return spectralNorm(G);
  const Matrix& W = ctx.weightMinus().matrix();
  return spectralNorm(W * G * W);
}

Matrix distanceWeight(const HermitianOperator& H0, double kappa) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H0.matrix());
  if (es.info() != Eigen::Success) throw Error("distanceWeight: eigendecomposition failed");
  const RealVector& w = es.eigenvalues();
  if (w(0) + 1.0 <= 0.0) throw std::invalid_argument("distanceWeight: H0 + 1 not positive");
  RealVector f(w.size());
  for (Index a = 0; a < w.size(); ++a) f(a) = std::pow(w(a) + 1.0, kappa / 2.0);
  return spectralFunction(f, es.eigenvectors());
}

double relativeDistance(const Matrix& A, const Matrix& B, const Matrix& weight) {
  requireSameDim(A.rows(), B.rows(), "relativeDistance");
  requireSameDim(A.cols(), B.cols(), "relativeDistance");
  requireSameDim(A.rows(), weight.rows(), "relativeDistance");
  const double num = (weight * (A - B) * weight).norm();
  const double den = (weight * A * weight).norm() + (weight * B * weight).norm();
  if (den == 0.0) throw BothZero("relativeDistance: both operands vanish");
  return 2.0 * num / den;
}

double relativeDistance(const Matrix& A, const Matrix& B, double kappa,
                        const HermitianOperator& H0) {
  return relativeDistance(A, B, distanceWeight(H0, kappa));
}

Matrix resolvent(const HermitianOperator& H, Complex z) {
  const Index d = H.dim();
  if (std::abs(z.imag()) <= 1e-12) {
    // Hermitian spectrum is real: only near-real z can hit it.
    const RealVector w = Eigen::SelfAdjointEigenSolver<Matrix>(H.matrix(), Eigen::EigenvaluesOnly)
                             .eigenvalues();
    double dist = std::numeric_limits<double>::infinity();
    for (Index a = 0; a < d; ++a) dist = std::min(dist, std::abs(z - Complex(w(a), 0.0)));
    if (dist <= 1e-12) throw SpectrumHit("resolvent: z within 1e-12 of the spectrum");
  }
  const Matrix shifted = z * Matrix::Identity(d, d) - H.matrix();
  Matrix R = shifted.partialPivLu().inverse();
  const double residual = (shifted * R - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(residual < 1e-10))
    throw SpectrumHit("resolvent: residual " + std::to_string(residual));
  return R;
}

double resolventBoundRHS(double mu, double eta, double minSpec, double maxAbsZ, double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("resolventBoundRHS: xi must be positive");
  if (!(eta >= 1.0) || !(mu >= 1.0))
    throw std::invalid_argument("resolventBoundRHS: eta, mu must be >= 1");
  const double first = 1.0 + std::abs(mu - eta) / (eta + minSpec);
  const double reach = std::abs(eta + maxAbsZ);
  const double second = 1.0 + 2.0 * reach * (1.0 + reach / xi);
  return 2.0 * first * second;
}

double admissibilityConstant(const HermitianOperator& G, const HermitianOperator& H0,
                             double eps) {
  requireSameDim(G.dim(), H0.dim(), "admissibilityConstant");
  // |G| via the spectral theorem, then the smallest c with |G| - eps H0 <= c.
  Eigen::SelfAdjointEigenSolver<Matrix> es(G.matrix());
  if (es.info() != Eigen::Success) throw Error("admissibilityConstant: decomposition failed");
  const Matrix absG = spectralFunction(es.eigenvalues().cwiseAbs(), es.eigenvectors());
  const RealVector w = Eigen::SelfAdjointEigenSolver<Matrix>(
                           Matrix(absG - eps * H0.matrix()), Eigen::EigenvaluesOnly)
                           .eigenvalues();
  return std::max(w(w.size() - 1), std::numeric_limits<double>::min());
}

namespace {

// All compositions of `total` into n nonnegative parts, lexicographic.
void enumerateCompositions(int n, int total, std::vector<int>& head,
                           const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 1) {
    head.push_back(total);
    visit(head);
    head.pop_back();
    return;
  }
  for (int i = 0; i <= total; ++i) {
    head.push_back(i);
    enumerateCompositions(n - 1, total - i, head, visit);
    head.pop_back();
  }
}

bool windowHoldsAt(const HermitianOperator& H, int k, const GapWindow& window) {
  const RealVector w =
      Eigen::SelfAdjointEigenSolver<Matrix>(H.matrix(), Eigen::EigenvaluesOnly).eigenvalues();
  int inside = 0;
  Index insideIndex = -1;
  for (Index a = 0; a < w.size(); ++a) {
    if (w(a) >= window.lambdaMin && w(a) <= window.lambdaMax) {
      ++inside;
      insideIndex = a;
    }
  }
  return inside == 1 && insideIndex == k - 1;
}

}  // namespace

bool gapCheck(const HermitianOperator& H0, const std::vector<HermitianOperator>& Gs, int k,
              const GapWindow& window, int samples) {
  if (samples < 1) throw std::invalid_argument("gapCheck: samples must be >= 1");
  if (Gs.empty()) throw std::invalid_argument("gapCheck: empty perturbation list");
  const int n = static_cast<int>(Gs.size());

  bool ok = true;
  auto check = [&](const std::vector<double>& theta) {
    if (!ok) return;
    Matrix sum = H0.matrix();
    for (int j = 0; j < n; ++j) sum += theta[j] * Gs[j].matrix();
    ok = windowHoldsAt(HermitianOperator(std::move(sum)), k, window);
  };

  if (samples == 1 || n == 1) {
    for (int j = 0; j < n && ok; ++j) {
      std::vector<double> theta(n, 0.0);
      theta[j] = 1.0;
      check(theta);
    }
    return ok;
  }

  std::vector<int> head;
  enumerateCompositions(n, samples - 1, head, [&](const std::vector<int>& comp) {
    std::vector<double> theta(n);
    for (int j = 0; j < n; ++j) theta[j] = static_cast<double>(comp[j]) / (samples - 1);
    check(theta);
  });
  return ok;
}

GapWindow sharedWindow(const HermitianOperator& H0, const std::vector<HermitianOperator>& Xs,
                       int k) {
  if (Xs.empty()) throw std::invalid_argument("sharedWindow: empty operator list");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double kLo = std::numeric_limits<double>::infinity();
  double kHi = -std::numeric_limits<double>::infinity();
  for (const auto& X : Xs) {
    const RealVector w = Eigen::SelfAdjointEigenSolver<Matrix>(
                             Matrix(H0.matrix() + X.matrix()), Eigen::EigenvaluesOnly)
                             .eigenvalues();
    if (k < 1 || k > w.size()) throw IndexOutOfRange("sharedWindow: level out of range");
    if (k > 1) lo = std::max(lo, w(k - 2));
    if (k < w.size()) hi = std::min(hi, w(k));
    kLo = std::min(kLo, w(k - 1));
    kHi = std::max(kHi, w(k - 1));
  }
  if (!(lo < kLo) || !(kHi < hi))
    throw GapViolation("sharedWindow: level " + std::to_string(k) +
                       " interleaves with neighboring eigenvalues");
  // Midpoint crossings; reflect the opposite gap when the level is extremal.
  const double lambdaMin =
      std::isfinite(lo) ? (lo + kLo) / 2.0 : kLo - (hi - kHi) / 2.0;
  const double lambdaMax =
      std::isfinite(hi) ? (kHi + hi) / 2.0 : kHi + (kLo - lo) / 2.0;
  return GapWindow(lambdaMin, lambdaMax, k);
}

}  // namespace mppt
