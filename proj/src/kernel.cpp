#include "krig/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

namespace krig {

void KernelSpec::validate() const {
  if (lengthscales.size() == 0)
    throw InvalidArgument("kernel: empty lengthscale vector");
  if ((lengthscales.array() <= 0.0).any())
    throw InvalidArgument("kernel: lengthscales must be positive");
  if (jitter < 0.0 || jitter > kJitterCap)
    throw InvalidArgument("kernel: jitter must lie in [0, 1e-4]");
}

double gaussian_correlation(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                            const KernelSpec& k) {
  if (u.size() != v.size() || u.size() != k.dim())
    throw DimensionMismatch("gaussian_correlation: dimension mismatch");
  const double q =
      ((u - v).array() / k.lengthscales.array()).square().sum();
  return std::exp(-q);
}

Eigen::VectorXd cross_corr(const Eigen::VectorXd& x, const Eigen::MatrixXd& X,
                           const KernelSpec& k) {
  if (x.size() != X.cols() || x.size() != k.dim())
    throw DimensionMismatch("cross_corr: dimension mismatch");
  const auto inv = k.lengthscales.array().inverse().transpose();
  return (-((X.rowwise() - x.transpose()).array().rowwise() * inv)
               .square()
               .rowwise()
               .sum())
      .exp()
      .matrix();
}

Eigen::MatrixXd cross_corr_batch(const Eigen::MatrixXd& P,
                                 const Eigen::MatrixXd& X,
                                 const KernelSpec& k) {
  if (P.cols() != X.cols() || P.cols() != k.dim())
    throw DimensionMismatch("cross_corr_batch: dimension mismatch");
  Eigen::MatrixXd out(X.rows(), P.rows());
  for (Eigen::Index j = 0; j < P.rows(); ++j)
    out.col(j) = cross_corr(P.row(j).transpose(), X, k);
  return out;
}

double min_pairwise_distance(const Eigen::MatrixXd& X) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < X.rows(); ++i)
    for (Eigen::Index j = i + 1; j < X.rows(); ++j)
      best = std::min(best, (X.row(i) - X.row(j)).norm());
  return best;
}

double CorrelationSystem::log_det() const {
  return 2.0 * chol.diagonal().array().log().sum();
}

CorrelationSystem build_system(const Eigen::MatrixXd& X, const KernelSpec& k) {
  k.validate();
  if (X.rows() < 1) throw InvalidArgument("build_system: empty design");
  if (X.cols() != k.dim())
    throw DimensionMismatch("build_system: design/kernel dimension mismatch");
  if (min_pairwise_distance(X) <= 1e-10)
    throw DuplicatePointError(
        "build_system: design rows closer than 1e-10 (duplicate points)");

  const Eigen::Index n = X.rows();
  Eigen::MatrixXd R0(n, n);
  const auto inv = k.lengthscales.array().inverse().transpose();
  for (Eigen::Index i = 0; i < n; ++i) {
    R0(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double q =
          (((X.row(i) - X.row(j)).array() * inv).square()).sum();
      R0(i, j) = R0(j, i) = std::exp(-q);
    }
  }

  double jit = std::max(k.jitter, 1e-10);
  while (true) {
    Eigen::MatrixXd R = R0;
    R.diagonal().array() += jit;
    Eigen::LLT<Eigen::MatrixXd> llt(R);
    if (llt.info() == Eigen::Success) {
      CorrelationSystem sys;
      sys.R = std::move(R);
      sys.chol = llt.matrixL();
      sys.Rtilde.resize(n, n + 1);
      sys.Rtilde.col(0).setOnes();
      sys.Rtilde.rightCols(n) = sys.R;
      sys.jitter = jit;
      return sys;
    }
    if (jit >= KernelSpec::kJitterCap)
      throw IllConditionedError(
          "build_system: Cholesky failed at the jitter cap (1e-4)");
    jit = std::min(jit * 10.0, KernelSpec::kJitterCap);
  }
}

Eigen::VectorXd solve_spd(const CorrelationSystem& sys,
                          const Eigen::VectorXd& b) {
  if (b.size() != sys.n())
    throw DimensionMismatch("solve_spd: right-hand side length mismatch");
  Eigen::VectorXd z = sys.chol.triangularView<Eigen::Lower>().solve(b);
  sys.chol.triangularView<Eigen::Lower>().transpose().solveInPlace(z);
  return z;
}

Eigen::MatrixXd solve_spd(const CorrelationSystem& sys,
                          const Eigen::MatrixXd& B) {
  if (B.rows() != sys.n())
    throw DimensionMismatch("solve_spd: right-hand side rows mismatch");
  Eigen::MatrixXd Z = sys.chol.triangularView<Eigen::Lower>().solve(B);
  sys.chol.triangularView<Eigen::Lower>().transpose().solveInPlace(Z);
  return Z;
}

PerronResult perron_eigenvector(const Eigen::MatrixXd& M,
                                int max_power_iters) {
  const Eigen::Index m = M.rows();
  if (m == 0 || M.cols() != m)
    throw InvalidArgument("perron_eigenvector: matrix must be square");
  if ((M - M.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, M.cwiseAbs().maxCoeff()))
    throw InvalidArgument("perron_eigenvector: matrix not symmetric");
  if (M.minCoeff() < -1e-12)
    throw InvalidArgument("perron_eigenvector: negative entries");

  PerronResult res;
  Eigen::VectorXd v = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  Eigen::VectorXd Mv = M * v;
  double lambda = v.dot(Mv);
  int it = 0;
  for (; it < max_power_iters; ++it) {
    const double norm = Mv.norm();
    if (norm == 0.0) break;  // M v in the null space; fallback below
    v = Mv / norm;
    Mv.noalias() = M * v;
    lambda = v.dot(Mv);
    const double resid = (Mv - lambda * v).norm();
    if (resid <= 1e-10 * std::max(std::abs(lambda),
                                  std::numeric_limits<double>::min())) {
      if (v.sum() < 0.0) v = -v;
      res.vector = v;
      res.value = lambda;
      res.iterations = it + 1;
      res.power_converged = true;
      return res;
    }
  }

  // Dense fallback; the dominant eigenpair of a nonnegative symmetric matrix
  // is still well defined when the power iteration converges too slowly.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() == Eigen::Success) {
    Eigen::VectorXd u = es.eigenvectors().col(m - 1);
    if (u.sum() < 0.0) u = -u;
    if (u.minCoeff() >= -1e-12) {
      res.vector = u;
      res.value = es.eigenvalues()(m - 1);
      res.iterations = it;
      res.power_converged = false;
      return res;
    }
  }
  throw IterationLimitError(
      "perron_eigenvector: no convergence in " +
          std::to_string(max_power_iters) + " iterations",
      v);
}

}  // namespace krig
