#ifndef KRIG_KERNEL_HPP
#define KRIG_KERNEL_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "krig/errors.hpp"

namespace krig {

/// Anisotropic Gaussian correlation kernel on the unit cube,
///   R(u, v) = exp(-sum_l (u_l - v_l)^2 / theta_l^2).
struct KernelSpec {
  Eigen::VectorXd lengthscales;  // theta, one per input dimension, all > 0
  double jitter = 1e-10;         // added to the correlation diagonal

  static constexpr double kJitterCap = 1e-4;

  Eigen::Index dim() const { return lengthscales.size(); }

  /// Throws InvalidArgument on nonpositive lengthscales or jitter
  /// outside [0, kJitterCap].
  void validate() const;
};

double gaussian_correlation(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                            const KernelSpec& k);

/// Correlation vector r(x) of a point against the rows of a design,
/// r_i(x) = R(x, X_i). No jitter is applied to cross-correlations.
Eigen::VectorXd cross_corr(const Eigen::VectorXd& x, const Eigen::MatrixXd& X,
                           const KernelSpec& k);

/// Batch form: column j holds r(P_j) for row j of P. Returns n x m.
Eigen::MatrixXd cross_corr_batch(const Eigen::MatrixXd& P,
                                 const Eigen::MatrixXd& X,
                                 const KernelSpec& k);

/// Correlation matrix of a design together with its Cholesky factor and the
/// bordered matrix [1, R] used by the rational weight vector.
///
/// Invariants: R is symmetric with diagonal 1 + jitter, the stored jitter is
/// the value actually applied (it may have been escalated), and
/// chol * chol^T reconstructs R.
struct CorrelationSystem {
  Eigen::MatrixXd R;       // n x n, includes jitter on the diagonal
  Eigen::MatrixXd chol;    // lower-triangular Cholesky factor of R
  Eigen::MatrixXd Rtilde;  // n x (n+1), [1_n, R]
  double jitter = 0.0;     // jitter actually applied

  Eigen::Index n() const { return R.rows(); }

  /// log |R| from the Cholesky factor.
  double log_det() const;
};

/// Builds the correlation system for a design (rows = points, unit cube).
/// Starting from k.jitter (floored at 1e-10), the diagonal jitter is
/// escalated by factors of 10 up to the cap until the Cholesky succeeds.
///
/// Throws DuplicatePointError if two rows are within 1e-10 of each other and
/// IllConditionedError if the factorization still fails at the cap.
CorrelationSystem build_system(const Eigen::MatrixXd& X, const KernelSpec& k);

/// Solves R z = b through the cached factorization.
Eigen::VectorXd solve_spd(const CorrelationSystem& sys,
                          const Eigen::VectorXd& b);
Eigen::MatrixXd solve_spd(const CorrelationSystem& sys,
                          const Eigen::MatrixXd& B);

struct PerronResult {
  Eigen::VectorXd vector;  // unit 2-norm, entries >= -1e-12, sum > 0
  double value = 0.0;      // dominant eigenvalue
  int iterations = 0;
  bool power_converged = true;  // false if the dense fallback was used
};

/// Dominant eigenvector of a symmetric (elementwise) nonnegative matrix by
/// power iteration from the uniform vector, relative residual tolerance
/// 1e-10. If the iteration cap is reached, falls back to a dense symmetric
/// eigensolver; throws IterationLimitError (carrying the last power iterate)
/// only if the fallback fails to produce a nonnegative eigenvector.
PerronResult perron_eigenvector(const Eigen::MatrixXd& M,
                                int max_power_iters = 10000);

/// Smallest pairwise Euclidean distance between rows (inf for n < 2).
double min_pairwise_distance(const Eigen::MatrixXd& X);

}  // namespace krig

#endif
