#ifndef KRIG_METRICS_HPP
#define KRIG_METRICS_HPP

#include <Eigen/Core>

namespace krig {

/// Root mean-squared error between predictions and truth.
double rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth);

/// Mean interval score of the (1-alpha) intervals [l_i, u_i] against truth,
///   (1/N) sum [(u_i - l_i) + (2/alpha){(l_i - t_i)_+ + (t_i - u_i)_+}].
/// Lower is better; non-coverage is penalized at rate 2/alpha.
double interval_score(const Eigen::VectorXd& lower,
                      const Eigen::VectorXd& upper,
                      const Eigen::VectorXd& truth, double alpha);

/// Standard normal quantile (inverse CDF) for p in (0, 1).
double normal_quantile(double p);

/// Half-width multiplier for a central (1-alpha) Gaussian interval,
/// normal_quantile(1 - alpha/2); 1.959964 at alpha = 0.05.
double interval_z(double alpha);

/// Sample quantile with linear interpolation between order statistics
/// (the common "type 7" rule). q in [0, 1]; input need not be sorted.
double quantile(std::vector<double> values, double q);

}  // namespace krig

#endif
