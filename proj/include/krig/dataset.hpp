#ifndef KRIG_DATASET_HPP
#define KRIG_DATASET_HPP

#include <Eigen/Core>

#include "krig/errors.hpp"

namespace krig {

/// Per-dimension affine map between native units and the unit cube.
struct ScalingRecord {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;  // componentwise > lower

  Eigen::Index dim() const { return lower.size(); }
  void validate() const;

  Eigen::VectorXd to_unit(const Eigen::VectorXd& native) const;
  Eigen::VectorXd to_native(const Eigen::VectorXd& unit) const;
  Eigen::MatrixXd to_unit_rows(const Eigen::MatrixXd& native) const;
  Eigen::MatrixXd to_native_rows(const Eigen::MatrixXd& unit) const;

  static ScalingRecord identity(Eigen::Index p);
};

/// Training data with inputs held on the unit cube. The scaling record keeps
/// the original per-dimension bounds so predictions can accept native units.
struct Dataset {
  Eigen::MatrixXd X;  // n x p, all coordinates in [0, 1]
  Eigen::VectorXd Y;  // length n
  ScalingRecord scaling;

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index p() const { return X.cols(); }

  /// n >= 2, no rows within 1e-10, scaling bounds valid.
  void validate() const;

  static Dataset from_unit(Eigen::MatrixXd X, Eigen::VectorXd Y,
                           ScalingRecord scaling);
  static Dataset from_native(const Eigen::MatrixXd& Xnative, Eigen::VectorXd Y,
                             ScalingRecord scaling);
  /// Infers bounds from the column ranges (min-max scaling). Throws on
  /// constant columns.
  static Dataset from_native_minmax(const Eigen::MatrixXd& Xnative,
                                    Eigen::VectorXd Y);
};

}  // namespace krig

#endif
