#include "krig/dataset.hpp"

#include "krig/kernel.hpp"

namespace krig {

void ScalingRecord::validate() const {
  if (lower.size() != upper.size() || lower.size() == 0)
    throw InvalidArgument("scaling: bounds must be nonempty and match");
  if (((upper - lower).array() <= 0.0).any())
    throw InvalidArgument("scaling: need lower < upper in every dimension");
}

Eigen::VectorXd ScalingRecord::to_unit(const Eigen::VectorXd& native) const {
  if (native.size() != dim())
    throw DimensionMismatch("scaling: point dimension mismatch");
  return ((native - lower).array() / (upper - lower).array()).matrix();
}

Eigen::VectorXd ScalingRecord::to_native(const Eigen::VectorXd& unit) const {
  if (unit.size() != dim())
    throw DimensionMismatch("scaling: point dimension mismatch");
  return lower + (unit.array() * (upper - lower).array()).matrix();
}

Eigen::MatrixXd ScalingRecord::to_unit_rows(
    const Eigen::MatrixXd& native) const {
  if (native.cols() != dim())
    throw DimensionMismatch("scaling: matrix dimension mismatch");
  return (native.rowwise() - lower.transpose()).array().rowwise() /
         (upper - lower).transpose().array();
}

Eigen::MatrixXd ScalingRecord::to_native_rows(
    const Eigen::MatrixXd& unit) const {
  if (unit.cols() != dim())
    throw DimensionMismatch("scaling: matrix dimension mismatch");
  return (unit.array().rowwise() * (upper - lower).transpose().array())
             .matrix()
             .rowwise() +
         lower.transpose();
}

ScalingRecord ScalingRecord::identity(Eigen::Index p) {
  return {Eigen::VectorXd::Zero(p), Eigen::VectorXd::Ones(p)};
}

void Dataset::validate() const {
  scaling.validate();
  if (X.rows() < 2) throw InvalidArgument("dataset: need at least 2 rows");
  if (X.cols() != scaling.dim())
    throw DimensionMismatch("dataset: design/scaling dimension mismatch");
  if (Y.size() != X.rows())
    throw DimensionMismatch("dataset: response length mismatch");
  if (min_pairwise_distance(X) <= 1e-10)
    throw DuplicatePointError("dataset: duplicate design rows");
}

Dataset Dataset::from_unit(Eigen::MatrixXd X, Eigen::VectorXd Y,
                           ScalingRecord scaling) {
  Dataset d{std::move(X), std::move(Y), std::move(scaling)};
  d.validate();
  return d;
}

Dataset Dataset::from_native(const Eigen::MatrixXd& Xnative, Eigen::VectorXd Y,
                             ScalingRecord scaling) {
  scaling.validate();
  return from_unit(scaling.to_unit_rows(Xnative), std::move(Y),
                   std::move(scaling));
}

Dataset Dataset::from_native_minmax(const Eigen::MatrixXd& Xnative,
                                    Eigen::VectorXd Y) {
  if (Xnative.rows() < 2)
    throw InvalidArgument("dataset: need at least 2 rows");
  ScalingRecord s{Xnative.colwise().minCoeff(), Xnative.colwise().maxCoeff()};
  for (Eigen::Index j = 0; j < s.dim(); ++j)
    if (s.upper(j) - s.lower(j) <= 0.0)
      throw InvalidArgument("dataset: input column " + std::to_string(j + 1) +
                            " is constant; cannot min-max scale");
  return from_native(Xnative, std::move(Y), std::move(s));
}

}  // namespace krig
