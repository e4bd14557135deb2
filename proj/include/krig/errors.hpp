#ifndef KRIG_ERRORS_HPP
#define KRIG_ERRORS_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace krig {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionMismatch : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

/// Two design rows closer than the minimum separation.
struct DuplicatePointError : Error {
  using Error::Error;
};

/// Cholesky failed even at the jitter cap.
struct IllConditionedError : Error {
  using Error::Error;
};

/// An iterative routine hit its iteration cap; carries the last iterate.
struct IterationLimitError : Error {
  Eigen::VectorXd last_iterate;
  IterationLimitError(const std::string& msg, Eigen::VectorXd iterate)
      : Error(msg), last_iterate(std::move(iterate)) {}
};

/// Point outside the feasible set of the weight optimization.
struct InfeasiblePointError : Error {
  using Error::Error;
};

/// Too close to the unit-sphere boundary where the gradient is singular.
struct BoundarySingularityError : Error {
  using Error::Error;
};

/// Malformed tabular input; row/col are 1-based, 0 means unknown.
struct ParseError : Error {
  int row = 0;
  int col = 0;
  ParseError(const std::string& msg, int r = 0, int c = 0)
      : Error(msg), row(r), col(c) {}
};

struct NotFoundError : Error {
  using Error::Error;
};

/// Bad experiment configuration (detected before any run starts).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace krig

#endif
