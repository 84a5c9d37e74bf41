#pragma once

#include <stdexcept>
#include <string>

namespace qzs {

enum class ErrorKind {
  input_shape,
  input,
  mean_zero_violation,
  singular_parameter,
  contraction_failure,
  blow_up,
  hypothesis_violation,
  domain,
  insufficient_data,
  not_applicable,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Picard iteration did not reach the tolerance; the step is too large for
/// the size of the data.
class ContractionFailure : public Error {
 public:
  ContractionFailure(double residual, int iterations)
      : Error(ErrorKind::contraction_failure,
              "Picard iteration did not contract: residual " +
                  std::to_string(residual) + " after " +
                  std::to_string(iterations) + " iterations"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace qzs
