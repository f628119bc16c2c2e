// errors.hpp - Exception types shared across the phwalk modules.

#ifndef PHWALK_ERRORS_HPP
#define PHWALK_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace phwalk {

// Malformed graph or matrix text input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

// The spectrum has eigenvalues with imaginary parts beyond tolerance, so the
// Hamiltonian cannot be treated as pseudo-Hermitian. Carries the offenders.
class ComplexSpectrumError : public std::runtime_error {
public:
  ComplexSpectrumError(const std::string &what,
                       std::vector<std::complex<double>> offenders)
      : std::runtime_error(what), offending_eigenvalues(std::move(offenders)) {}

  std::vector<std::complex<double>> offending_eigenvalues;
};

// Eigenvector matrix too ill-conditioned to invert: the Hamiltonian is
// defective (or numerically indistinguishable from defective).
class DefectiveMatrixError : public std::runtime_error {
public:
  DefectiveMatrixError(const std::string &what, double condition,
                       double threshold)
      : std::runtime_error(what), condition(condition), threshold(threshold) {}

  double condition;
  double threshold;
};

// A matrix required to be positive definite is not.
class NotPositiveDefiniteError : public std::runtime_error {
public:
  NotPositiveDefiniteError(const std::string &what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue(min_eigenvalue) {}

  double min_eigenvalue;
};

} // namespace phwalk

#endif
