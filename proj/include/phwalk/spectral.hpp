// spectral.hpp - Biorthonormal eigensystems and metric operators for real
// square Hamiltonians with real spectrum.
//
// Pipeline: eigendecompose -> require_real_spectrum -> biorthonormal_system
// -> metric_operator -> omega_sqrt. The left eigenvectors phi are derived
// from the inverse of the right-eigenvector matrix psi, so phi^H psi = I
// holds to machine precision by construction; H^T phi_n = E_n phi_n is then
// a checked property rather than a construction path.

#ifndef PHWALK_SPECTRAL_HPP
#define PHWALK_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>

#include "phwalk/errors.hpp"

namespace phwalk {

// Default tolerances, sized for double-precision dense solves at desk scale
// (n up to a few hundred).
inline constexpr double kResidualTol = 1e-9;  // eigenpair residual bound
inline constexpr double kRealityTol = 1e-9;   // |Im l| <= tol*(1+|l|)
inline constexpr double kImagDiscardTol = 1e-10; // theta imaginary residue
inline constexpr double kClusterGapFactor = 1e-8; // eigenvalue cluster width
inline constexpr double kConditionLimit = 1e12;   // defective-psi threshold

// All eigenpairs of a real square matrix, before reality of the spectrum has
// been established. Eigenvalues sorted by (real part, imaginary part); unit
// right-eigenvector columns paired with them.
struct ComplexSpectrum {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;
};

enum class ScalingMode {
  Canonical, // unit-norm right eigenvectors, deterministic phase
  Explicit,  // caller-supplied right-eigenvector scalings
};

// Right eigenvectors psi (columns), left partners phi with phi^H psi = I,
// and the real energies, ordered ascending.
struct BiorthonormalSystem {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd psi;
  Eigen::MatrixXcd phi;
  ScalingMode mode = ScalingMode::Canonical;
};

// Metric operator theta, its Hermitian square root omega, and the
// eigen-decomposition of theta used to build omega.
struct MetricPair {
  Eigen::MatrixXd theta;
  Eigen::MatrixXd omega;
  Eigen::VectorXd theta_eigenvalues;  // ascending, all positive
  Eigen::MatrixXd theta_eigenvectors; // orthonormal columns
};

// Dense nonsymmetric eigendecomposition with residual verification
// (||H v - l v||_2 <= tol * max(1, ||H||_F) per pair).
ComplexSpectrum eigendecompose(const Eigen::MatrixXd &h,
                               double tol = kResidualTol);

// Gate for the pseudo-Hermitian framework: returns the real parts when every
// |Im l| <= tol*(1+|l|), else throws ComplexSpectrumError carrying the
// offending eigenvalues.
Eigen::VectorXd require_real_spectrum(const ComplexSpectrum &s,
                                      double tol = kRealityTol);

// max_n |Im l_n| / (1 + |l_n|), the quantity the reality gate bounds.
double max_imag_residue(const ComplexSpectrum &s);

// Canonical mode: unit-norm right eigenvectors with the largest-magnitude
// component made real and positive; eigenvalue clusters (gap <=
// kClusterGapFactor*||H||) are orthonormalized before inversion.
BiorthonormalSystem biorthonormal_system(const Eigen::MatrixXd &h,
                                         double tol = kResidualTol);

// Explicit mode: psi_given columns are used as supplied (after verifying each
// is an eigenvector of h) and ordered by ascending eigenvalue. This is how
// printed eigenvector scalings, and hence a specific metric from the family
// of valid ones, are reproduced.
BiorthonormalSystem biorthonormal_system(const Eigen::MatrixXd &h,
                                         const Eigen::MatrixXcd &psi_given,
                                         double tol = kResidualTol);

// theta = sum_n |phi_n><phi_n| = phi phi^H, realified (imaginary residue must
// stay below kImagDiscardTol), symmetrized, and checked positive definite.
Eigen::MatrixXd metric_operator(const BiorthonormalSystem &sys);

// Completes a MetricPair from theta: omega = sum_n sqrt(eps_n)|e_n><e_n|.
// Throws NotPositiveDefiniteError when any eps_n is nonpositive.
MetricPair omega_sqrt(const Eigen::MatrixXd &theta);

// metric_operator followed by omega_sqrt.
MetricPair metric_pair(const BiorthonormalSystem &sys);

// ||H^T theta - theta H|| in max-absolute-entry norm; zero (within tolerance)
// certifies pseudo-Hermiticity of H with respect to theta.
double pseudo_hermiticity_residual(const Eigen::MatrixXd &h,
                                   const Eigen::MatrixXd &theta);

} // namespace phwalk

#endif
