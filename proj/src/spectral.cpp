// spectral.cpp - Eigensystem, biorthonormal construction and metric operators.

#include "phwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "phwalk/matrix_text.hpp"

namespace phwalk {

namespace {

void require_square(const Eigen::MatrixXd &h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw std::invalid_argument("expected a nonempty square matrix, got " +
                                std::to_string(h.rows()) + "x" +
                                std::to_string(h.cols()));
  }
}

// Largest-magnitude component made real and positive. Ties (exact magnitude
// equality) resolve to the lowest index, keeping the convention deterministic.
void fix_phase(Eigen::Ref<Eigen::VectorXcd> column) {
  Eigen::Index pivot = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    double mag = std::abs(column(i));
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (best == 0.0) {
    return; // zero column is rejected later by the conditioning check
  }
  column *= std::conj(column(pivot)) / best;
}

double condition_estimate(const Eigen::MatrixXcd &m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  double smax = svd.singularValues()(0);
  if (smin <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return smax / smin;
}

// Shared tail of both construction modes: conditioning gate, then
// phi = (psi^{-1})^H.
BiorthonormalSystem finish_system(Eigen::VectorXd energies,
                                  Eigen::MatrixXcd psi, ScalingMode mode) {
  double cond = condition_estimate(psi);
  if (!(cond < kConditionLimit)) {
    throw DefectiveMatrixError(
        "eigenvector matrix is numerically singular (condition " +
            format_double(cond) + " exceeds threshold " +
            format_double(kConditionLimit) +
            "); the Hamiltonian is defective or near-defective",
        cond, kConditionLimit);
  }
  BiorthonormalSystem sys;
  sys.energies = std::move(energies);
  sys.phi = psi.inverse().adjoint();
  sys.psi = std::move(psi);
  sys.mode = mode;
  return sys;
}

} // namespace

ComplexSpectrum eigendecompose(const Eigen::MatrixXd &h, double tol) {
  require_square(h);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("residual tolerance must be positive");
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge");
  }
  const Eigen::Index n = h.rows();
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto &values = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     if (values(a).real() != values(b).real()) {
                       return values(a).real() < values(b).real();
                     }
                     return values(a).imag() < values(b).imag();
                   });

  ComplexSpectrum s;
  s.eigenvalues.resize(n);
  s.right_vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    s.eigenvalues(k) = values(order[static_cast<size_t>(k)]);
    s.right_vectors.col(k) =
        solver.eigenvectors().col(order[static_cast<size_t>(k)]).normalized();
  }

  double scale = std::max(1.0, h.norm());
  Eigen::MatrixXcd hc = h.cast<std::complex<double>>();
  for (Eigen::Index k = 0; k < n; ++k) {
    double residual =
        (hc * s.right_vectors.col(k) -
         s.eigenvalues(k) * s.right_vectors.col(k))
            .norm();
    if (!(residual <= tol * scale)) {
      throw std::runtime_error("eigenpair " + std::to_string(k) +
                               " residual " + format_double(residual) +
                               " exceeds bound " + format_double(tol * scale));
    }
  }
  return s;
}

double max_imag_residue(const ComplexSpectrum &s) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    worst = std::max(worst, std::abs(s.eigenvalues(k).imag()) /
                                (1.0 + std::abs(s.eigenvalues(k))));
  }
  return worst;
}

Eigen::VectorXd require_real_spectrum(const ComplexSpectrum &s, double tol) {
  std::vector<std::complex<double>> offenders;
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    std::complex<double> l = s.eigenvalues(k);
    if (std::abs(l.imag()) > tol * (1.0 + std::abs(l))) {
      offenders.push_back(l);
    }
  }
  if (!offenders.empty()) {
    std::string what = "spectrum is not real within tolerance; offending"
                       " eigenvalues:";
    for (const auto &l : offenders) {
      what += ' ';
      what += format_complex(l);
    }
    throw ComplexSpectrumError(what, std::move(offenders));
  }
  return s.eigenvalues.real();
}

BiorthonormalSystem biorthonormal_system(const Eigen::MatrixXd &h,
                                         double tol) {
  ComplexSpectrum spectrum = eigendecompose(h, tol);
  Eigen::VectorXd energies = require_real_spectrum(spectrum);
  Eigen::MatrixXcd psi = spectrum.right_vectors; // ascending-energy columns
  const Eigen::Index n = psi.cols();

  // Orthonormalize each near-degenerate cluster so the split of an
  // eigenspace between its columns is deterministic and well conditioned.
  double cluster_gap = kClusterGapFactor * h.cwiseAbs().maxCoeff();
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && energies(end) - energies(end - 1) <= cluster_gap) {
      ++end;
    }
    if (end - begin > 1) {
      Eigen::MatrixXcd block = psi.middleCols(begin, end - begin);
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(block);
      Eigen::MatrixXcd r = qr.matrixQR()
                               .topRows(end - begin)
                               .triangularView<Eigen::Upper>();
      double rmax = r.diagonal().cwiseAbs().maxCoeff();
      double rmin = r.diagonal().cwiseAbs().minCoeff();
      if (!(rmin > rmax / kConditionLimit)) {
        throw DefectiveMatrixError(
            "rank-deficient eigenvector cluster at energy " +
                format_double(energies(begin)) +
                "; the Hamiltonian is defective",
            rmax / std::max(rmin, 1e-300), kConditionLimit);
      }
      psi.middleCols(begin, end - begin) =
          qr.householderQ() * Eigen::MatrixXcd::Identity(n, end - begin);
    }
    begin = end;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    fix_phase(psi.col(k));
  }
  return finish_system(std::move(energies), std::move(psi),
                       ScalingMode::Canonical);
}

BiorthonormalSystem biorthonormal_system(const Eigen::MatrixXd &h,
                                         const Eigen::MatrixXcd &psi_given,
                                         double tol) {
  require_square(h);
  if (psi_given.rows() != h.rows() || psi_given.cols() != h.cols()) {
    throw std::invalid_argument(
        "eigenvector matrix dimension mismatch: Hamiltonian is " +
        std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
        ", eigenvectors are " + std::to_string(psi_given.rows()) + "x" +
        std::to_string(psi_given.cols()));
  }
  const Eigen::Index n = h.rows();
  double scale = std::max(1.0, h.norm());
  Eigen::MatrixXcd hc = h.cast<std::complex<double>>();

  // Rayleigh quotient per supplied column, then verify it really is an
  // eigenpair of h.
  Eigen::VectorXd rayleigh(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto &v = psi_given.col(k);
    double norm2 = v.squaredNorm();
    if (norm2 == 0.0) {
      throw std::invalid_argument("supplied eigenvector " +
                                  std::to_string(k + 1) + " is zero");
    }
    std::complex<double> value = v.dot(hc * v) / norm2;
    double residual = (hc * v - value * v).norm() / std::sqrt(norm2);
    if (!(residual <= tol * scale)) {
      throw std::invalid_argument(
          "supplied column " + std::to_string(k + 1) +
          " is not an eigenvector: residual " + format_double(residual) +
          " exceeds bound " + format_double(tol * scale));
    }
    if (std::abs(value.imag()) > kRealityTol * (1.0 + std::abs(value))) {
      throw ComplexSpectrumError("supplied eigenvector " +
                                     std::to_string(k + 1) +
                                     " has complex eigenvalue " +
                                     format_complex(value),
                                 {value});
    }
    rayleigh(k) = value.real();
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return rayleigh(a) < rayleigh(b);
                   });
  Eigen::VectorXd energies(n);
  Eigen::MatrixXcd psi(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    energies(k) = rayleigh(order[static_cast<size_t>(k)]);
    psi.col(k) = psi_given.col(order[static_cast<size_t>(k)]);
  }
  return finish_system(std::move(energies), std::move(psi),
                       ScalingMode::Explicit);
}

Eigen::MatrixXd metric_operator(const BiorthonormalSystem &sys) {
  Eigen::MatrixXcd theta_c = sys.phi * sys.phi.adjoint();
  double imag_residue = theta_c.imag().cwiseAbs().maxCoeff();
  if (imag_residue > kImagDiscardTol) {
    throw std::runtime_error(
        "metric operator has imaginary residue " + format_double(imag_residue) +
        " above discard threshold " + format_double(kImagDiscardTol));
  }
  Eigen::MatrixXd theta = theta_c.real();
  theta = ((theta + theta.transpose()) / 2.0).eval(); // kill round-off skew

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(theta);
  double min_eig = es.eigenvalues()(0);
  if (!(min_eig > 0.0)) {
    throw NotPositiveDefiniteError(
        "metric operator is not positive definite (smallest eigenvalue " +
            format_double(min_eig) + ")",
        min_eig);
  }
  return theta;
}

MetricPair omega_sqrt(const Eigen::MatrixXd &theta) {
  require_square(theta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(theta);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of theta failed");
  }
  double min_eig = es.eigenvalues()(0);
  double tol = kImagDiscardTol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (!(min_eig > tol)) {
    throw NotPositiveDefiniteError(
        "theta is not positive definite (smallest eigenvalue " +
            format_double(min_eig) + ")",
        min_eig);
  }
  MetricPair pair;
  pair.theta = theta;
  pair.theta_eigenvalues = es.eigenvalues();
  pair.theta_eigenvectors = es.eigenvectors();
  pair.omega = es.eigenvectors() *
               es.eigenvalues().cwiseSqrt().asDiagonal() *
               es.eigenvectors().transpose();
  pair.omega = ((pair.omega + pair.omega.transpose()) / 2.0).eval();
  return pair;
}

MetricPair metric_pair(const BiorthonormalSystem &sys) {
  return omega_sqrt(metric_operator(sys));
}

double pseudo_hermiticity_residual(const Eigen::MatrixXd &h,
                                   const Eigen::MatrixXd &theta) {
  if (h.rows() != theta.rows() || h.cols() != theta.cols()) {
    throw std::invalid_argument("hamiltonian and theta dimensions differ");
  }
  return (h.transpose() * theta - theta * h).cwiseAbs().maxCoeff();
}

} // namespace phwalk
