// walk.cpp - Spectral time evolution and transition probabilities.

#include "phwalk/walk.hpp"

#include <cmath>
#include <complex>

#include "phwalk/matrix_text.hpp"

namespace phwalk {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

Eigen::VectorXcd phase_factors(const Eigen::VectorXd &energies, double t) {
  Eigen::VectorXcd phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    phases(k) = std::exp(-kImagUnit * energies(k) * t);
  }
  return phases;
}

void require_time(double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("time must be nonnegative, got " +
                                format_double(t));
  }
}

void require_stochastic(const Eigen::VectorXd &p0) {
  if (p0.minCoeff() < 0.0) {
    throw std::invalid_argument(
        "classical initial distribution has a negative entry");
  }
  if (std::abs(p0.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "classical initial distribution must sum to 1, got " +
        format_double(p0.sum()));
  }
}

} // namespace

std::string_view model_name(WalkModel model) {
  switch (model) {
  case WalkModel::PseudoHermitian:
    return "sq";
  case WalkModel::Hermitian:
    return "q";
  case WalkModel::Classical:
    return "c";
  }
  throw std::invalid_argument("unknown walk model");
}

WalkModel model_from_name(std::string_view name) {
  if (name == "sq") {
    return WalkModel::PseudoHermitian;
  }
  if (name == "q") {
    return WalkModel::Hermitian;
  }
  if (name == "c") {
    return WalkModel::Classical;
  }
  throw ParseError("unknown walk model '" + std::string(name) +
                   "' (expected sq, q or c)");
}

Eigen::VectorXcd normalize_initial(const Eigen::VectorXcd &v,
                                   const Eigen::MatrixXd &theta) {
  if (v.size() != theta.rows()) {
    throw std::invalid_argument("state and metric dimensions differ");
  }
  if (v.isZero(0.0)) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  std::complex<double> q = v.dot(theta.cast<std::complex<double>>() * v);
  double norm2 = q.real();
  if (!(norm2 > 0.0)) {
    throw std::runtime_error("theta-norm of the initial state is not positive"
                             " (value " +
                             format_double(norm2) + ")");
  }
  return v / std::sqrt(norm2);
}

WalkState evolve(const BiorthonormalSystem &sys, const Eigen::VectorXcd &psi0,
                 double t) {
  require_time(t);
  if (psi0.size() != sys.psi.rows()) {
    throw std::invalid_argument("state and system dimensions differ");
  }
  Eigen::VectorXcd coeff = sys.phi.adjoint() * psi0;
  WalkState state;
  state.amplitudes =
      sys.psi * phase_factors(sys.energies, t).cwiseProduct(coeff);
  state.time = t;
  return state;
}

Eigen::VectorXd pseudo_probability(const WalkState &state,
                                   const Eigen::MatrixXd &omega) {
  if (state.amplitudes.size() != omega.rows()) {
    throw std::invalid_argument("state and omega dimensions differ");
  }
  return (omega.cast<std::complex<double>>() * state.amplitudes)
      .cwiseAbs2();
}

Eigen::VectorXd hermitian_probability(const Eigen::MatrixXd &h,
                                      const Eigen::VectorXcd &psi0, double t) {
  require_time(t);
  if (h.rows() != h.cols() || h.rows() != psi0.size()) {
    throw std::invalid_argument("hamiltonian and state dimensions differ");
  }
  double skew = (h - h.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument(
        "hermitian model requires a symmetric Hamiltonian (asymmetry " +
        format_double(skew) + "); use the sq model for directed graphs");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed");
  }
  Eigen::MatrixXcd q = es.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd amplitudes =
      q * phase_factors(es.eigenvalues(), t).cwiseProduct(q.adjoint() * psi0);
  return amplitudes.cwiseAbs2();
}

Eigen::VectorXd classical_probability(const BiorthonormalSystem &sys,
                                      const Eigen::VectorXd &p0, double t) {
  require_time(t);
  if (p0.size() != sys.psi.rows()) {
    throw std::invalid_argument("distribution and system dimensions differ");
  }
  require_stochastic(p0);
  Eigen::VectorXcd coeff = sys.phi.adjoint() * p0.cast<std::complex<double>>();
  Eigen::VectorXcd decay(sys.energies.size());
  for (Eigen::Index k = 0; k < sys.energies.size(); ++k) {
    decay(k) = std::exp(-sys.energies(k) * t);
  }
  Eigen::VectorXcd p = sys.psi * decay.cwiseProduct(coeff);
  return p.real();
}

Eigen::VectorXd classical_probability(const Eigen::MatrixXd &h,
                                      const Eigen::VectorXd &p0, double t) {
  return classical_probability(biorthonormal_system(h), p0, t);
}

ProbabilitySeries probability_series(const Eigen::MatrixXd &h,
                                     const BiorthonormalSystem &sys,
                                     const MetricPair &metric,
                                     const Eigen::VectorXcd &start,
                                     const std::vector<double> &grid,
                                     WalkModel model) {
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("time grid must be strictly increasing");
    }
  }
  const Eigen::Index n = sys.psi.rows();
  if (start.size() != n) {
    throw std::invalid_argument("start state and system dimensions differ");
  }

  ProbabilitySeries series;
  series.times = grid;
  series.model = model;
  series.probabilities.resize(static_cast<Eigen::Index>(grid.size()), n);

  switch (model) {
  case WalkModel::PseudoHermitian: {
    Eigen::VectorXcd psi0 = normalize_initial(start, metric.theta);
    for (size_t i = 0; i < grid.size(); ++i) {
      series.probabilities.row(static_cast<Eigen::Index>(i)) =
          pseudo_probability(evolve(sys, psi0, grid[i]), metric.omega)
              .transpose();
    }
    break;
  }
  case WalkModel::Hermitian: {
    if (start.isZero(0.0)) {
      throw std::invalid_argument("cannot normalize the zero vector");
    }
    Eigen::VectorXcd psi0 = start / start.norm();
    for (size_t i = 0; i < grid.size(); ++i) {
      series.probabilities.row(static_cast<Eigen::Index>(i)) =
          hermitian_probability(h, psi0, grid[i]).transpose();
    }
    break;
  }
  case WalkModel::Classical: {
    if (start.imag().cwiseAbs().maxCoeff() > 0.0) {
      throw std::invalid_argument(
          "classical initial distribution must be real");
    }
    Eigen::VectorXd p0 = start.real();
    for (size_t i = 0; i < grid.size(); ++i) {
      series.probabilities.row(static_cast<Eigen::Index>(i)) =
          classical_probability(sys, p0, grid[i]).transpose();
    }
    break;
  }
  }
  return series;
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0)) {
    throw std::invalid_argument("t_max must be positive");
  }
  if (steps < 1) {
    throw std::invalid_argument("steps must be at least 1");
  }
  std::vector<double> grid(static_cast<size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    grid[static_cast<size_t>(i)] = t_max * i / steps;
  }
  return grid;
}

} // namespace phwalk
