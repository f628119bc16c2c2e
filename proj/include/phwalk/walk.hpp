// walk.hpp - Time evolution and per-vertex transition probabilities for the
// three walk models. Evolution is spectral (exact in t), never timestepped.

#ifndef PHWALK_WALK_HPP
#define PHWALK_WALK_HPP

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "phwalk/spectral.hpp"

namespace phwalk {

enum class WalkModel {
  PseudoHermitian, // "sq": p_k = |<k|Omega|psi(t)>|^2
  Hermitian,       // "q":  p_k = |<k|e^{-iHt}|psi0>|^2, symmetric H only
  Classical,       // "c":  p   = e^{-Ht} p0 (Kolmogorov)
};

std::string_view model_name(WalkModel model);
WalkModel model_from_name(std::string_view name); // throws ParseError

struct WalkState {
  Eigen::VectorXcd amplitudes;
  double time = 0.0;
};

struct ProbabilitySeries {
  std::vector<double> times;
  Eigen::MatrixXd probabilities; // row per time, column per vertex
  WalkModel model = WalkModel::PseudoHermitian;
};

// v / sqrt(v^H theta v). Throws on the zero vector or a nonpositive norm.
Eigen::VectorXcd normalize_initial(const Eigen::VectorXcd &v,
                                   const Eigen::MatrixXd &theta);

// |psi(t)> = sum_n e^{-i E_n t} |psi_n><phi_n|psi0>. psi0 is expected to
// carry unit theta-norm for the metric matching sys.
WalkState evolve(const BiorthonormalSystem &sys, const Eigen::VectorXcd &psi0,
                 double t);

// p_k = |<k|omega|psi(t)>|^2.
Eigen::VectorXd pseudo_probability(const WalkState &state,
                                   const Eigen::MatrixXd &omega);

// Hermitian baseline through the orthonormal spectral expansion. Throws
// std::invalid_argument when h is not symmetric (directed graphs must use
// the sq model).
Eigen::VectorXd hermitian_probability(const Eigen::MatrixXd &h,
                                      const Eigen::VectorXcd &psi0, double t);

// p(t) = e^{-Ht} p0 through the biorthonormal expansion, which reduces to
// the orthonormal one when h is symmetric. p0 must be entrywise nonnegative
// and sum to 1.
Eigen::VectorXd classical_probability(const BiorthonormalSystem &sys,
                                      const Eigen::VectorXd &p0, double t);
Eigen::VectorXd classical_probability(const Eigen::MatrixXd &h,
                                      const Eigen::VectorXd &p0, double t);

// Probability vectors over a strictly increasing time grid. The start vector
// is normalized per model (sq: theta-norm, q: Euclidean norm, c: must
// already be a probability vector).
ProbabilitySeries probability_series(const Eigen::MatrixXd &h,
                                     const BiorthonormalSystem &sys,
                                     const MetricPair &metric,
                                     const Eigen::VectorXcd &start,
                                     const std::vector<double> &grid,
                                     WalkModel model);

// steps+1 points t_i = i * t_max / steps.
std::vector<double> uniform_grid(double t_max, int steps);

} // namespace phwalk

#endif
