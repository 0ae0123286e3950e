#ifndef NETINFO_LINALG_HPP
#define NETINFO_LINALG_HPP

#include <Eigen/Dense>

#include "netinfo/errors.hpp"

// Dense SPD linear algebra in log-domain form: Cholesky factorisation,
// inverse via triangular solves, log-determinant and the normalised
// determinant root. Pure functions over immutable inputs; thread-safe.

namespace netinfo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct CholeskyFactor {
  Matrix L;          // lower triangular, L L^T = Sigma
  Vector log_diag;   // ln L_ii
  // ||Sigma Sigma^-1 - I||_inf, populated by inverse_from_cholesky.
  double inverse_residual = -1.0;

  Eigen::Index order() const { return L.rows(); }
};

// Throws NotPositiveDefinite when a pivot is <= 0 (singular or indefinite
// input, e.g. duplicate training points). No jitter is applied here;
// regularisation is an explicit caller decision.
CholeskyFactor cholesky(const Matrix& sigma);

// Sigma^-1 = (L^-1)^T L^-1 via two triangular solves. Also computes the
// reconstruction residual ||Sigma Sigma^-1 - I||_inf and stores it on `f`;
// conditioning is surfaced through the residual, not an error.
Matrix inverse_from_cholesky(CholeskyFactor& f, const Matrix& sigma);

// nth root of det(Sigma) = exp((2/n) sum ln L_ii). Entirely log-domain;
// the raw determinant would under/overflow for n in the hundreds.
double normalized_det_root(const CholeskyFactor& f);

// Sum of 2 ln L_ii, i.e. ln det Sigma.
double log_det(const CholeskyFactor& f);

bool residual_check(const Matrix& sigma, const Matrix& sigma_inv, double tol);

double max_abs_residual(const Matrix& sigma, const Matrix& sigma_inv);

}  // namespace netinfo

#endif  // NETINFO_LINALG_HPP
