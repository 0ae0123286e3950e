#ifndef NETINFO_ORTHANT_HPP
#define NETINFO_ORTHANT_HPP

#include <cstdint>
#include <utility>

#include "netinfo/linalg.hpp"

// Gaussian orthant probabilities and the information content of the
// version space. The orthant probability p of a sign pattern c under
// N(0, Sigma) admits the importance-sampling form
//
//   p = 2^-n E_u [ exp(-1/2 (c o |u|)^T A (c o |u|)) ],
//   A = det(Sigma)^{1/n} Sigma^{-1} - I,  u ~ N(0, I),
//
// so the information content C0 = -ln p is estimated by Monte Carlo with a
// log-sum-exp reduction. C1 is its closed-form Jensen upper counterpart.

namespace netinfo {

struct LabelVector {
  Vector c;  // entries exactly +-1
};

struct InfoEstimate {
  Eigen::Index n = 0;
  double c0_nats = 0.0;        // Monte-Carlo estimate of C0 = I[V_S]
  double c0_std_error = 0.0;   // delta-method standard error, nats
  double c1_nats = 0.0;        // closed-form C1, when computed
  double info_upper_nats = 0.0;  // n (ln 2 - 1/2) + C1
  std::int64_t samples_M = 0;
  std::uint64_t seed = 0;
  double inverse_residual = 0.0;
};

struct OrthantBound {
  double exact_nats;    // n ln 2 - n/2 + C1
  double display_nats;  // n/5 + C1, the rounded headline form
};

// Default gate on ||Sigma Sigma^-1 - I||_inf before trusting the inverse.
inline constexpr double kDefaultResidualTol = 1e-3;

// Monte-Carlo estimate of C0 from M samples of the seeded normal stream.
// Deterministic given (seed, M): sample i always uses normal indices
// [i*n, (i+1)*n). Throws ResidualTooLarge when the inverse residual
// exceeds `residual_tol`, NotPositiveDefinite from the factorisation.
InfoEstimate estimate_c0(const Matrix& sigma, const LabelVector& c,
                         std::int64_t samples, std::uint64_t seed,
                         double residual_tol = kDefaultResidualTol);

// C1(Sigma, c) = det^{1/n} [ (1/2 - 1/pi) tr(Sigma^-1) + (1/pi) c' Sigma^-1 c ].
double c1_bound(const Matrix& sigma, const LabelVector& c,
                double residual_tol = kDefaultResidualTol);

OrthantBound info_upper_bound(Eigen::Index n, double c1);

// Rejection-sampling oracle: draws z = L g and counts exact sign matches.
// Exponentially inefficient; restricted to n <= 12 and used for testing.
std::pair<double, double> orthant_oracle(const Matrix& sigma,
                                         const LabelVector& c,
                                         std::int64_t trials,
                                         std::uint64_t seed);

// Maps (Sigma, c) to (D Sigma D, 1) with D = diag(c); the orthant
// probability is invariant under this transform.
std::pair<Matrix, LabelVector> sign_flip_canonicalize(const Matrix& sigma,
                                                      const LabelVector& c);

}  // namespace netinfo

#endif  // NETINFO_ORTHANT_HPP
