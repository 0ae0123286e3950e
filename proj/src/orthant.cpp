#include "netinfo/orthant.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "netinfo/rng.hpp"

namespace netinfo {

namespace {

// Substream tags under one seed.
constexpr std::uint64_t kEstimatorStream = 0;
constexpr std::uint64_t kOracleStream = 1;

void check_labels(const LabelVector& c, Eigen::Index n) {
  if (c.c.size() != n) {
    throw InvalidArgument("label vector length does not match matrix order");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (c.c(i) != 1.0 && c.c(i) != -1.0) {
      throw InvalidArgument("label entries must be exactly +-1");
    }
  }
}

struct Factored {
  CholeskyFactor chol;
  Matrix inverse;
  double det_root;
};

Factored factor_and_gate(const Matrix& sigma, double residual_tol) {
  Factored f{cholesky(sigma), {}, 0.0};
  f.inverse = inverse_from_cholesky(f.chol, sigma);
  if (!(f.chol.inverse_residual < residual_tol)) {
    throw ResidualTooLarge(
        "||Sigma Sigma^-1 - I||_inf = " +
        std::to_string(f.chol.inverse_residual) + " exceeds tolerance " +
        std::to_string(residual_tol));
  }
  f.det_root = normalized_det_root(f.chol);
  return f;
}

double c1_from_factored(const Factored& f, const LabelVector& c) {
  const double inv_pi = 1.0 / std::numbers::pi;
  const double quad = c.c.dot(f.inverse * c.c);
  return f.det_root *
         ((0.5 - inv_pi) * f.inverse.trace() + inv_pi * quad);
}

}  // namespace

InfoEstimate estimate_c0(const Matrix& sigma, const LabelVector& c,
                         std::int64_t samples, std::uint64_t seed,
                         double residual_tol) {
  const Eigen::Index n = sigma.rows();
  check_labels(c, n);
  if (samples < 2) {
    throw InvalidArgument("estimate_c0: need at least 2 samples");
  }
  const Factored f = factor_and_gate(sigma, residual_tol);
  const Matrix a_mat =
      f.det_root * f.inverse - Matrix::Identity(n, n);

  const NormalStream normals(seed, kEstimatorStream);
  std::vector<double> exponents(static_cast<std::size_t>(samples));
  Vector u(n), v(n);
  for (std::int64_t i = 0; i < samples; ++i) {
    normals.fill(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n),
                 u.data(), static_cast<std::size_t>(n));
    v = c.c.cwiseProduct(u.cwiseAbs());
    exponents[static_cast<std::size_t>(i)] = -0.5 * v.dot(a_mat * v);
  }

  // ln sum e^{a_i} = a* + ln sum e^{a_i - a*} keeps the reduction finite.
  double a_star = exponents[0];
  for (double a : exponents) a_star = std::max(a_star, a);
  double sum = 0.0;
  for (double a : exponents) sum += std::exp(a - a_star);
  const double m = static_cast<double>(samples);
  const double mean = sum / m;
  const double log_mean = a_star + std::log(sum) - std::log(m);

  // Delta method: Var[ln(mean w)] ~ Var[w] / (M mean^2).
  double ss = 0.0;
  for (double a : exponents) {
    const double d = std::exp(a - a_star) - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / (m - 1.0));

  InfoEstimate est;
  est.n = n;
  est.c0_nats = static_cast<double>(n) * std::numbers::ln2 - log_mean;
  est.c0_std_error = sd / (mean * std::sqrt(m));
  est.c1_nats = c1_from_factored(f, c);
  est.info_upper_nats = info_upper_bound(n, est.c1_nats).exact_nats;
  est.samples_M = samples;
  est.seed = seed;
  est.inverse_residual = f.chol.inverse_residual;
  return est;
}

double c1_bound(const Matrix& sigma, const LabelVector& c,
                double residual_tol) {
  check_labels(c, sigma.rows());
  return c1_from_factored(factor_and_gate(sigma, residual_tol), c);
}

OrthantBound info_upper_bound(Eigen::Index n, double c1) {
  if (n < 1) {
    throw InvalidArgument("info_upper_bound: n must be >= 1");
  }
  if (c1 < 0.0) {
    throw InvalidArgument("info_upper_bound: c1 must be >= 0");
  }
  const double nd = static_cast<double>(n);
  return {nd * (std::numbers::ln2 - 0.5) + c1, nd / 5.0 + c1};
}

std::pair<double, double> orthant_oracle(const Matrix& sigma,
                                         const LabelVector& c,
                                         std::int64_t trials,
                                         std::uint64_t seed) {
  const Eigen::Index n = sigma.rows();
  check_labels(c, n);
  if (n > 12) {
    throw InvalidArgument(
        "orthant_oracle: n > 12 (rejection sampling is exponentially "
        "inefficient)");
  }
  if (trials < 1) {
    throw InvalidArgument("orthant_oracle: trials must be >= 1");
  }
  const CholeskyFactor f = cholesky(sigma);

  const NormalStream normals(seed, kOracleStream);
  Vector g(n), z(n);
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    normals.fill(static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(n),
                 g.data(), static_cast<std::size_t>(n));
    z = f.L.triangularView<Eigen::Lower>() * g;
    bool match = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (c.c(i) * z(i) <= 0.0) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {p, se};
}

std::pair<Matrix, LabelVector> sign_flip_canonicalize(const Matrix& sigma,
                                                      const LabelVector& c) {
  const Eigen::Index n = sigma.rows();
  check_labels(c, n);
  Matrix out = sigma;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = c.c(i) * sigma(i, j) * c.c(j);
    }
  }
  LabelVector ones;
  ones.c = Vector::Ones(n);
  return {out, ones};
}

}  // namespace netinfo
