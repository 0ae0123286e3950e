#include "netinfo/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace netinfo {

namespace {
constexpr double kClampBand = 1e-9;
}

double arccos_step(double t) {
  if (t < -1.0 - kClampBand || t > 1.0 + kClampBand) {
    throw DomainError("arccos_step: cosine similarity " + std::to_string(t) +
                      " outside [-1, 1]; inputs are not normalised");
  }
  t = std::clamp(t, -1.0, 1.0);
  const double pi = std::numbers::pi;
  return (std::sqrt(1.0 - t * t) + t * (pi - std::acos(t))) / pi;
}

InputMatrix normalize_inputs(const Matrix& raw) {
  const Eigen::Index n = raw.rows();
  const Eigen::Index d0 = raw.cols();
  if (n < 1 || d0 < 1) {
    throw InvalidArgument("normalize_inputs: empty input matrix");
  }
  const double target = std::sqrt(static_cast<double>(d0));
  InputMatrix x;
  x.rows = raw;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = x.rows.row(i).norm();
    if (norm < 1e-12) {
      throw ZeroInputRow("normalize_inputs: row " + std::to_string(i) +
                         " has norm below 1e-12");
    }
    x.rows.row(i) *= target / norm;
  }
  return x;
}

Matrix kernel_matrix(const InputMatrix& x, const ArchSpec& arch) {
  if (arch.depth_L < 2) {
    throw InvalidArgument("kernel_matrix: depth_L must be >= 2");
  }
  const Eigen::Index n = x.n();
  const double d0 = static_cast<double>(x.d0());
  Matrix cos = (x.rows * x.rows.transpose()) / d0;
  Matrix sigma = Matrix::Ones(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double t = cos(i, j);
      for (int l = 0; l < arch.depth_L - 1; ++l) {
        t = arccos_step(t);
      }
      sigma(i, j) = t;
      sigma(j, i) = t;
    }
  }
  return sigma;
}

}  // namespace netinfo
