#ifndef NETINFO_KERNEL_HPP
#define NETINFO_KERNEL_HPP

#include <vector>

#include "netinfo/linalg.hpp"

// Infinite-width NNGP covariance for depth-L relu MLPs: the compositional
// arccosine kernel, h applied (L-1) times to the input cosine similarity.

namespace netinfo {

struct ArchSpec {
  int depth_L = 7;          // number of layers, >= 2
  int input_dim_d0 = 784;
  // Hidden widths d_1..d_{L-1} and bits per weight are used only by the
  // symmetry-counting information bound; the NNGP kernel depends on
  // (depth_L, input_dim_d0) alone.
  std::vector<long> widths;
  int weight_bits_w = 32;
};

// Inputs with every row normalised to Euclidean norm sqrt(d0).
struct InputMatrix {
  Matrix rows;  // n x d0
  Eigen::Index n() const { return rows.rows(); }
  Eigen::Index d0() const { return rows.cols(); }
};

// One step of the arccosine recursion:
//   h(t) = (1/pi) [ sqrt(1 - t^2) + t (pi - arccos t) ].
// t is clamped to [-1, 1]; values outside the clamp band of 1e-9 signal an
// unnormalised kernel upstream and raise DomainError.
double arccos_step(double t);

// Rescales each row of `raw` to norm sqrt(d0). Throws ZeroInputRow for a
// row with norm below 1e-12.
InputMatrix normalize_inputs(const Matrix& raw);

// Sigma_ij = h^{(L-1)}(x_i . x_j / d0). Diagonal is assigned 1 directly
// (h(1) = 1 is a fixed point); the upper triangle is computed and mirrored.
Matrix kernel_matrix(const InputMatrix& x, const ArchSpec& arch);

}  // namespace netinfo

#endif  // NETINFO_KERNEL_HPP
