#include "netinfo/kernel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace netinfo;

namespace {

// Independent scalar route for h, written directly from the definition.
double h_reference(double t) {
  const double pi = std::numbers::pi;
  return (std::sqrt(1.0 - t * t) + t * (pi - std::acos(t))) / pi;
}

Matrix random_rows(Eigen::Index n, Eigen::Index d0, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix raw(n, d0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d0; ++j) raw(i, j) = normal(rng);
  }
  return raw;
}

}  // namespace

TEST_CASE("arccos_step endpoint and midpoint values") {
  CHECK(arccos_step(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(arccos_step(-1.0)) < 1e-12);
  CHECK(arccos_step(0.0) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("arccos_step clamps ulp noise but rejects unnormalised input") {
  CHECK(arccos_step(1.0 + 5e-10) == doctest::Approx(1.0));
  CHECK(arccos_step(-1.0 - 5e-10) == doctest::Approx(0.0));
  CHECK_THROWS_AS(arccos_step(1.1), DomainError);
  CHECK_THROWS_AS(arccos_step(-1.000001), DomainError);
}

TEST_CASE("h is non-decreasing, dominates t and maps into [0,1]") {
  double prev = arccos_step(-1.0);
  for (int k = 0; k <= 2000; ++k) {
    const double t = -1.0 + 2.0 * k / 2000.0;
    const double ht = arccos_step(t);
    CHECK(ht >= prev);
    CHECK(ht >= t);
    CHECK(ht >= 0.0);
    CHECK(ht <= 1.0);
    if (t < 1.0) CHECK(ht > t);
    prev = ht;
  }
}

TEST_CASE("iterating h increases toward the fixed point at 1") {
  for (double t0 : {-0.99, -0.3, 0.0, 0.5, 0.999, 1.0}) {
    double t = t0;
    for (int iter = 0; iter < 50; ++iter) {
      const double next = arccos_step(t);
      CHECK(next >= t);
      CHECK(next <= 1.0);
      t = next;
    }
  }
}

TEST_CASE("normalize_inputs") {
  SUBCASE("axis row in d0 = 4") {
    Matrix raw(1, 4);
    raw << 1.0, 0.0, 0.0, 0.0;
    const InputMatrix x = normalize_inputs(raw);
    CHECK(x.rows(0, 0) == doctest::Approx(2.0));
  }
  SUBCASE("every row reaches norm sqrt(d0)") {
    std::mt19937_64 rng(3);
    const InputMatrix x = normalize_inputs(random_rows(20, 784, rng));
    for (Eigen::Index i = 0; i < x.n(); ++i) {
      CHECK(x.rows.row(i).norm() ==
            doctest::Approx(28.0).epsilon(1e-6));
    }
  }
  SUBCASE("zero row is rejected") {
    Matrix raw = Matrix::Zero(2, 4);
    raw(0, 0) = 1.0;
    CHECK_THROWS_AS(normalize_inputs(raw), ZeroInputRow);
  }
}

TEST_CASE("kernel matrix on identical and orthogonal inputs") {
  Matrix raw(2, 4);
  SUBCASE("identical inputs give covariance 1 at any depth") {
    raw << 1, 2, 3, 4, 1, 2, 3, 4;
    for (int depth : {2, 5, 11}) {
      const Matrix sigma =
          kernel_matrix(normalize_inputs(raw), {.depth_L = depth});
      CHECK(sigma(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("orthogonal inputs, L = 2") {
    raw << 1, 0, 0, 0, 0, 1, 0, 0;
    const Matrix sigma =
        kernel_matrix(normalize_inputs(raw), {.depth_L = 2});
    CHECK(sigma(0, 1) ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
  }
  SUBCASE("orthogonal inputs, L = 3") {
    raw << 1, 0, 0, 0, 0, 1, 0, 0;
    const Matrix sigma =
        kernel_matrix(normalize_inputs(raw), {.depth_L = 3});
    CHECK(sigma(0, 1) ==
          doctest::Approx(h_reference(1.0 / std::numbers::pi))
              .epsilon(1e-12));
    CHECK(sigma(0, 1) == doctest::Approx(0.493731).epsilon(1e-4));
  }
}

TEST_CASE("single input yields Sigma = [1]") {
  std::mt19937_64 rng(17);
  const Matrix sigma =
      kernel_matrix(normalize_inputs(random_rows(1, 64, rng)), {.depth_L = 7});
  CHECK(sigma.rows() == 1);
  CHECK(sigma(0, 0) == 1.0);
}

TEST_CASE("kernel matrices are symmetric, bounded and positive definite") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size(2, 50);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = size(rng);
    const int depth = (trial % 2 == 0) ? 2 : 7;
    const Matrix sigma = kernel_matrix(
        normalize_inputs(random_rows(n, 100, rng)), {.depth_L = depth});
    CHECK((sigma - sigma.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((sigma.diagonal().array() == 1.0).all());
    CHECK(sigma.minCoeff() >= 0.0);
    CHECK(sigma.maxCoeff() <= 1.0);
    CHECK_NOTHROW(cholesky(sigma));
  }
}

TEST_CASE("depth rejection") {
  Matrix raw(1, 4);
  raw << 1, 0, 0, 0;
  CHECK_THROWS_AS(kernel_matrix(normalize_inputs(raw), {.depth_L = 1}),
                  InvalidArgument);
}
