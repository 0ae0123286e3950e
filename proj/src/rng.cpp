#include "netinfo/rng.hpp"

#include <cmath>

namespace netinfo {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double NormalStream::operator()(std::uint64_t k) const noexcept {
  const std::uint64_t blk = k >> 1;
  const double u1 = gen_.uniform(blk, 0);
  const double u2 = gen_.uniform(blk, 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return (k & 1) ? r * std::sin(kTwoPi * u2) : r * std::cos(kTwoPi * u2);
}

void NormalStream::fill(std::uint64_t k0, double* out,
                        std::size_t n) const noexcept {
  std::uint64_t k = k0;
  std::size_t i = 0;
  // Peel a leading odd index so the main loop works on whole blocks.
  if ((k & 1) && i < n) {
    out[i++] = (*this)(k++);
  }
  for (; i + 1 < n; i += 2, k += 2) {
    const std::uint64_t blk = k >> 1;
    const double u1 = gen_.uniform(blk, 0);
    const double u2 = gen_.uniform(blk, 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    out[i] = r * std::cos(kTwoPi * u2);
    out[i + 1] = r * std::sin(kTwoPi * u2);
  }
  if (i < n) {
    out[i] = (*this)(k);
  }
}

}  // namespace netinfo
