#ifndef NETINFO_RNG_HPP
#define NETINFO_RNG_HPP

#include <array>
#include <cstdint>

// Counter-based random stream (Philox4x32-10, Salmon et al. 2011).
// Every block of output is a pure function of (seed, stream, index), so
// samples can be generated in any order, from any number of workers, and
// the stream is bit-reproducible for a given seed.

namespace netinfo {

class Philox {
 public:
  // `stream` separates independent substreams under the same seed
  // (e.g. per-sample normal vectors vs. oracle trials).
  Philox(std::uint64_t seed, std::uint64_t stream) noexcept
      : seed_(seed), stream_(stream) {}

  // 128 bits of output for counter block `index`.
  std::array<std::uint32_t, 4> block(std::uint64_t index) const noexcept {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = kMul0 * static_cast<std::uint64_t>(ctr[0]);
      const std::uint64_t p1 = kMul1 * static_cast<std::uint64_t>(ctr[2]);
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    return ctr;
  }

  // Uniform double in (0, 1], built from 53 random bits of one 64-bit lane.
  // The open-at-zero convention keeps log(u) finite for Box-Muller.
  double uniform(std::uint64_t index, int lane) const noexcept {
    const auto b = block(index);
    const std::uint64_t hi = b[lane == 0 ? 0 : 2];
    const std::uint64_t lo = b[lane == 0 ? 1 : 3];
    const std::uint64_t bits = (hi << 32) | lo;
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Standard normal deviates via Box-Muller over the Philox uniform stream.
// normal(k) and normal(k+1) share counter block k/2, so any contiguous or
// strided access pattern reproduces the same values.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : gen_(seed, stream) {}

  double operator()(std::uint64_t k) const noexcept;

  // Fills out[0..n) with normals k0, k0+1, ..., k0+n-1.
  void fill(std::uint64_t k0, double* out, std::size_t n) const noexcept;

 private:
  Philox gen_;
};

}  // namespace netinfo

#endif  // NETINFO_RNG_HPP
