#include "netinfo/pac_bayes.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace netinfo {

GeneralisationBound realisable_bound(double info_nats, long n, double delta) {
  if (n < 2) {
    throw InvalidArgument("realisable_bound: n must be >= 2");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("realisable_bound: delta must lie in (0, 1)");
  }
  if (info_nats < 0.0) {
    throw InvalidArgument("realisable_bound: info_nats must be >= 0");
  }
  GeneralisationBound b;
  b.n = n;
  b.delta = delta;
  b.info_nats = info_nats;
  b.raw_bound =
      (info_nats + std::log(2.0 * static_cast<double>(n) / delta)) /
      static_cast<double>(n - 1);
  b.error_bound = std::min(1.0, 1.0 - std::exp(-b.raw_bound));
  b.vacuous = b.error_bound >= 0.5;
  return b;
}

double symmetry_info_bound(const ArchSpec& arch) {
  if (arch.depth_L < 2) {
    throw InvalidArgument("symmetry_info_bound: depth_L must be >= 2");
  }
  if (arch.weight_bits_w < 1) {
    throw InvalidArgument("symmetry_info_bound: weight_bits must be >= 1");
  }
  if (static_cast<int>(arch.widths.size()) != arch.depth_L - 1) {
    throw InvalidArgument(
        "symmetry_info_bound: expected " + std::to_string(arch.depth_L - 1) +
        " hidden widths, got " + std::to_string(arch.widths.size()));
  }
  std::vector<long> dims;
  dims.reserve(static_cast<std::size_t>(arch.depth_L) + 1);
  dims.push_back(arch.input_dim_d0);
  for (long w : arch.widths) {
    if (w < 1) {
      throw InvalidArgument("symmetry_info_bound: widths must be >= 1");
    }
    dims.push_back(w);
  }
  dims.push_back(1);  // single output unit

  double weight_count = 0.0;
  for (std::size_t l = 1; l < dims.size(); ++l) {
    weight_count += static_cast<double>(dims[l]) * static_cast<double>(dims[l - 1]);
  }
  double log_symmetries = 0.0;
  for (long w : arch.widths) {
    log_symmetries += std::lgamma(static_cast<double>(w) + 1.0);
  }
  return std::numbers::ln2 * static_cast<double>(arch.weight_bits_w) *
             weight_count -
         log_symmetries;
}

}  // namespace netinfo
