#ifndef NETINFO_DATASET_HPP
#define NETINFO_DATASET_HPP

#include <cstdint>
#include <set>
#include <string>

#include "netinfo/idx.hpp"
#include "netinfo/kernel.hpp"
#include "netinfo/orthant.hpp"

// Dataset construction: the three MNIST-derived variants (binary digits,
// decimal digits, random labels) plus a synthetic two-cluster fixture.
// All sampling is driven by the counter-based stream, so an identical
// (variant, n, seed, raw files) tuple reproduces the dataset byte for byte.

namespace netinfo {

enum class Variant { binary_digits, decimal_digits, random_labels, synthetic };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

struct Dataset {
  InputMatrix inputs;  // rows normalised to norm sqrt(d0)
  LabelVector labels;  // +-1 per row
  Variant variant = Variant::synthetic;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::set<int> source_digits;
  // Exact pixel-duplicate images dropped during sampling and redrawn
  // (duplicates would make the kernel matrix singular).
  std::int64_t dedup_redraws = 0;
};

// Subsamples n examples uniformly without replacement from the (digit
// filtered) pool, assigns labels per variant, flattens and normalises.
Dataset build_dataset(const RawImageSet& raw, Variant variant, std::int64_t n,
                      std::uint64_t seed);

// Two clusters of normalised inputs whose within-class cosine similarity
// concentrates near `intra_class_cos` and between-class near its negative;
// labels are +-1 by cluster.
Dataset synthetic_dataset(std::int64_t n, std::int64_t d0,
                          double intra_class_cos, std::uint64_t seed);

}  // namespace netinfo

#endif  // NETINFO_DATASET_HPP
