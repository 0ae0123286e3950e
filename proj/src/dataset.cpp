#include "netinfo/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "netinfo/rng.hpp"

namespace netinfo {

namespace {

// Substream tags (0 and 1 belong to the orthant module).
constexpr std::uint64_t kShuffleStream = 2;
constexpr std::uint64_t kCoinStream = 3;
constexpr std::uint64_t kSyntheticStream = 4;

// Deterministic Fisher-Yates shuffle over the counter-based stream.
void shuffle_indices(std::vector<std::int64_t>& idx, std::uint64_t seed) {
  const Philox gen(seed, kShuffleStream);
  for (std::size_t i = idx.size(); i > 1; --i) {
    const double u = gen.uniform(static_cast<std::uint64_t>(i), 0);
    auto j = static_cast<std::size_t>(u * static_cast<double>(i));
    j = std::min(j, i - 1);
    std::swap(idx[i - 1], idx[j]);
  }
}

// FNV-1a over an image's pixel bytes, for duplicate detection.
std::uint64_t pixel_hash(const std::uint8_t* p, std::size_t len) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::binary_digits: return "binary_digits";
    case Variant::decimal_digits: return "decimal_digits";
    case Variant::random_labels: return "random_labels";
    case Variant::synthetic: return "synthetic";
  }
  return "unknown";
}

Variant variant_from_string(const std::string& name) {
  if (name == "binary_digits" || name == "binary") return Variant::binary_digits;
  if (name == "decimal_digits" || name == "decimal") return Variant::decimal_digits;
  if (name == "random_labels" || name == "random") return Variant::random_labels;
  if (name == "synthetic") return Variant::synthetic;
  throw InvalidArgument("unknown dataset variant: " + name);
}

Dataset build_dataset(const RawImageSet& raw, Variant variant, std::int64_t n,
                      std::uint64_t seed) {
  if (variant == Variant::synthetic) {
    throw InvalidArgument("build_dataset: synthetic variant has no IDX source");
  }
  if (n < 1) {
    throw InvalidArgument("build_dataset: n must be >= 1");
  }
  const std::size_t image_len =
      static_cast<std::size_t>(raw.rows) * static_cast<std::size_t>(raw.cols);

  std::vector<std::int64_t> pool;
  for (std::int64_t i = 0; i < raw.count; ++i) {
    if (variant == Variant::binary_digits && raw.labels[i] > 1) continue;
    pool.push_back(i);
  }
  if (n > static_cast<std::int64_t>(pool.size())) {
    throw InsufficientData("requested " + std::to_string(n) +
                           " examples, pool holds " +
                           std::to_string(pool.size()));
  }
  shuffle_indices(pool, seed);

  // Walk the shuffled pool, skipping exact pixel duplicates of images
  // already taken (duplicates make the kernel matrix singular).
  Dataset ds;
  ds.variant = variant;
  ds.seed = seed;
  std::vector<std::int64_t> taken;
  std::unordered_set<std::uint64_t> seen_hashes;
  std::vector<std::int64_t> candidates;  // hash collisions resolved by memcmp
  for (std::size_t k = 0;
       k < pool.size() && static_cast<std::int64_t>(taken.size()) < n; ++k) {
    const std::int64_t i = pool[k];
    const std::uint8_t* px = raw.pixels.data() +
                             static_cast<std::size_t>(i) * image_len;
    const std::uint64_t h = pixel_hash(px, image_len);
    bool dup = false;
    if (seen_hashes.contains(h)) {
      for (std::int64_t t : taken) {
        const std::uint8_t* tp =
            raw.pixels.data() + static_cast<std::size_t>(t) * image_len;
        if (std::memcmp(px, tp, image_len) == 0) {
          dup = true;
          break;
        }
      }
    }
    if (dup) {
      ++ds.dedup_redraws;
      continue;
    }
    seen_hashes.insert(h);
    taken.push_back(i);
  }
  if (static_cast<std::int64_t>(taken.size()) < n) {
    throw InsufficientData("pool exhausted after duplicate removal: " +
                           std::to_string(taken.size()) + " of " +
                           std::to_string(n) + " examples");
  }

  Matrix rows(n, static_cast<Eigen::Index>(image_len));
  Vector labels(n);
  const Philox coins(seed, kCoinStream);
  for (std::int64_t r = 0; r < n; ++r) {
    const std::int64_t i = taken[static_cast<std::size_t>(r)];
    const std::uint8_t* px =
        raw.pixels.data() + static_cast<std::size_t>(i) * image_len;
    for (std::size_t j = 0; j < image_len; ++j) {
      rows(r, static_cast<Eigen::Index>(j)) = static_cast<double>(px[j]);
    }
    const int digit = raw.labels[static_cast<std::size_t>(i)];
    ds.source_digits.insert(digit);
    switch (variant) {
      case Variant::binary_digits:
        labels(r) = digit == 0 ? -1.0 : 1.0;
        break;
      case Variant::decimal_digits:
        labels(r) = digit % 2 == 0 ? -1.0 : 1.0;
        break;
      case Variant::random_labels:
        labels(r) =
            coins.uniform(static_cast<std::uint64_t>(r), 0) < 0.5 ? -1.0 : 1.0;
        break;
      case Variant::synthetic:
        break;  // unreachable
    }
  }

  ds.inputs = normalize_inputs(rows);
  ds.labels = LabelVector{labels};
  ds.n = n;
  return ds;
}

Dataset synthetic_dataset(std::int64_t n, std::int64_t d0,
                          double intra_class_cos, std::uint64_t seed) {
  if (n < 1) {
    throw InvalidArgument("synthetic_dataset: n must be >= 1");
  }
  if (d0 < 2) {
    throw InvalidArgument("synthetic_dataset: d0 must be >= 2");
  }
  if (!(intra_class_cos >= 0.0 && intra_class_cos <= 1.0)) {
    throw InvalidArgument(
        "synthetic_dataset: intra_class_cos must lie in [0, 1]");
  }
  const NormalStream normals(seed, kSyntheticStream);
  const double target = std::sqrt(static_cast<double>(d0));
  const double mean_coef = std::sqrt(intra_class_cos);
  const double noise_coef = std::sqrt(1.0 - intra_class_cos);

  // Shared mean direction e = first basis vector; per-example noise is
  // drawn Gaussian, projected orthogonal to e and normalised, so each row
  // has exactly unit norm before the final sqrt(d0) scaling.
  Matrix rows(n, d0);
  Vector labels(n);
  Vector g(d0);
  for (std::int64_t i = 0; i < n; ++i) {
    const double cls = (i % 2 == 0) ? 1.0 : -1.0;
    normals.fill(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(d0),
                 g.data(), static_cast<std::size_t>(d0));
    g(0) = 0.0;  // orthogonal to the mean direction
    const double gn = g.norm();
    if (gn < 1e-12) {
      throw InvalidArgument("synthetic_dataset: degenerate noise draw");
    }
    rows.row(i) = (noise_coef / gn) * g.transpose();
    rows(i, 0) += cls * mean_coef;
    rows.row(i) *= target;
    labels(i) = cls;
  }

  Dataset ds;
  ds.inputs = InputMatrix{rows};
  ds.labels = LabelVector{labels};
  ds.variant = Variant::synthetic;
  ds.n = n;
  ds.seed = seed;
  return ds;
}

}  // namespace netinfo
