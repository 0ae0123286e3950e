#ifndef NETINFO_IDX_HPP
#define NETINFO_IDX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netinfo/errors.hpp"

// MNIST IDX container parsing. All integers are big-endian 32-bit; image
// files carry magic 0x00000803, label files 0x00000801.

namespace netinfo {

struct RawImageSet {
  std::int64_t count = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::uint8_t> pixels;  // count * rows * cols, row-major
  std::vector<std::uint8_t> labels;  // count entries in 0..9
};

// Parses an IDX image payload into `out` (count/rows/cols/pixels).
void parse_idx_images(std::span<const std::uint8_t> bytes, RawImageSet& out);

// Parses an IDX label payload; entries are range-checked to 0..9.
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

// Loads and pairs image + label files; throws DatasetNotFound for missing
// paths and InvalidArgument on a count mismatch.
RawImageSet load_idx_pair(const std::string& image_path,
                          const std::string& label_path);

}  // namespace netinfo

#endif  // NETINFO_IDX_HPP
