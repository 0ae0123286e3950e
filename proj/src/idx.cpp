#include "netinfo/idx.hpp"

#include <cstdio>
#include <fstream>

namespace netinfo {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803u;
constexpr std::uint32_t kLabelMagic = 0x00000801u;

std::uint32_t read_be32(std::span<const std::uint8_t> bytes,
                        std::size_t offset) {
  if (offset + 4 > bytes.size()) {
    throw TruncatedFile("IDX header truncated");
  }
  return (static_cast<std::uint32_t>(bytes[offset]) << 24) |
         (static_cast<std::uint32_t>(bytes[offset + 1]) << 16) |
         (static_cast<std::uint32_t>(bytes[offset + 2]) << 8) |
         static_cast<std::uint32_t>(bytes[offset + 3]);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DatasetNotFound("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

void parse_idx_images(std::span<const std::uint8_t> bytes, RawImageSet& out) {
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kImageMagic) {
    throw BadMagic("expected image magic 0x00000803, got 0x" +
                   [](std::uint32_t m) {
                     char buf[9];
                     std::snprintf(buf, sizeof buf, "%08x", m);
                     return std::string(buf);
                   }(magic));
  }
  out.count = read_be32(bytes, 4);
  out.rows = read_be32(bytes, 8);
  out.cols = read_be32(bytes, 12);
  const std::size_t expected =
      static_cast<std::size_t>(out.count) * static_cast<std::size_t>(out.rows) *
      static_cast<std::size_t>(out.cols);
  if (bytes.size() < 16 + expected) {
    throw TruncatedFile("image payload holds " + std::to_string(bytes.size() - 16) +
                        " bytes, header declares " + std::to_string(expected));
  }
  out.pixels.assign(bytes.begin() + 16, bytes.begin() + 16 + expected);
}

std::vector<std::uint8_t> parse_idx_labels(
    std::span<const std::uint8_t> bytes) {
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kLabelMagic) {
    throw BadMagic("expected label magic 0x00000801");
  }
  const std::size_t count = read_be32(bytes, 4);
  if (bytes.size() < 8 + count) {
    throw TruncatedFile("label payload holds " + std::to_string(bytes.size() - 8) +
                        " bytes, header declares " + std::to_string(count));
  }
  std::vector<std::uint8_t> labels(bytes.begin() + 8,
                                   bytes.begin() + 8 + count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 9) {
      throw LabelOutOfRange("label " + std::to_string(labels[i]) +
                            " at index " + std::to_string(i));
    }
  }
  return labels;
}

RawImageSet load_idx_pair(const std::string& image_path,
                          const std::string& label_path) {
  const auto image_bytes = read_file(image_path);
  const auto label_bytes = read_file(label_path);
  RawImageSet raw;
  parse_idx_images(image_bytes, raw);
  raw.labels = parse_idx_labels(label_bytes);
  if (static_cast<std::int64_t>(raw.labels.size()) != raw.count) {
    throw InvalidArgument("image/label count mismatch: " +
                          std::to_string(raw.count) + " images vs " +
                          std::to_string(raw.labels.size()) + " labels");
  }
  return raw;
}

}  // namespace netinfo
