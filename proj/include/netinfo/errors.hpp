#ifndef NETINFO_ERRORS_HPP
#define NETINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netinfo {

// Base class for all library errors. Carries a stable machine-readable
// code alongside the human-readable message, so the CLI can map failures
// to exit diagnostics without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& msg)
      : Error("NOT_POSITIVE_DEFINITE", msg) {}
};

struct ResidualTooLarge : Error {
  explicit ResidualTooLarge(const std::string& msg)
      : Error("RESIDUAL_TOO_LARGE", msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("DOMAIN_ERROR", msg) {}
};

struct ZeroInputRow : Error {
  explicit ZeroInputRow(const std::string& msg)
      : Error("ZERO_INPUT_ROW", msg) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg)
      : Error("INVALID_ARGUMENT", msg) {}
};

struct BadMagic : Error {
  explicit BadMagic(const std::string& msg) : Error("BAD_MAGIC", msg) {}
};

struct TruncatedFile : Error {
  explicit TruncatedFile(const std::string& msg)
      : Error("TRUNCATED_FILE", msg) {}
};

struct LabelOutOfRange : Error {
  explicit LabelOutOfRange(const std::string& msg)
      : Error("LABEL_OUT_OF_RANGE", msg) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& msg)
      : Error("INSUFFICIENT_DATA", msg) {}
};

struct DatasetNotFound : Error {
  explicit DatasetNotFound(const std::string& msg)
      : Error("DATASET_NOT_FOUND", msg) {}
};

}  // namespace netinfo

#endif  // NETINFO_ERRORS_HPP
