#ifndef LRD_ERRORS_HPP
#define LRD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrd {

/// Invalid argument to a library operation (rank out of range, shape
/// mismatch, bad mode index, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// The underlying decomposition did not converge. Carries the dims of the
/// offending matrix.
class SvdConvergenceError : public std::runtime_error {
 public:
  SvdConvergenceError(std::int64_t rows, std::int64_t cols)
      : std::runtime_error("SVD did not converge for a " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " matrix"),
        rows_(rows),
        cols_(cols) {}
  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

 private:
  std::int64_t rows_;
  std::int64_t cols_;
};

/// Malformed tensor file. Carries the byte offset at which parsing failed.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::uint64_t byte_offset)
      : std::runtime_error(what + " (at byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::uint64_t byte_offset() const { return byte_offset_; }

 private:
  std::uint64_t byte_offset_;
};

/// A requested experiment exceeds the configured resource budget.
class ResourceGuardError : public std::runtime_error {
 public:
  explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrd

#endif  // LRD_ERRORS_HPP
