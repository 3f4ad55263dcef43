#ifndef LRD_TENSOR_IO_HPP
#define LRD_TENSOR_IO_HPP

#include <optional>
#include <string>

#include "lrd/tensor3.hpp"

namespace lrd::tensor {

/// "DT3 v1" container: a 16-byte magic+version header ("DT3 TENSOR v1" padded
/// with NULs), three 64-bit little-endian unsigned dims, then p1·p2·p3
/// 64-bit little-endian IEEE-754 doubles in the Tensor3 memory layout
/// (i3 fastest). Matrices are stored as the order-2 degenerate case (p3 = 1).
///
/// Readers throw FormatError carrying the byte offset of the first problem.
void write_dt3(const std::string& path, const Tensor3& x);
Tensor3 read_dt3(const std::string& path);

void write_dt3_matrix(const std::string& path, const Matrix& m);

/// Optional sidecar metadata, stored as JSON next to the tensor file
/// (path + ".json") with keys {dims, seed, description}.
struct SidecarMetadata {
  Dims3 dims{};
  std::optional<std::uint64_t> seed;
  std::string description;
};

void write_sidecar(const std::string& tensor_path, const SidecarMetadata& meta);
std::optional<SidecarMetadata> read_sidecar(const std::string& tensor_path);

}  // namespace lrd::tensor

#endif  // LRD_TENSOR_IO_HPP
