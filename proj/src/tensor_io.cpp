#include "lrd/tensor_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <cmath>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "lrd/errors.hpp"

namespace lrd::tensor {

namespace {

constexpr std::array<unsigned char, 16> kMagic = {'D', 'T', '3', ' ', 'T', 'E', 'N', 'S',
                                                  'O', 'R', ' ', 'v', '1', 0,   0,   0};

void put_u64le(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

std::uint64_t get_u64le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_dt3(const std::string& path, const Tensor3& x) {
  std::vector<unsigned char> buf;
  buf.reserve(16 + 24 + 8 * static_cast<std::size_t>(x.size()));
  buf.insert(buf.end(), kMagic.begin(), kMagic.end());
  for (int k = 0; k < 3; ++k) put_u64le(buf, static_cast<std::uint64_t>(x.dim(k)));
  for (double e : x.entries()) put_u64le(buf, std::bit_cast<std::uint64_t>(e));
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_dt3: cannot open " + path);
  f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!f) throw std::runtime_error("write_dt3: short write to " + path);
}

void write_dt3_matrix(const std::string& path, const Matrix& m) {
  std::vector<double> entries(m.data(), m.data() + m.size());  // row-major = (i1,i2,1) layout
  write_dt3(path, Tensor3({m.rows(), m.cols(), 1}, std::move(entries)));
}

Tensor3 read_dt3(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_dt3: cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  const std::uint64_t n = buf.size();

  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    if (i >= n) throw FormatError("read_dt3: truncated magic", n);
    if (buf[i] != kMagic[i]) throw FormatError("read_dt3: bad magic byte", i);
  }
  if (n < 16 + 24) throw FormatError("read_dt3: truncated dims", n);
  Dims3 dims{};
  for (int k = 0; k < 3; ++k) {
    const std::uint64_t d = get_u64le(buf.data() + 16 + 8 * k);
    if (d == 0 || d > (std::uint64_t(1) << 31)) {
      throw FormatError("read_dt3: dim out of range", 16 + 8 * static_cast<std::uint64_t>(k));
    }
    dims[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(d);
  }
  if (dims[0] > (std::int64_t(1) << 31) / dims[1] ||
      dims[0] * dims[1] > (std::int64_t(1) << 31) / dims[2]) {
    throw FormatError("read_dt3: entry count exceeds 2^31", 16);
  }
  const std::uint64_t count = static_cast<std::uint64_t>(dims[0] * dims[1] * dims[2]);
  const std::uint64_t expected = 16 + 24 + 8 * count;
  if (n < expected) throw FormatError("read_dt3: truncated payload", n);
  if (n > expected) throw FormatError("read_dt3: trailing bytes", expected);

  std::vector<double> entries(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    entries[i] = std::bit_cast<double>(get_u64le(buf.data() + 40 + 8 * i));
    if (!std::isfinite(entries[i])) {
      throw FormatError("read_dt3: non-finite entry", 40 + 8 * i);
    }
  }
  return Tensor3(dims, std::move(entries));
}

void write_sidecar(const std::string& tensor_path, const SidecarMetadata& meta) {
  nlohmann::json j;
  j["dims"] = {meta.dims[0], meta.dims[1], meta.dims[2]};
  if (meta.seed) j["seed"] = *meta.seed;
  j["description"] = meta.description;
  std::ofstream f(tensor_path + ".json", std::ios::trunc);
  if (!f) throw std::runtime_error("write_sidecar: cannot open " + tensor_path + ".json");
  f << j.dump(2) << "\n";
}

std::optional<SidecarMetadata> read_sidecar(const std::string& tensor_path) {
  std::ifstream f(tensor_path + ".json");
  if (!f) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(f);
  SidecarMetadata meta;
  const auto& d = j.at("dims");
  meta.dims = {d.at(0).get<std::int64_t>(), d.at(1).get<std::int64_t>(),
               d.at(2).get<std::int64_t>()};
  if (j.contains("seed")) meta.seed = j["seed"].get<std::uint64_t>();
  meta.description = j.value("description", "");
  return meta;
}

}  // namespace lrd::tensor
