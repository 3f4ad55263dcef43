#ifndef LRD_RNG_HPP
#define LRD_RNG_HPP

#include <cstdint>
#include <string_view>

namespace lrd::rng {

/// Golden-ratio increment used by the SplitMix64 stream.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 output mix (Steele/Lea/Flood 2014). Bijective on 64-bit words;
/// the full generator below is this mix applied to an incrementing counter.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// FNV-1a over the bytes of a stream tag.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Folds one 64-bit value into a stream key.
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t value) {
  return splitmix64((key ^ splitmix64(value + kGolden)) + kGolden);
}

constexpr std::uint64_t derive(std::uint64_t key, std::string_view tag) {
  return derive(key, fnv1a64(tag));
}

/// Key of the stream (seed, tag, i0, i1, ...). Streams with distinct tags or
/// indices never share counters, which is what keeps signal and noise draws
/// (and replicates) independent.
template <typename... Ix>
constexpr std::uint64_t stream_key(std::uint64_t seed, std::string_view tag, Ix... ix) {
  std::uint64_t k = derive(splitmix64(seed + kGolden), tag);
  ((k = derive(k, static_cast<std::uint64_t>(ix))), ...);
  return k;
}

/// Φ⁻¹, the standard normal quantile, via the AS 241 (PPND16) rational
/// approximation of Wichura (1988). Accurate to full double precision.
double normal_icdf(double p);

/// Counter-based generator: word i of stream `key` is
/// splitmix64(key + (i+1)·kGolden). Stateless apart from the position, so
/// identical (key, position) pairs give identical output on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return splitmix64(key_ + (++counter_) * kGolden); }

  /// Uniform on the open interval (0,1): ((x >> 11) + 0.5) · 2⁻⁵³.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via inverse-CDF sampling; exactly one word per draw.
  double next_gaussian() { return normal_icdf(next_uniform()); }

  /// Rademacher sign (±1), one word per draw.
  double next_sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  std::uint64_t key() const { return key_; }
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lrd::rng

#endif  // LRD_RNG_HPP
