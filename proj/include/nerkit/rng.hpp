#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace nerkit {

// All randomized behavior in this library runs on SplitMix64
// (Steele, Lea & Flood, "Fast splittable pseudorandom number generators",
// OOPSLA 2014), a 64-bit counter-based generator: output i is
// mix64(seed + (i+1) * 0x9E3779B97F4A7C15). The same seed yields the same
// stream on every platform, which is what makes splits, shuffles and the
// synthetic corpus reproducible bit-for-bit.

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in [0, bound); bound > 0. Plain modulo: the bias is
  // negligible for corpus-sized bounds and the result is fully specified.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// FNV-1a over arbitrary bytes; used to derive per-assignment seeds and
// to checksum emitted files.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 14695981039346656037ULL) {
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Seed for a named substream: FNV-1a over the little-endian seed bytes,
// then each label separated by 0x1F. Distinct (seed, labels) pairs give
// independent SplitMix64 streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view a,
                                 std::string_view b = {}) {
  char le[8];
  for (int i = 0; i < 8; ++i) le[i] = static_cast<char>((seed >> (8 * i)) & 0xFF);
  std::uint64_t h = fnv1a64(std::string_view(le, 8));
  h = fnv1a64("\x1F", h);
  h = fnv1a64(a, h);
  h = fnv1a64("\x1F", h);
  h = fnv1a64(b, h);
  return h;
}

// Fisher-Yates from the back: j = next() mod (i+1), swap(v[i], v[j]).
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace nerkit
