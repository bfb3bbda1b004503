#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace platoon {

// Splitmix64 step. Deterministic across platforms, unlike std::hash.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over bytes, folded through mix64 with a seed. Used to derive
// per-node random draws that are stable for a given (key, seed) pair.
inline std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ mix64(seed);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

// Uniform draw in [0,1) with 53 bits of precision.
inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// n distinct worker seeds derived from one master seed. mix64 is a
// bijection and the inputs are distinct, so the outputs are too.
inline std::vector<std::uint64_t> derive_seeds(std::uint64_t master, int n) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(mix64(master + (static_cast<std::uint64_t>(i) + 1) *
                                     0x632be59bd9b4e019ULL));
  }
  return out;
}

}  // namespace platoon
