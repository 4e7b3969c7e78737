#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lieorb/linalg.hpp"

namespace lieorb {

using Rng = std::mt19937_64;

// FNV-1a; stable across platforms so per-check streams are reproducible.
constexpr std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

inline Rng make_rng(std::uint64_t seed, std::string_view stream) { return Rng(seed ^ stable_hash(stream)); }

// Entries uniform in [-1, 1]. Implemented by hand because std distributions
// are not specified bit-for-bit across standard libraries.
inline double uniform_pm1(Rng& rng) { return (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 2.0 - 1.0; }

inline Vec random_vec(Rng& rng, Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform_pm1(rng);
  return v;
}

}  // namespace lieorb
