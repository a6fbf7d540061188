#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace hatecode {

// All randomness in the project flows through this engine. mt19937_64 output
// is pinned by the standard, and the Fisher-Yates below avoids
// std::shuffle's implementation-defined draws, so seeded runs reproduce
// byte-for-byte across platforms.
using Rng = std::mt19937_64;

inline std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  return rng() % n;  // n > 0
}

template <typename T>
void deterministic_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[draw_below(rng, i)]);
  }
}

}  // namespace hatecode
