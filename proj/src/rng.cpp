// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/rng.hpp"

#include <stdexcept>

namespace bayesbench {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
  return mix(h ^ (v + kGolden + (h << 6) + (h >> 2)));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      state_(combine(mix(seed ^ kGolden), stream)),
      gamma_(combine(mix(stream), seed) | 1ULL) {}

RngStream RngStream::derive(std::uint64_t key) const {
  return RngStream(seed_, combine(stream_, key));
}

std::uint64_t RngStream::next_u64() {
  state_ += gamma_;
  return mix(state_);
}

double RngStream::next_uniform() {
  // 53-bit mantissa offset by half an ulp, so 0 and 1 are never produced.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::domain_error("next_below: n must be positive");
  // Reject draws below 2^64 mod n so every residue is equally likely.
  const std::uint64_t threshold = (0ULL - n) % n;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

}  // namespace bayesbench
