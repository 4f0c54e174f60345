// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace bayesbench {

//! Deterministic splittable random stream in the SplitMix64 family.
//!
//! A stream is fully identified by (seed, stream): the same pair replays the
//! same 64-bit sequence on every run. derive() hashes a child key into the
//! stream id, so children depend only on the parent's identity, never on how
//! many values the parent has already produced. Streams are value types; a
//! single stream must not be shared across threads without serialization.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  //! Independent child stream keyed by `key`.
  [[nodiscard]] RngStream derive(std::uint64_t key) const;

  std::uint64_t next_u64();

  //! Uniform on the open interval (0, 1).
  double next_uniform();

  //! Uniform on {0, ..., n - 1}, rejection-sampled so there is no modulo bias.
  std::uint64_t next_below(std::uint64_t n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
  std::uint64_t gamma_;
};

}  // namespace bayesbench
