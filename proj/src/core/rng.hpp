// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Random sources: OS entropy or a seeded ChaCha20 stream for
// deterministic test profiles.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "core/bytes.hpp"
#include "core/fields.hpp"

namespace zkace {

class Rng {
 public:
  // OS-entropy generator.
  Rng();
  // Deterministic generator from a 32-byte seed.
  explicit Rng(const std::array<uint8_t, 32>& seed);

  void fill(uint8_t* out, size_t len);
  Bytes bytes(size_t len);
  uint64_t next_u64();

  // Uniform field element via 512-bit reduction.
  Fr next_fr();
  Fq next_fq();

  bool deterministic() const { return seeded_; }

 private:
  bool seeded_ = false;
  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
};

}  // namespace zkace
