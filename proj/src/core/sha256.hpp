// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <sodium.h>

#include <array>

#include "core/bytes.hpp"

namespace zkace {

class Sha256 {
 public:
  Sha256() { crypto_hash_sha256_init(&state_); }

  Sha256& update(const uint8_t* data, size_t len) {
    crypto_hash_sha256_update(&state_, data, len);
    return *this;
  }
  Sha256& update(const Bytes& b) { return update(b.data(), b.size()); }
  Sha256& update(const std::string& s) {
    return update((const uint8_t*)s.data(), s.size());
  }
  Sha256& update_u32_be(uint32_t v) {
    uint8_t b[4] = {(uint8_t)(v >> 24), (uint8_t)(v >> 16), (uint8_t)(v >> 8),
                    (uint8_t)v};
    return update(b, 4);
  }

  std::array<uint8_t, 32> finish() {
    std::array<uint8_t, 32> out{};
    crypto_hash_sha256_final(&state_, out.data());
    return out;
  }

 private:
  crypto_hash_sha256_state state_;
};

inline std::array<uint8_t, 32> sha256(const Bytes& data) {
  return Sha256().update(data).finish();
}

}  // namespace zkace
