// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/rng.hpp"

#include <sodium.h>

#include <cstring>

namespace zkace {

namespace {

void ensure_sodium() {
  if (sodium_init() < 0) throw std::runtime_error("libsodium init failed");
}

template <const FpConstants& C>
Fp<C> wide_reduce(const uint8_t bytes64[64]) {
  U256 lo = U256::from_bytes_le(bytes64);
  U256 hi = U256::from_bytes_le(bytes64 + 32);
  // lo + hi * 2^256 mod p; C.r holds 2^256 mod p.
  Fp<C> lo_f = Fp<C>::from_u256_reduce(lo);
  Fp<C> hi_f = Fp<C>::from_u256_reduce(hi);
  Fp<C> shift = Fp<C>::from_u256(C.r);
  return lo_f + hi_f * shift;
}

}  // namespace

Rng::Rng() {
  ensure_sodium();
  seeded_ = false;
}

Rng::Rng(const std::array<uint8_t, 32>& seed) {
  ensure_sodium();
  seeded_ = true;
  key_ = seed;
  counter_ = 0;
}

void Rng::fill(uint8_t* out, size_t len) {
  if (!seeded_) {
    randombytes_buf(out, len);
    return;
  }
  uint8_t nonce[8];
  while (len > 0) {
    size_t chunk = len < 64 ? len : 64;
    uint8_t block[64];
    std::memset(block, 0, sizeof(block));
    for (int i = 0; i < 8; ++i) nonce[i] = (uint8_t)(counter_ >> (8 * i));
    ++counter_;
    crypto_stream_chacha20_xor(block, block, sizeof(block), nonce, key_.data());
    std::memcpy(out, block, chunk);
    out += chunk;
    len -= chunk;
  }
}

Bytes Rng::bytes(size_t len) {
  Bytes b(len);
  fill(b.data(), len);
  return b;
}

uint64_t Rng::next_u64() {
  uint8_t b[8];
  fill(b, 8);
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

Fr Rng::next_fr() {
  uint8_t b[64];
  fill(b, 64);
  return wide_reduce<kFrConstants>(b);
}

Fq Rng::next_fq() {
  uint8_t b[64];
  fill(b, 64);
  return wide_reduce<kFqConstants>(b);
}

}  // namespace zkace
