// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// 256-bit unsigned integers, 4 x 64-bit little-endian limbs.

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace zkace {

using uint128 = unsigned __int128;

struct U256 {
  uint64_t limb[4];

  constexpr U256() : limb{0, 0, 0, 0} {}
  constexpr explicit U256(uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  constexpr bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }

  constexpr bool operator==(const U256& o) const {
    return limb[0] == o.limb[0] && limb[1] == o.limb[1] &&
           limb[2] == o.limb[2] && limb[3] == o.limb[3];
  }
  constexpr bool operator!=(const U256& o) const { return !(*this == o); }

  constexpr int cmp(const U256& o) const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] < o.limb[i]) return -1;
      if (limb[i] > o.limb[i]) return 1;
    }
    return 0;
  }
  constexpr bool operator<(const U256& o) const { return cmp(o) < 0; }
  constexpr bool operator>=(const U256& o) const { return cmp(o) >= 0; }

  constexpr bool bit(unsigned i) const {
    return (limb[i >> 6] >> (i & 63)) & 1;
  }

  // Index of the highest set bit, or -1 if zero.
  constexpr int top_bit() const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != 0) {
        uint64_t v = limb[i];
        int b = 0;
        while (v >>= 1) ++b;
        return 64 * i + b;
      }
    }
    return -1;
  }

  // this += o, returns carry-out.
  constexpr uint64_t add_with_carry(const U256& o) {
    uint128 acc = 0;
    for (int i = 0; i < 4; ++i) {
      acc += (uint128)limb[i] + o.limb[i];
      limb[i] = (uint64_t)acc;
      acc >>= 64;
    }
    return (uint64_t)acc;
  }

  // this -= o, returns borrow-out (1 if underflow).
  constexpr uint64_t sub_with_borrow(const U256& o) {
    uint128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
      uint128 d = (uint128)limb[i] - o.limb[i] - borrow;
      limb[i] = (uint64_t)d;
      borrow = (d >> 64) & 1;
    }
    return (uint64_t)borrow;
  }

  constexpr void shl1() {
    limb[3] = (limb[3] << 1) | (limb[2] >> 63);
    limb[2] = (limb[2] << 1) | (limb[1] >> 63);
    limb[1] = (limb[1] << 1) | (limb[0] >> 63);
    limb[0] <<= 1;
  }

  constexpr void shr1() {
    limb[0] = (limb[0] >> 1) | (limb[1] << 63);
    limb[1] = (limb[1] >> 1) | (limb[2] << 63);
    limb[2] = (limb[2] >> 1) | (limb[3] << 63);
    limb[3] >>= 1;
  }

  std::array<uint8_t, 32> to_bytes_le() const {
    std::array<uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 8; ++j) {
        out[8 * i + j] = (uint8_t)(limb[i] >> (8 * j));
      }
    }
    return out;
  }

  static U256 from_bytes_le(const uint8_t* b) {
    U256 r;
    for (int i = 0; i < 4; ++i) {
      uint64_t v = 0;
      for (int j = 7; j >= 0; --j) v = (v << 8) | b[8 * i + j];
      r.limb[i] = v;
    }
    return r;
  }

  static U256 from_bytes_be(const uint8_t* b) {
    uint8_t le[32];
    for (int i = 0; i < 32; ++i) le[i] = b[31 - i];
    return from_bytes_le(le);
  }

  std::array<uint8_t, 32> to_bytes_be() const {
    auto le = to_bytes_le();
    std::array<uint8_t, 32> out{};
    for (int i = 0; i < 32; ++i) out[i] = le[31 - i];
    return out;
  }

  // 64-char lowercase hex, big-endian display.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    auto be = to_bytes_be();
    std::string s(64, '0');
    for (int i = 0; i < 32; ++i) {
      s[2 * i] = digits[be[i] >> 4];
      s[2 * i + 1] = digits[be[i] & 0xf];
    }
    return s;
  }

  static U256 from_hex(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("hex too long for u256");
    uint8_t be[32] = {0};
    size_t off = 64 - s.size();
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else throw std::invalid_argument("invalid hex digit");
      size_t pos = off + i;
      be[pos / 2] |= (uint8_t)(v << ((pos % 2) ? 0 : 4));
    }
    return from_bytes_be(be);
  }
};

// 512-bit product of two 256-bit values, little-endian limbs.
constexpr std::array<uint64_t, 8> mul_wide(const U256& a, const U256& b) {
  std::array<uint64_t, 8> t{};
  for (int i = 0; i < 4; ++i) {
    uint64_t carry = 0;
    for (int j = 0; j < 4; ++j) {
      uint128 acc = (uint128)a.limb[i] * b.limb[j] + t[i + j] + carry;
      t[i + j] = (uint64_t)acc;
      carry = (uint64_t)(acc >> 64);
    }
    t[i + 4] = carry;
  }
  return t;
}

}  // namespace zkace
