// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Montgomery-form prime field template over 4x64-bit limbs.

#pragma once

#include "core/u256.hpp"

namespace zkace {

struct FpConstants {
  U256 modulus;
  U256 r;        // 2^256 mod p (Montgomery one)
  U256 r2;       // 2^512 mod p
  uint64_t inv;  // -p^-1 mod 2^64
  U256 modulus_minus_two;
};

constexpr FpConstants make_fp_constants(U256 mod) {
  FpConstants c{};
  c.modulus = mod;
  // inv = -mod^-1 mod 2^64 via Newton iteration.
  uint64_t x = 1;
  for (int i = 0; i < 6; ++i) x *= 2 - mod.limb[0] * x;
  c.inv = ~x + 1;
  // r = 2^256 mod p by 256 modular doublings of 1.
  U256 v(1);
  for (int i = 0; i < 256; ++i) {
    uint64_t carry = v.add_with_carry(v);
    if (carry || v >= mod) v.sub_with_borrow(mod);
  }
  c.r = v;
  for (int i = 0; i < 256; ++i) {
    uint64_t carry = v.add_with_carry(v);
    if (carry || v >= mod) v.sub_with_borrow(mod);
  }
  c.r2 = v;
  c.modulus_minus_two = mod;
  c.modulus_minus_two.sub_with_borrow(U256(2));
  return c;
}

template <const FpConstants& C>
class Fp {
 public:
  constexpr Fp() : m_{} {}

  static Fp zero() { return Fp(); }
  static Fp one() { return from_montgomery_raw(C.r); }

  static Fp from_u64(uint64_t v) { return from_u256(U256(v)); }

  // Reduces mod p, so accepts any 256-bit integer.
  static Fp from_u256_reduce(U256 v) {
    while (v >= C.modulus) v.sub_with_borrow(C.modulus);
    return from_u256(v);
  }

  // Requires v < p.
  static Fp from_u256(const U256& v) {
    Fp r;
    r.m_ = mont_mul(v, C.r2);
    return r;
  }

  U256 to_u256() const { return mont_mul(m_, U256(1)); }

  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const Fp& o) const { return m_ == o.m_; }
  bool operator!=(const Fp& o) const { return !(m_ == o.m_); }

  Fp operator+(const Fp& o) const {
    Fp r = *this;
    uint64_t carry = r.m_.add_with_carry(o.m_);
    if (carry || r.m_ >= C.modulus) r.m_.sub_with_borrow(C.modulus);
    return r;
  }

  Fp operator-(const Fp& o) const {
    Fp r = *this;
    if (r.m_.sub_with_borrow(o.m_)) r.m_.add_with_carry(C.modulus);
    return r;
  }

  Fp operator-() const { return Fp() - *this; }

  Fp operator*(const Fp& o) const {
    Fp r;
    r.m_ = mont_mul(m_, o.m_);
    return r;
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp square() const { return *this * *this; }

  Fp dbl() const { return *this + *this; }

  Fp pow(const U256& e) const {
    Fp acc = one();
    int top = e.top_bit();
    for (int i = top; i >= 0; --i) {
      acc = acc.square();
      if (e.bit((unsigned)i)) acc = acc * *this;
    }
    return acc;
  }

  Fp inverse() const { return pow(C.modulus_minus_two); }

  // Canonical little-endian 32-byte encoding.
  std::array<uint8_t, 32> to_bytes_le() const { return to_u256().to_bytes_le(); }

  // Rejects encodings >= p.
  static bool from_bytes_le(const uint8_t* b, Fp& out) {
    U256 v = U256::from_bytes_le(b);
    if (v >= C.modulus) return false;
    out = from_u256(v);
    return true;
  }

  std::string to_hex() const { return to_u256().to_hex(); }
  static bool from_hex(const std::string& s, Fp& out) {
    U256 v;
    try {
      v = U256::from_hex(s);
    } catch (const std::exception&) {
      return false;
    }
    if (v >= C.modulus) return false;
    out = from_u256(v);
    return true;
  }

  static const U256& modulus() { return C.modulus; }

  // Raw Montgomery representation; for hashing/serialization of internals only.
  const U256& mont_repr() const { return m_; }
  static Fp from_montgomery_raw(const U256& m) {
    Fp r;
    r.m_ = m;
    return r;
  }

 private:
  static U256 mont_mul(const U256& a, const U256& b) {
    // CIOS Montgomery multiplication; valid for moduli below 2^255.
    uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      uint128 acc = 0;
      for (int j = 0; j < 4; ++j) {
        acc += (uint128)a.limb[i] * b.limb[j] + t[j];
        t[j] = (uint64_t)acc;
        acc >>= 64;
      }
      acc += t[4];
      t[4] = (uint64_t)acc;
      t[5] = (uint64_t)(acc >> 64);

      uint64_t m = t[0] * C.inv;
      acc = (uint128)m * C.modulus.limb[0] + t[0];
      acc >>= 64;
      for (int j = 1; j < 4; ++j) {
        acc += (uint128)m * C.modulus.limb[j] + t[j];
        t[j - 1] = (uint64_t)acc;
        acc >>= 64;
      }
      acc += t[4];
      t[3] = (uint64_t)acc;
      t[4] = t[5] + (uint64_t)(acc >> 64);
      t[5] = 0;
    }
    U256 r(t[0], t[1], t[2], t[3]);
    if (t[4] || r >= C.modulus) r.sub_with_borrow(C.modulus);
    return r;
  }

  U256 m_;
};

}  // namespace zkace
