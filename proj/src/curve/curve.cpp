// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "curve/curve.hpp"

#include <cstring>
#include <stdexcept>

namespace zkace {

namespace {

Fq fq_hex(const char* s) {
  Fq f;
  if (!Fq::from_hex(s, f)) throw std::logic_error("bad curve constant");
  return f;
}

}  // namespace

G1 g1_generator() {
  static const G1 g = {Fq::from_u64(1), Fq::from_u64(2), Fq::one()};
  return g;
}

G2 g2_generator() {
  static const G2 g = {
      {fq_hex("1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6"
              "ed"),
       fq_hex("198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312"
              "c2")},
      {fq_hex("12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7d"
              "aa"),
       fq_hex("090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd12297"
              "5b")},
      Fq2::one()};
  return g;
}

G1 g1_from_affine(const Fq& x, const Fq& y) { return {x, y, Fq::one()}; }
G2 g2_from_affine(const Fq2& x, const Fq2& y) { return {x, y, Fq2::one()}; }

Fq2 g2_coeff_b() {
  static const Fq2 b =
      Fq2{Fq::from_u64(3), Fq::zero()} * Fq2{Fq::from_u64(9), Fq::one()}.inverse();
  return b;
}

bool g1_on_curve(const G1& p) {
  if (p.is_infinity()) return true;
  Fq x, y;
  p.to_affine(x, y);
  return y.square() == x.square() * x + Fq::from_u64(3);
}

bool g2_on_curve(const G2& p) {
  if (p.is_infinity()) return true;
  Fq2 x, y;
  p.to_affine(x, y);
  return y.square() == x.square() * x + g2_coeff_b();
}

bool g1_valid(const G1& p) {
  // G1 has cofactor 1; the curve check is the subgroup check.
  return g1_on_curve(p);
}

bool g2_valid(const G2& p) {
  if (!g2_on_curve(p)) return false;
  return p.scalar_mul(Fr::modulus()).is_infinity();
}

G1 g1_mul(const G1& p, const Fr& k) { return p.scalar_mul(k.to_u256()); }
G2 g2_mul(const G2& p, const Fr& k) { return p.scalar_mul(k.to_u256()); }

std::array<uint8_t, 32> g1_compress(const G1& p) {
  std::array<uint8_t, 32> out{};
  if (p.is_infinity()) {
    out[31] = 0x40;
    return out;
  }
  Fq x, y;
  p.to_affine(x, y);
  out = x.to_bytes_le();
  if (y.to_u256().limb[0] & 1) out[31] |= 0x80;
  return out;
}

std::optional<G1> g1_decompress(const uint8_t* bytes) {
  uint8_t flags = bytes[31] & 0xc0;
  uint8_t buf[32];
  std::memcpy(buf, bytes, 32);
  buf[31] &= 0x3f;
  if (flags & 0x40) {
    for (int i = 0; i < 32; ++i) {
      if (buf[i] != 0) return std::nullopt;
    }
    if (flags != 0x40) return std::nullopt;
    return G1::infinity();
  }
  Fq x;
  if (!Fq::from_bytes_le(buf, x)) return std::nullopt;
  Fq y;
  if (!fq_sqrt(x.square() * x + Fq::from_u64(3), y)) return std::nullopt;
  bool want_odd = (flags & 0x80) != 0;
  if (((y.to_u256().limb[0] & 1) != 0) != want_odd) y = -y;
  G1 p = g1_from_affine(x, y);
  if (!g1_valid(p)) return std::nullopt;
  return p;
}

std::array<uint8_t, 128> g2_serialize(const G2& p) {
  std::array<uint8_t, 128> out{};
  if (p.is_infinity()) return out;
  Fq2 x, y;
  p.to_affine(x, y);
  auto put = [&out](int slot, const Fq& f) {
    auto b = f.to_bytes_le();
    std::memcpy(out.data() + 32 * slot, b.data(), 32);
  };
  put(0, x.c0);
  put(1, x.c1);
  put(2, y.c0);
  put(3, y.c1);
  return out;
}

std::optional<G2> g2_deserialize(const uint8_t* bytes) {
  bool all_zero = true;
  for (int i = 0; i < 128; ++i) {
    if (bytes[i] != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return G2::infinity();
  Fq parts[4];
  for (int i = 0; i < 4; ++i) {
    if (!Fq::from_bytes_le(bytes + 32 * i, parts[i])) return std::nullopt;
  }
  G2 p = g2_from_affine({parts[0], parts[1]}, {parts[2], parts[3]});
  if (!g2_valid(p)) return std::nullopt;
  return p;
}

}  // namespace zkace
