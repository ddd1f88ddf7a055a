// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// BN254 groups. G1: y^2 = x^3 + 3 over Fq. G2: y^2 = x^3 + 3/xi over Fq2
// (the sextic twist). Points are kept in Jacobian coordinates.

#pragma once

#include <optional>

#include "core/bytes.hpp"
#include "curve/tower.hpp"

namespace zkace {

template <typename F>
struct Point {
  F x, y, z;  // z == 0 encodes the point at infinity

  static Point infinity() { return {F::zero(), F::one(), F::zero()}; }
  bool is_infinity() const { return z.is_zero(); }

  bool operator==(const Point& o) const {
    if (is_infinity() || o.is_infinity()) {
      return is_infinity() && o.is_infinity();
    }
    // Cross-multiplied Jacobian equality.
    F z1s = z.square(), z2s = o.z.square();
    if (x * z2s != o.x * z1s) return false;
    return y * z2s * o.z == o.y * z1s * z;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }

  Point dbl() const {
    if (is_infinity()) return *this;
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F d = ((x + b).square() - a - c).dbl();
    F e = a + a + a;
    F x3 = e.square() - d - d;
    F c8 = c.dbl().dbl().dbl();
    return {x3, e * (d - x3) - c8, (y * z).dbl()};
  }

  Point operator+(const Point& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    F z1s = z.square(), z2s = o.z.square();
    F u1 = x * z2s, u2 = o.x * z1s;
    F s1 = y * z2s * o.z, s2 = o.y * z1s * z;
    if (u1 == u2) {
      if (s1 != s2) return infinity();
      return dbl();
    }
    F h = u2 - u1;
    F i = h.dbl().square();
    F j = h * i;
    F rr = (s2 - s1).dbl();
    F v = u1 * i;
    F x3 = rr.square() - j - v.dbl();
    F y3 = rr * (v - x3) - (s1 * j).dbl();
    return {x3, y3, ((z + o.z).square() - z1s - z2s) * h};
  }

  Point operator-() const { return {x, -y, z}; }
  Point operator-(const Point& o) const { return *this + (-o); }

  Point scalar_mul(const U256& k) const {
    Point acc = infinity();
    int top = k.top_bit();
    if (top < 0) return acc;
    for (int i = top; i >= 0; --i) {
      acc = acc.dbl();
      if (k.bit((unsigned)i)) acc = acc + *this;
    }
    return acc;
  }

  // Affine normalization; infinity maps to (0, 0).
  void to_affine(F& ax, F& ay) const {
    if (is_infinity()) {
      ax = F::zero();
      ay = F::zero();
      return;
    }
    F zi = z.inverse();
    F zi2 = zi.square();
    ax = x * zi2;
    ay = y * zi2 * zi;
  }

  Point normalized() const {
    if (is_infinity()) return infinity();
    F ax, ay;
    to_affine(ax, ay);
    return {ax, ay, F::one()};
  }
};

using G1 = Point<Fq>;
using G2 = Point<Fq2>;

G1 g1_generator();
G2 g2_generator();

G1 g1_from_affine(const Fq& x, const Fq& y);
G2 g2_from_affine(const Fq2& x, const Fq2& y);

// Curve membership (affine part of the equation).
bool g1_on_curve(const G1& p);
bool g2_on_curve(const G2& p);
// Full validity: on curve and in the r-order subgroup.
bool g1_valid(const G1& p);
bool g2_valid(const G2& p);

G1 g1_mul(const G1& p, const Fr& k);
G2 g2_mul(const G2& p, const Fr& k);

// 32-byte compressed G1: little-endian x with the y-parity in bit 7 and an
// infinity flag in bit 6 of the last byte.
std::array<uint8_t, 32> g1_compress(const G1& p);
std::optional<G1> g1_decompress(const uint8_t* bytes);

// 128-byte uncompressed G2: x.c0, x.c1, y.c0, y.c1 (little-endian each);
// all-zero encodes infinity.
std::array<uint8_t, 128> g2_serialize(const G2& p);
std::optional<G2> g2_deserialize(const uint8_t* bytes);

Fq2 g2_coeff_b();

}  // namespace zkace
