// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Extension tower over the BN254 base field:
//   Fq2  = Fq[i]  / (i^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + i
//   Fq12 = Fq6[w] / (w^2 - v)

#pragma once

#include "core/fields.hpp"

namespace zkace {

struct Fq2 {
  Fq c0, c1;

  static Fq2 zero() { return {}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }
  static Fq2 from_fq(const Fq& a) { return {a, Fq::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fq2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq2& o) const { return !(*this == o); }

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator-() const { return {-c0, -c1}; }

  Fq2 operator*(const Fq2& o) const {
    // Karatsuba: (a0 + a1 i)(b0 + b1 i)
    Fq v0 = c0 * o.c0;
    Fq v1 = c1 * o.c1;
    return {v0 - v1, (c0 + c1) * (o.c0 + o.c1) - v0 - v1};
  }

  Fq2 scale(const Fq& k) const { return {c0 * k, c1 * k}; }

  Fq2 square() const {
    // (a + bi)^2 = (a+b)(a-b) + 2ab i
    Fq ab = c0 * c1;
    return {(c0 + c1) * (c0 - c1), ab + ab};
  }

  Fq2 dbl() const { return {c0 + c0, c1 + c1}; }

  Fq2 conjugate() const { return {c0, -c1}; }

  Fq2 inverse() const {
    Fq t = (c0.square() + c1.square()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  // Multiplication by xi = 9 + i.
  Fq2 mul_by_xi() const {
    Fq nine = Fq::from_u64(9);
    return {nine * c0 - c1, nine * c1 + c0};
  }

  Fq2 pow(const U256& e) const {
    Fq2 acc = one();
    int top = e.top_bit();
    for (int i = top; i >= 0; --i) {
      acc = acc.square();
      if (e.bit((unsigned)i)) acc = acc * *this;
    }
    return acc;
  }
};

struct Fq6 {
  Fq2 c0, c1, c2;  // c0 + c1 v + c2 v^2

  static Fq6 zero() { return {}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const {
    return c0.is_zero() && c1.is_zero() && c2.is_zero();
  }
  bool operator==(const Fq6& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }
  bool operator!=(const Fq6& o) const { return !(*this == o); }

  Fq6 operator+(const Fq6& o) const {
    return {c0 + o.c0, c1 + o.c1, c2 + o.c2};
  }
  Fq6 operator-(const Fq6& o) const {
    return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
  }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }

  Fq6 operator*(const Fq6& o) const {
    // Toom-style with v^3 = xi.
    Fq2 v0 = c0 * o.c0;
    Fq2 v1 = c1 * o.c1;
    Fq2 v2 = c2 * o.c2;
    Fq2 t0 = ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_xi() + v0;
    Fq2 t1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_xi();
    Fq2 t2 = (c0 + c2) * (o.c0 + o.c2) - v0 - v2 + v1;
    return {t0, t1, t2};
  }

  Fq6 square() const { return *this * *this; }

  Fq6 scale2(const Fq2& k) const { return {c0 * k, c1 * k, c2 * k}; }

  // Multiplication by v.
  Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fq6 inverse() const {
    Fq2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fq2 b = c2.square().mul_by_xi() - c0 * c1;
    Fq2 c = c1.square() - c0 * c2;
    Fq2 t = (c0 * a + (c2 * b + c1 * c).mul_by_xi()).inverse();
    return {a * t, b * t, c * t};
  }
};

struct Fq12 {
  Fq6 c0, c1;  // c0 + c1 w

  static Fq12 zero() { return {}; }
  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool operator==(const Fq12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq12& o) const { return !(*this == o); }
  bool is_one() const { return *this == one(); }

  Fq12 operator+(const Fq12& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq12 operator-(const Fq12& o) const { return {c0 - o.c0, c1 - o.c1}; }

  Fq12 operator*(const Fq12& o) const {
    Fq6 v0 = c0 * o.c0;
    Fq6 v1 = c1 * o.c1;
    Fq6 t1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1;
    return {v0 + v1.mul_by_v(), t1};
  }

  Fq12 square() const {
    // Complex squaring with w^2 = v.
    Fq6 ab = c0 * c1;
    Fq6 t0 = (c0 + c1) * (c0 + c1.mul_by_v()) - ab - ab.mul_by_v();
    return {t0, ab + ab};
  }

  // q^6-power Frobenius; inverse on the unit circle after the easy part.
  Fq12 conjugate() const { return {c0, -c1}; }

  Fq12 inverse() const {
    Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  Fq12 frobenius() const;

  Fq12 pow(const U256& e) const {
    Fq12 acc = one();
    int top = e.top_bit();
    for (int i = top; i >= 0; --i) {
      acc = acc.square();
      if (e.bit((unsigned)i)) acc = acc * *this;
    }
    return acc;
  }

  // Exponentiation by a multi-limb little-endian exponent.
  Fq12 pow_limbs(const uint64_t* limbs, size_t n) const {
    Fq12 acc = one();
    bool started = false;
    for (size_t li = n; li-- > 0;) {
      for (int b = 63; b >= 0; --b) {
        if (started) acc = acc.square();
        if ((limbs[li] >> b) & 1) {
          if (started) {
            acc = acc * *this;
          } else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return acc;
  }
};

}  // namespace zkace
