// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "curve/pairing.hpp"

namespace zkace {

namespace {

// Floor division of a 256-bit value by a small constant.
U256 div_small(const U256& a, uint64_t d) {
  U256 out;
  uint128 rem = 0;
  for (int i = 3; i >= 0; --i) {
    uint128 cur = (rem << 64) | a.limb[i];
    out.limb[i] = (uint64_t)(cur / d);
    rem = cur % d;
  }
  return out;
}

const Fq2 kXi{Fq::from_u64(9), Fq::one()};

struct FrobeniusConstants {
  Fq2 gamma[6];  // xi^(k (q-1)/6), k = 1..6 at index k-1
  FrobeniusConstants() {
    U256 e = kFqModulus;
    e.sub_with_borrow(U256(1));
    e = div_small(e, 6);
    gamma[0] = kXi.pow(e);
    for (int k = 1; k < 6; ++k) gamma[k] = gamma[k - 1] * gamma[0];
  }
};

const FrobeniusConstants& frob() {
  static const FrobeniusConstants c;
  return c;
}

// The ate loop count 6u + 2 for the BN parameter u.
constexpr uint64_t kAteLoop[2] = {0x9d797039be763ba8ULL, 0x1ULL};
constexpr int kAteLoopTopBit = 64;  // bit index of the leading one

// The curve parameter u; the ate loop count above is 6u + 2.
constexpr uint64_t kBnU = 0x44e992b44a6909f1ULL;

struct AffinePair {
  Fq xp, yp;   // G1 point
  Fq2 xq, yq;  // G2 point on the twist
};

// Sparse line element: a0 + (b0 + b1 v) w in the Fq12 basis.
Fq12 line_to_fq12(const Fq2& a0, const Fq2& b0, const Fq2& b1) {
  Fq12 l = Fq12::zero();
  l.c0.c0 = a0;
  l.c1.c0 = b0;
  l.c1.c1 = b1;
  return l;
}

// Doubles T in place and returns the tangent line evaluated at P.
// The line is scaled by the nonzero Fq2 constant 2YZ^3, which the final
// exponentiation eliminates.
Fq12 dbl_step(G2& t, const Fq& xp, const Fq& yp) {
  Fq2 xx = t.x.square();
  Fq2 yy = t.y.square();
  Fq2 yyyy = yy.square();
  Fq2 zz = t.z.square();
  Fq2 s = ((t.x + yy).square() - xx - yyyy).dbl();
  Fq2 m = xx + xx + xx;
  Fq2 x3 = m.square() - s.dbl();
  Fq2 z3 = (t.y + t.z).square() - yy - zz;
  Fq2 y3 = m * (s - x3) - yyyy.dbl().dbl().dbl();

  Fq2 a0 = (z3 * zz).scale(yp);
  Fq2 b0 = -(m * zz).scale(xp);
  Fq2 b1 = m * t.x - yy.dbl();

  t = {x3, y3, z3};
  return line_to_fq12(a0, b0, b1);
}

// Adds affine Q to T in place and returns the chord line evaluated at P,
// scaled by the nonzero constant Z3 = HZ.
Fq12 add_step(G2& t, const Fq2& xq, const Fq2& yq, const Fq& xp,
              const Fq& yp) {
  Fq2 zz = t.z.square();
  Fq2 h = xq * zz - t.x;
  Fq2 r = yq * zz * t.z - t.y;
  Fq2 hh = h.square();
  Fq2 hhh = hh * h;
  Fq2 v = t.x * hh;
  Fq2 x3 = r.square() - hhh - v.dbl();
  Fq2 y3 = r * (v - x3) - t.y * hhh;
  Fq2 z3 = t.z * h;

  Fq2 a0 = z3.scale(yp);
  Fq2 b0 = -r.scale(xp);
  Fq2 b1 = r * xq - yq * z3;

  t = {x3, y3, z3};
  return line_to_fq12(a0, b0, b1);
}

// q-power endomorphism on the twist.
void twist_frobenius(Fq2& xq, Fq2& yq) {
  const FrobeniusConstants& c = frob();
  xq = xq.conjugate() * c.gamma[1];  // xi^((q-1)/3)
  yq = yq.conjugate() * c.gamma[2];  // xi^((q-1)/2)
}

}  // namespace

Fq12 Fq12::frobenius() const {
  const FrobeniusConstants& f = frob();
  auto frob6 = [&f](const Fq6& a) {
    return Fq6{a.c0.conjugate(), a.c1.conjugate() * f.gamma[1],
               a.c2.conjugate() * f.gamma[3]};
  };
  Fq12 out;
  out.c0 = frob6(c0);
  out.c1 = frob6(c1).scale2(f.gamma[0]);
  return out;
}

Fq12 multi_miller_loop(const std::vector<std::pair<G1, G2>>& pairs) {
  std::vector<AffinePair> aff;
  aff.reserve(pairs.size());
  for (const auto& [p, q] : pairs) {
    if (p.is_infinity() || q.is_infinity()) continue;
    AffinePair a;
    p.to_affine(a.xp, a.yp);
    q.to_affine(a.xq, a.yq);
    aff.push_back(a);
  }
  if (aff.empty()) return Fq12::one();

  std::vector<G2> t(aff.size());
  for (size_t i = 0; i < aff.size(); ++i) {
    t[i] = g2_from_affine(aff[i].xq, aff[i].yq);
  }

  Fq12 f = Fq12::one();
  for (int bit = kAteLoopTopBit - 1; bit >= 0; --bit) {
    f = f.square();
    for (size_t i = 0; i < aff.size(); ++i) {
      f = f * dbl_step(t[i], aff[i].xp, aff[i].yp);
    }
    if ((kAteLoop[bit / 64] >> (bit % 64)) & 1) {
      for (size_t i = 0; i < aff.size(); ++i) {
        f = f * add_step(t[i], aff[i].xq, aff[i].yq, aff[i].xp, aff[i].yp);
      }
    }
  }

  // Frobenius correction terms of the optimal ate pairing.
  for (size_t i = 0; i < aff.size(); ++i) {
    Fq2 x1 = aff[i].xq, y1 = aff[i].yq;
    twist_frobenius(x1, y1);
    f = f * add_step(t[i], x1, y1, aff[i].xp, aff[i].yp);
    Fq2 x2 = x1, y2 = y1;
    twist_frobenius(x2, y2);
    y2 = -y2;
    f = f * add_step(t[i], x2, y2, aff[i].xp, aff[i].yp);
  }
  return f;
}

Fq12 final_exponentiation(const Fq12& f) {
  // Easy part: f^((q^6 - 1)(q^2 + 1)).
  Fq12 t = f.conjugate() * f.inverse();
  t = t.frobenius().frobenius() * t;

  // Hard part: t^((q^4 - q^2 + 1) / r) via the u-power addition chain.
  // After the easy part t lies in the cyclotomic subgroup, where the
  // conjugate is the inverse, so every needed inverse is free.
  Fq12 fu = t.pow_limbs(&kBnU, 1);
  Fq12 fu2 = fu.pow_limbs(&kBnU, 1);
  Fq12 fu3 = fu2.pow_limbs(&kBnU, 1);

  Fq12 fp = t.frobenius();
  Fq12 fp2 = fp.frobenius();
  Fq12 fp3 = fp2.frobenius();

  Fq12 y0 = fp * fp2 * fp3;
  Fq12 y1 = t.conjugate();
  Fq12 y2 = fu2.frobenius().frobenius();
  Fq12 y3 = fu.frobenius().conjugate();
  Fq12 y4 = (fu * fu2.frobenius()).conjugate();
  Fq12 y5 = fu2.conjugate();
  Fq12 y6 = (fu3 * fu3.frobenius()).conjugate();

  Fq12 t0 = y6.square() * y4 * y5;
  Fq12 t1 = y3 * y5 * t0;
  t0 = t0 * y2;
  t1 = (t1.square() * t0).square();
  t0 = t1 * y1;
  t1 = t1 * y0;
  t0 = t0.square();
  return t0 * t1;
}

Fq12 pairing(const G1& p, const G2& q) {
  return final_exponentiation(multi_miller_loop({{p, q}}));
}

bool pairing_product_is_one(const std::vector<std::pair<G1, G2>>& pairs) {
  return final_exponentiation(multi_miller_loop(pairs)).is_one();
}

}  // namespace zkace
