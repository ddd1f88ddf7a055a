// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// BN254 scalar field Fr and base field Fq.

#pragma once

#include "core/fp.hpp"

namespace zkace {

// BN254 scalar field modulus r =
// 21888242871839275222246405745257275088548364400416034343698204186575808495617
inline constexpr U256 kFrModulus(0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL);

// BN254 base field modulus q =
// 21888242871839275222246405745257275088696311157297823662689037894645226208583
inline constexpr U256 kFqModulus(0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL);

inline constexpr FpConstants kFrConstants = make_fp_constants(kFrModulus);
inline constexpr FpConstants kFqConstants = make_fp_constants(kFqModulus);

using Fr = Fp<kFrConstants>;
using Fq = Fp<kFqConstants>;

// r - 1 = 2^28 * odd; 5 generates Fr*.
inline constexpr unsigned kFrTwoAdicity = 28;

// Primitive 2^28-th root of unity: 5^((r-1) / 2^28).
inline Fr fr_root_of_unity() {
  static const Fr root = [] {
    U256 e = kFrModulus;
    e.sub_with_borrow(U256(1));
    for (unsigned i = 0; i < kFrTwoAdicity; ++i) e.shr1();
    return Fr::from_u64(5).pow(e);
  }();
  return root;
}

// sqrt in Fq (q == 3 mod 4): x^((q+1)/4). Returns false if x is a non-residue.
inline bool fq_sqrt(const Fq& x, Fq& out) {
  U256 e = kFqModulus;
  e.add_with_carry(U256(1));
  e.shr1();
  e.shr1();
  Fq r = x.pow(e);
  if (r.square() != x) return false;
  out = r;
  return true;
}

}  // namespace zkace
