// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pairing-based preprocessing zk-SNARK over the R1CS (Groth's 2016
// construction) with input-consistency rows appended to the QAP.

#pragma once

#include <optional>

#include "core/rng.hpp"
#include "curve/pairing.hpp"
#include "r1cs/r1cs.hpp"

namespace zkace {

struct Groth16Proof {
  G1 a;
  G2 b;
  G1 c;

  static constexpr size_t kByteSize = 192;
  std::array<uint8_t, kByteSize> to_bytes() const;
  static std::optional<Groth16Proof> from_bytes(const uint8_t* data,
                                                size_t len);
};

struct Groth16VerifyingKey {
  G1 alpha_g1;
  G2 beta_g2, gamma_g2, delta_g2;
  std::vector<G1> ic;  // one per public input plus the constant term

  Bytes to_bytes() const;
  static std::optional<Groth16VerifyingKey> from_bytes(const Bytes& data);
};

struct Groth16ProvingKey {
  G1 alpha_g1, beta_g1, delta_g1;
  G2 beta_g2, delta_g2;
  std::vector<G1> a_query;     // u_j(tau) G1, per variable
  std::vector<G1> b_g1_query;  // v_j(tau) G1
  std::vector<G2> b_g2_query;  // v_j(tau) G2
  std::vector<G1> h_query;     // tau^i Z(tau)/delta G1
  std::vector<G1> l_query;     // per private variable
  uint32_t num_public = 0;     // excluding the constant one

  Bytes to_bytes() const;
  static std::optional<Groth16ProvingKey> from_bytes(const Bytes& data);
};

struct Groth16KeyPair {
  Groth16ProvingKey pk;
  Groth16VerifyingKey vk;
};

Groth16KeyPair groth16_setup(const ConstraintSystem& cs, Rng& rng);

Groth16Proof groth16_prove(const Groth16ProvingKey& pk,
                           const ConstraintSystem& cs,
                           const std::vector<Fr>& assignment, Rng& rng);

bool groth16_verify(const Groth16VerifyingKey& vk,
                    const std::vector<Fr>& public_inputs,
                    const Groth16Proof& proof);

// Randomized batch check. Returns true iff every proof verifies; when false
// and failing_index is given, it holds the first failing position.
bool groth16_batch_verify(
    const Groth16VerifyingKey& vk,
    const std::vector<std::pair<std::vector<Fr>, Groth16Proof>>& items,
    Rng& rng, size_t* failing_index = nullptr);

// Multi-scalar multiplication (Pippenger bucket method), exposed for use
// by the benchmark harness.
G1 g1_msm(const std::vector<G1>& bases, const std::vector<Fr>& scalars);

}  // namespace zkace
