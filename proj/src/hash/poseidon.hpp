// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Poseidon permutation and sponge over the BN254 scalar field.
// Width 3, rate 2, capacity 1, S-box x^17, 8 full + 57 partial rounds.
// The same function is evaluated natively here and inside the
// constraint system (circuit module); both must agree bit for bit.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bytes.hpp"
#include "core/fields.hpp"

namespace zkace {

// Per-call-site use tags. Absorbed into the sponge's initial capacity
// element together with the input arity, separating the hash uses and
// fixing the padding discipline. Frozen format; do not renumber.
enum class HashTag : uint8_t {
  kC1 = 1,        // identity commitment
  kC2Inner = 2,   // context key derivation
  kC2Outer = 3,   // derivation-target commitment
  kC3 = 4,        // authorization token
  kC4 = 5,        // replay-prevention commitment
  kTx = 6,        // transaction payload hash
  kDomain = 7,    // domain descriptor hash
};

struct PoseidonParams {
  static constexpr uint32_t kWidth = 3;
  static constexpr uint32_t kRate = 2;
  static constexpr uint32_t kAlpha = 17;
  static constexpr uint32_t kFullRounds = 8;
  static constexpr uint32_t kPartialRounds = 57;
  static constexpr uint32_t kTotalRounds = kFullRounds + kPartialRounds;

  uint32_t version = 1;
  // kWidth * kTotalRounds constants, round-major.
  std::vector<Fr> round_constants;
  Fr mds[kWidth][kWidth];

  // Deterministic table: SHA-256 counter-mode expansion of a fixed seed
  // string, reduced mod r; MDS is the Cauchy matrix 1/(i + 3 + j).
  static const PoseidonParams& default_params();
  static PoseidonParams generate(const std::string& seed, uint32_t version);

  std::string to_json() const;
  static PoseidonParams from_json(const std::string& json_text);
  static PoseidonParams load_file(const std::string& path);
  void save_file(const std::string& path) const;

  // SHA-256 over the canonical table encoding; part of circuit identifiers.
  std::array<uint8_t, 32> digest() const;

  bool mds_invertible() const;
};

void poseidon_permute(const PoseidonParams& p, Fr state[3]);

// Sponge with the (tag, arity) capacity IV. inputs must be non-empty.
Fr poseidon_hash(const PoseidonParams& p, const std::vector<Fr>& inputs,
                 HashTag tag);

// Capacity IV encoding shared with the in-circuit gadget.
Fr poseidon_capacity_iv(HashTag tag, size_t arity);

// Length-prefixed 31-byte-chunk packing; injective on byte strings.
// Requires payload.size() < 2^32.
std::vector<Fr> pack_bytes(const Bytes& payload);

Fr tx_hash(const PoseidonParams& p, const Bytes& payload);

// Domain tag element from an arbitrary descriptor (e.g. "chain-7/main").
Fr domain_element(const PoseidonParams& p, const std::string& descriptor);

}  // namespace zkace
