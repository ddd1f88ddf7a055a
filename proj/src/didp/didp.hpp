// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic identity derivation: sealing of the 256-bit root entropy
// value under a credential, and the circuit-native key derivation.

#pragma once

#include <optional>
#include <string>

#include "circuit/auth_circuit.hpp"
#include "core/bytes.hpp"
#include "core/rng.hpp"

namespace zkace {

// 256-bit identity root. Zeroized on destruction; the in-circuit
// representation is the value reduced mod r.
class RootEntropy {
 public:
  RootEntropy() = default;
  explicit RootEntropy(const std::array<uint8_t, 32>& bytes);
  ~RootEntropy();

  RootEntropy(const RootEntropy&) = default;
  RootEntropy& operator=(const RootEntropy&) = default;

  static RootEntropy sample(Rng& rng);

  const std::array<uint8_t, 32>& bytes() const { return bytes_; }
  Fr field() const;

  bool operator==(const RootEntropy& o) const { return bytes_ == o.bytes_; }

 private:
  std::array<uint8_t, 32> bytes_{};
};

struct KdfParams {
  uint64_t opslimit = 0;
  size_t memlimit = 0;

  // Moderate interactive cost for real use.
  static KdfParams production();
  // Minimum cost; for reproducible tests only.
  static KdfParams test();
};

struct SealedArtifact {
  uint32_t version = 1;
  std::array<uint8_t, 16> kdf_salt{};
  KdfParams kdf_params;
  std::array<uint8_t, 24> nonce{};
  std::array<uint8_t, 32> ciphertext{};
  std::array<uint8_t, 16> tag{};

  std::string to_json() const;
  // Throws std::invalid_argument on malformed input (distinct from the
  // authentication failure unseal reports by returning nullopt).
  static SealedArtifact from_json(const std::string& text);
};

SealedArtifact seal(const RootEntropy& rev, const Bytes& credential,
                    const KdfParams& cost, Rng& rng);

std::optional<RootEntropy> unseal(const SealedArtifact& artifact,
                                  const Bytes& credential);

// Circuit-native derivation; identical to the in-circuit C2 computation.
Fr derive(const PoseidonParams& params, const RootEntropy& rev,
          const DerivationContext& ctx);
Fr derive_target(const PoseidonParams& params, const RootEntropy& rev,
                 const DerivationContext& ctx);

}  // namespace zkace
