// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Structural per-transaction authorization data accounting: byte sizes of
// signature-based artifacts versus the proof-based artifact, and the
// resulting on-chain data reduction ratios. Chain-specific encoding
// overhead (RLP, SSZ, ...) is deliberately out of scope.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zkace {

struct ArtifactProfile {
  std::string name;
  uint64_t signature_or_proof_bytes = 0;
  uint64_t public_key_bytes = 0;
  uint64_t commitment_bytes = 0;
  uint64_t public_input_bytes = 0;
  // First-use transactions carry the public key; repeat-sender profiles
  // amortize it away. Kept as an explicit flag rather than a baked-in
  // assumption.
  bool amortize_public_key = false;

  uint64_t total_bytes() const {
    return signature_or_proof_bytes +
           (amortize_public_key ? 0 : public_key_bytes) + commitment_bytes +
           public_input_bytes;
  }
  std::string to_json() const;
};

// Reference signature schemes with fixed artifact sizes.
std::vector<ArtifactProfile> builtin_profiles(bool amortize_public_key);

// Looks up a builtin by name ("ml-dsa-44", "ed25519", ...); throws
// std::invalid_argument on an unknown name.
ArtifactProfile builtin_profile(const std::string& name,
                                bool amortize_public_key);

// The proof-based artifact: one 32-byte identity commitment, the measured
// proof, and 32 bytes per circuit public input. public_input_count must be
// read from the live circuit layout.
ArtifactProfile zkace_profile(uint64_t measured_proof_bytes,
                              uint64_t public_input_count);

struct ReductionReport {
  ArtifactProfile pqc;
  ArtifactProfile zk;
  double ratio = 0.0;
  std::vector<std::string> footnotes;

  std::string to_json() const;
  std::string to_table() const;
};

ReductionReport reduction_report(const ArtifactProfile& pqc,
                                 const ArtifactProfile& zk);

}  // namespace zkace
