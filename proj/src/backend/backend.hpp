// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pluggable proof backend over the authorization circuit. The real backend
// is the pairing-based SNARK; the mock backend is a keyed authenticator
// with a native witness check, for pipeline throughput tests only. Keys
// and proofs carry a circuit identifier binding shape, replay mode and
// hash parameters.

#pragma once

#include <memory>
#include <optional>

#include "circuit/auth_circuit.hpp"
#include "groth16/groth16.hpp"

namespace zkace {

enum class BackendId : uint8_t { kReal = 0, kMock = 1 };

const char* backend_name(BackendId b);
std::optional<BackendId> backend_from_name(const std::string& s);

using CircuitId = std::array<uint8_t, 32>;

struct AuthorizationProof {
  Bytes proof_bytes;
  BackendId backend = BackendId::kReal;
  CircuitId circuit_id{};

  size_t size_bytes() const { return proof_bytes.size(); }
};

struct ProverKey {
  BackendId backend = BackendId::kReal;
  ReplayMode mode = ReplayMode::kNonceRegistry;
  CircuitId circuit_id{};
  Groth16ProvingKey g16;                // real backend
  std::array<uint8_t, 32> mock_key{};   // mock backend

  Bytes to_bytes() const;
  static std::optional<ProverKey> from_bytes(const Bytes& data);
  void save_file(const std::string& path) const;
  static ProverKey load_file(const std::string& path);

  // Lazily built circuit reused across prove calls.
  mutable std::shared_ptr<const AuthCircuit> circuit_cache;
};

struct VerifierKey {
  BackendId backend = BackendId::kReal;
  ReplayMode mode = ReplayMode::kNonceRegistry;
  CircuitId circuit_id{};
  Groth16VerifyingKey g16;
  std::array<uint8_t, 32> mock_key{};

  Bytes to_bytes() const;
  static std::optional<VerifierKey> from_bytes(const Bytes& data);
  void save_file(const std::string& path) const;
  static VerifierKey load_file(const std::string& path);
};

struct BackendKeys {
  ProverKey prover;
  VerifierKey verifier;
};

// Seeded setup is deterministic and prints an INSECURE-FOR-PRODUCTION
// warning; without a seed, OS entropy is used.
BackendKeys backend_setup(BackendId backend, const PoseidonParams& params,
                          ReplayMode mode,
                          const std::optional<std::array<uint8_t, 32>>& seed);

// Throws std::invalid_argument when the witness does not satisfy the
// statement.
AuthorizationProof backend_prove(const ProverKey& pk,
                                 const PoseidonParams& params,
                                 const AuthorizationWitness& witness,
                                 const PublicInputs& pub);

bool backend_verify(const VerifierKey& vk, const AuthorizationProof& proof,
                    const PublicInputs& pub);

// Accepts iff every item accepts; on reject reports one failing index.
// Throws std::invalid_argument on an empty batch.
bool backend_batch_verify(
    const VerifierKey& vk,
    const std::vector<std::pair<AuthorizationProof, PublicInputs>>& items,
    size_t* failing_index = nullptr);

// The (proof, public inputs) unit exchanged with the chain and the CLI.
struct ProofBundle {
  AuthorizationProof proof;
  PublicInputs pub;
  ReplayMode mode = ReplayMode::kNonceRegistry;
  Bytes payload;  // transaction payload the statement binds

  std::string to_json() const;
  static ProofBundle from_json(const std::string& text);
};

}  // namespace zkace
