// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// The authorization statement: five public inputs, six private witness
// elements, and constraints
//   C1: H(rev, salt, domain)            == id_com
//   C2: H(H(rev, alg_id, ctx_dom, idx)) == target
//   C3: auth = H(rev, alg_id, ctx_dom, idx, tx_hash, domain, nonce)
//   C4: H(id_com, nonce) == rp_com      (nonce-registry mode)
//       H(auth, domain)  == rp_com      (nullifier-set mode)
//   C5: ctx_dom == domain
// Both replay modes synthesize to identical constraint counts.

#pragma once

#include <optional>
#include <string>

#include "hash/poseidon.hpp"
#include "r1cs/r1cs.hpp"

namespace zkace {

enum class ReplayMode : uint8_t { kNonceRegistry = 0, kNullifierSet = 1 };

const char* replay_mode_name(ReplayMode m);
std::optional<ReplayMode> replay_mode_from_name(const std::string& s);

struct PublicInputs {
  // Fixed order in every serialization and in the proof-system vector.
  Fr id_com, tx_hash, domain, target, rp_com;

  std::vector<Fr> as_vector() const {
    return {id_com, tx_hash, domain, target, rp_com};
  }
  bool operator==(const PublicInputs&) const = default;

  std::string to_json(ReplayMode mode) const;
  static PublicInputs from_json(const std::string& text, ReplayMode* mode_out);
};

struct DerivationContext {
  Fr alg_id, ctx_domain, index;
};

struct AuthorizationWitness {
  Fr rev, salt;
  DerivationContext ctx;
  Fr nonce;
  // aux is fixed empty.
};

struct ConstraintReport {
  size_t c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
  size_t total = 0;
  size_t hash_invocations = 0;
  std::string to_json(ReplayMode mode) const;
};

struct AuthCircuit {
  ConstraintSystem cs;
  ConstraintReport report;
  ReplayMode mode;
};

AuthCircuit build_circuit(const PoseidonParams& params, ReplayMode mode);

ConstraintReport count_constraints(const PoseidonParams& params,
                                   ReplayMode mode);

// Full wire assignment for an honest (witness, public) pair; satisfies
// build_circuit(mode) iff the pair is consistent.
std::vector<Fr> synthesize_assignment(const PoseidonParams& params,
                                      ReplayMode mode,
                                      const AuthorizationWitness& w,
                                      const PublicInputs& pub);

// Native statement assembly (Algorithm-style prover-side computation).
std::pair<AuthorizationWitness, PublicInputs> make_statement(
    const PoseidonParams& params, const Fr& rev, const Fr& salt,
    const DerivationContext& ctx, const Fr& nonce, const Bytes& tx_payload,
    const Fr& domain, ReplayMode mode);

// Native evaluation of the C3 hash; equals the circuit's internal auth wire.
Fr auth_token(const PoseidonParams& params, const Fr& rev,
              const DerivationContext& ctx, const Fr& tx_hash_value,
              const Fr& domain, const Fr& nonce);

// SHA-256 identifier binding circuit shape, replay mode and hash params.
std::array<uint8_t, 32> circuit_id(const PoseidonParams& params,
                                   ReplayMode mode);

}  // namespace zkace
