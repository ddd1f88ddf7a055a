// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Consensus-side verifier: ordered validation pipeline, identity registry,
// replay state machines and persistent state.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "backend/backend.hpp"

namespace zkace {

enum class RejectReason : uint8_t {
  kNone = 0,
  kContextBinding = 6,  // recomputed tx hash differs
  kPublicInput = 7,     // unregistered identity, wrong domain, malformed
  kProofInvalid = 8,
  kReplay = 9,
};

const char* reject_reason_name(RejectReason r);

struct SubmittedTx {
  Bytes payload;
  AuthorizationProof proof;
  PublicInputs pub;

  static SubmittedTx from_bundle(const ProofBundle& b) {
    return {b.payload, b.proof, b.pub};
  }
};

struct TxResult {
  bool accepted = false;
  RejectReason reason = RejectReason::kNone;

  bool operator==(const TxResult&) const = default;
};

class ChainState {
 public:
  ChainState() = default;
  // production = true forbids the mock backend.
  ChainState(ReplayMode mode, const Fr& expected_domain, VerifierKey vk,
             bool production);

  // Throws std::invalid_argument on duplicate registration.
  void register_identity(const Fr& id_com);
  bool is_registered(const Fr& id_com) const;

  TxResult process_tx(const PoseidonParams& params, const SubmittedTx& tx);
  std::vector<TxResult> process_batch(const PoseidonParams& params,
                                      const std::vector<SubmittedTx>& txs);

  uint64_t height() const { return height_; }
  ReplayMode mode() const { return mode_; }
  const Fr& expected_domain() const { return domain_; }
  const VerifierKey& verifier_key() const { return vk_; }
  bool production() const { return production_; }

  uint64_t next_nonce(const Fr& id_com) const;
  size_t nullifier_count() const { return nullifiers_.size(); }
  bool has_nullifier(const Fr& n) const;
  size_t identity_count() const { return identities_.size(); }

  std::string to_json() const;
  static ChainState from_json(const std::string& text);
  void save_file(const std::string& path) const;
  static ChainState load_file(const std::string& path);

  std::string status_json() const;

 private:
  TxResult validate(const PoseidonParams& params, const SubmittedTx& tx,
                    const bool* proof_ok_hint) const;
  void apply(const SubmittedTx& tx);

  ReplayMode mode_ = ReplayMode::kNonceRegistry;
  Fr domain_;
  VerifierKey vk_;
  bool production_ = false;
  uint64_t height_ = 0;
  std::set<std::string> identities_;            // id_com hex
  std::map<std::string, uint64_t> nonces_;      // id_com hex -> next nonce
  std::set<std::string> nullifiers_;            // rp_com hex
};

}  // namespace zkace
