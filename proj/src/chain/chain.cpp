// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "chain/chain.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "core/sha256.hpp"

namespace zkace {

namespace {

constexpr uint32_t kStateFormatVersion = 1;

std::string checksum_of(const nlohmann::json& body) {
  std::string text = body.dump();
  auto d = Sha256().update(text).finish();
  return to_hex(d.data(), d.size());
}

}  // namespace

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "none";
    case RejectReason::kContextBinding: return "context-binding";
    case RejectReason::kPublicInput: return "public-input";
    case RejectReason::kProofInvalid: return "proof-invalid";
    case RejectReason::kReplay: return "replay";
  }
  return "unknown";
}

ChainState::ChainState(ReplayMode mode, const Fr& expected_domain,
                       VerifierKey vk, bool production)
    : mode_(mode), domain_(expected_domain), vk_(std::move(vk)),
      production_(production) {
  if (production_ && vk_.backend == BackendId::kMock) {
    throw std::invalid_argument(
        "mock backend is not selectable in the production profile");
  }
  if (vk_.mode != mode_) {
    throw std::invalid_argument("verifying key replay mode mismatch");
  }
}

void ChainState::register_identity(const Fr& id_com) {
  auto [it, inserted] = identities_.insert(id_com.to_hex());
  if (!inserted) throw std::invalid_argument("identity already registered");
}

bool ChainState::is_registered(const Fr& id_com) const {
  return identities_.count(id_com.to_hex()) != 0;
}

uint64_t ChainState::next_nonce(const Fr& id_com) const {
  auto it = nonces_.find(id_com.to_hex());
  return it == nonces_.end() ? 0 : it->second;
}

bool ChainState::has_nullifier(const Fr& n) const {
  return nullifiers_.count(n.to_hex()) != 0;
}

TxResult ChainState::validate(const PoseidonParams& params,
                              const SubmittedTx& tx,
                              const bool* proof_ok_hint) const {
  // Step 6: context binding.
  if (tx_hash(params, tx.payload) != tx.pub.tx_hash) {
    return {false, RejectReason::kContextBinding};
  }
  // Step 7: public-input validation. The target is accepted as declared
  // (well-formed field element by construction); its binding is enforced
  // inside the circuit.
  if (!is_registered(tx.pub.id_com) || tx.pub.domain != domain_) {
    return {false, RejectReason::kPublicInput};
  }
  // Step 8: proof verification.
  bool proof_ok = proof_ok_hint ? *proof_ok_hint
                                : backend_verify(vk_, tx.proof, tx.pub);
  if (!proof_ok) return {false, RejectReason::kProofInvalid};
  // Step 9: replay predicate.
  if (mode_ == ReplayMode::kNonceRegistry) {
    Fr expected = poseidon_hash(
        params, {tx.pub.id_com, Fr::from_u64(next_nonce(tx.pub.id_com))},
        HashTag::kC4);
    if (expected != tx.pub.rp_com) return {false, RejectReason::kReplay};
  } else {
    if (has_nullifier(tx.pub.rp_com)) return {false, RejectReason::kReplay};
  }
  return {true, RejectReason::kNone};
}

void ChainState::apply(const SubmittedTx& tx) {
  // Step 10: accept and update replay state.
  if (mode_ == ReplayMode::kNonceRegistry) {
    ++nonces_[tx.pub.id_com.to_hex()];
  } else {
    nullifiers_.insert(tx.pub.rp_com.to_hex());
  }
  ++height_;
}

TxResult ChainState::process_tx(const PoseidonParams& params,
                                const SubmittedTx& tx) {
  TxResult r = validate(params, tx, nullptr);
  if (r.accepted) apply(tx);
  return r;
}

std::vector<TxResult> ChainState::process_batch(
    const PoseidonParams& params, const std::vector<SubmittedTx>& txs) {
  // Proof validity does not depend on replay state, so step 8 can be
  // precomputed with the batched check. Steps 6/7/9 stay sequential.
  std::vector<uint8_t> proof_ok(txs.size(), 0);
  std::vector<size_t> candidates;
  std::vector<std::pair<AuthorizationProof, PublicInputs>> batch;
  for (size_t i = 0; i < txs.size(); ++i) {
    if (tx_hash(params, txs[i].payload) != txs[i].pub.tx_hash) continue;
    if (!is_registered(txs[i].pub.id_com) || txs[i].pub.domain != domain_) {
      continue;
    }
    candidates.push_back(i);
    batch.push_back({txs[i].proof, txs[i].pub});
  }
  if (!batch.empty()) {
    if (vk_.backend == BackendId::kReal && batch.size() > 1 &&
        backend_batch_verify(vk_, batch)) {
      for (size_t i : candidates) proof_ok[i] = 1;
    } else {
      for (size_t k = 0; k < candidates.size(); ++k) {
        proof_ok[candidates[k]] =
            backend_verify(vk_, batch[k].first, batch[k].second);
      }
    }
  }

  std::vector<TxResult> results;
  results.reserve(txs.size());
  for (size_t i = 0; i < txs.size(); ++i) {
    bool ok = proof_ok[i] != 0;
    TxResult r = validate(params, txs[i], &ok);
    if (r.accepted) apply(txs[i]);
    results.push_back(r);
  }
  return results;
}

std::string ChainState::to_json() const {
  nlohmann::json body;
  body["format_version"] = kStateFormatVersion;
  body["mode"] = replay_mode_name(mode_);
  body["expected_domain"] = domain_.to_hex();
  body["production"] = production_;
  body["verifier_key_b64"] = base64_encode(vk_.to_bytes());
  body["height"] = height_;
  body["identities"] = identities_;
  body["nonces"] = nonces_;
  body["nullifiers"] = nullifiers_;

  nlohmann::json j;
  j["state"] = body;
  j["checksum"] = checksum_of(body);
  return j.dump(2);
}

ChainState ChainState::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const nlohmann::json& body = j.at("state");
  if (j.at("checksum").get<std::string>() != checksum_of(body)) {
    throw std::runtime_error("chain state checksum mismatch");
  }
  if (body.at("format_version").get<uint32_t>() != kStateFormatVersion) {
    throw std::runtime_error("unsupported chain state version");
  }
  auto mode = replay_mode_from_name(body.at("mode").get<std::string>());
  if (!mode) throw std::runtime_error("unknown replay mode in state file");

  Fr domain;
  if (!Fr::from_hex(body.at("expected_domain").get<std::string>(), domain)) {
    throw std::runtime_error("bad expected_domain in state file");
  }
  auto vk = VerifierKey::from_bytes(
      base64_decode(body.at("verifier_key_b64").get<std::string>()));
  if (!vk) throw std::runtime_error("bad verifier key in state file");

  ChainState s(*mode, domain, std::move(*vk),
               body.at("production").get<bool>());
  s.height_ = body.at("height").get<uint64_t>();
  for (const auto& id : body.at("identities")) {
    s.identities_.insert(id.get<std::string>());
  }
  for (const auto& [k, v] : body.at("nonces").items()) {
    s.nonces_[k] = v.get<uint64_t>();
  }
  for (const auto& n : body.at("nullifiers")) {
    s.nullifiers_.insert(n.get<std::string>());
  }
  return s;
}

void ChainState::save_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write chain state: " + path);
  f << to_json() << "\n";
}

ChainState ChainState::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open chain state: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

std::string ChainState::status_json() const {
  nlohmann::json j;
  j["mode"] = replay_mode_name(mode_);
  j["expected_domain"] = domain_.to_hex();
  j["height"] = height_;
  j["identities"] = identities_.size();
  j["nullifiers"] = nullifiers_.size();
  j["backend"] = backend_name(vk_.backend);
  j["production"] = production_;
  return j.dump(2);
}

}  // namespace zkace
