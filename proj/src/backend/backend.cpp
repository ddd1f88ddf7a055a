// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "backend/backend.hpp"

#include <sodium.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace zkace {

namespace {

constexpr char kMagic[8] = {'Z', 'K', 'A', 'C', 'E', 'K', 'E', 'Y'};
constexpr uint32_t kKeyFormatVersion = 1;

enum class KeyType : uint8_t { kProver = 0, kVerifier = 1 };

Bytes key_envelope(KeyType type, BackendId backend, ReplayMode mode,
                   const CircuitId& cid, const Bytes& payload) {
  Bytes out;
  out.insert(out.end(), kMagic, kMagic + 8);
  append_u32_le(out, kKeyFormatVersion);
  out.push_back((uint8_t)type);
  out.push_back((uint8_t)backend);
  out.push_back((uint8_t)mode);
  out.insert(out.end(), cid.begin(), cid.end());
  append_u32_le(out, (uint32_t)payload.size());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

bool parse_envelope(const Bytes& data, KeyType expect_type,
                    BackendId& backend, ReplayMode& mode, CircuitId& cid,
                    Bytes& payload) {
  if (data.size() < 8 + 4 + 3 + 32 + 4) return false;
  if (std::memcmp(data.data(), kMagic, 8) != 0) return false;
  size_t off = 8;
  uint32_t ver = (uint32_t)data[off] | ((uint32_t)data[off + 1] << 8) |
                 ((uint32_t)data[off + 2] << 16) |
                 ((uint32_t)data[off + 3] << 24);
  off += 4;
  if (ver != kKeyFormatVersion) return false;
  if (data[off] != (uint8_t)expect_type) return false;
  ++off;
  if (data[off] > 1) return false;
  backend = (BackendId)data[off++];
  if (data[off] > 1) return false;
  mode = (ReplayMode)data[off++];
  std::memcpy(cid.data(), data.data() + off, 32);
  off += 32;
  uint32_t len = (uint32_t)data[off] | ((uint32_t)data[off + 1] << 8) |
                 ((uint32_t)data[off + 2] << 16) |
                 ((uint32_t)data[off + 3] << 24);
  off += 4;
  if (data.size() != off + len) return false;
  payload.assign(data.begin() + off, data.end());
  return true;
}

Bytes read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open key file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string s = ss.str();
  return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write key file: " + path);
  f.write(reinterpret_cast<const char*>(data.data()), (std::streamsize)data.size());
}

// Native check that (witness, pub) satisfy the statement; mirrors the
// five constraints without building the constraint system.
bool witness_consistent(const PoseidonParams& params, ReplayMode mode,
                        const AuthorizationWitness& w,
                        const PublicInputs& pub) {
  if (w.ctx.ctx_domain != pub.domain) return false;
  if (poseidon_hash(params, {w.rev, w.salt, pub.domain}, HashTag::kC1) !=
      pub.id_com) {
    return false;
  }
  Fr derived = poseidon_hash(
      params, {w.rev, w.ctx.alg_id, w.ctx.ctx_domain, w.ctx.index},
      HashTag::kC2Inner);
  if (poseidon_hash(params, {derived}, HashTag::kC2Outer) != pub.target) {
    return false;
  }
  Fr expected_rp;
  if (mode == ReplayMode::kNonceRegistry) {
    expected_rp = poseidon_hash(params, {pub.id_com, w.nonce}, HashTag::kC4);
  } else {
    Fr auth = auth_token(params, w.rev, w.ctx, pub.tx_hash, pub.domain,
                         w.nonce);
    expected_rp = poseidon_hash(params, {auth, pub.domain}, HashTag::kC4);
  }
  return expected_rp == pub.rp_com;
}

Bytes mock_mac(const std::array<uint8_t, 32>& key, const CircuitId& cid,
               const PublicInputs& pub) {
  Bytes msg(cid.begin(), cid.end());
  for (const Fr& f : pub.as_vector()) {
    auto b = f.to_bytes_le();
    msg.insert(msg.end(), b.begin(), b.end());
  }
  Bytes mac(crypto_auth_hmacsha256_BYTES);
  crypto_auth_hmacsha256(mac.data(), msg.data(), msg.size(), key.data());
  return mac;
}

const AuthCircuit& cached_circuit(const ProverKey& pk,
                                  const PoseidonParams& params) {
  if (!pk.circuit_cache) {
    pk.circuit_cache =
        std::make_shared<const AuthCircuit>(build_circuit(params, pk.mode));
  }
  return *pk.circuit_cache;
}

}  // namespace

const char* backend_name(BackendId b) {
  return b == BackendId::kReal ? "real" : "mock";
}

std::optional<BackendId> backend_from_name(const std::string& s) {
  if (s == "real") return BackendId::kReal;
  if (s == "mock") return BackendId::kMock;
  return std::nullopt;
}

Bytes ProverKey::to_bytes() const {
  Bytes payload;
  if (backend == BackendId::kReal) {
    payload = g16.to_bytes();
  } else {
    payload.assign(mock_key.begin(), mock_key.end());
  }
  return key_envelope(KeyType::kProver, backend, mode, circuit_id, payload);
}

std::optional<ProverKey> ProverKey::from_bytes(const Bytes& data) {
  ProverKey pk;
  Bytes payload;
  if (!parse_envelope(data, KeyType::kProver, pk.backend, pk.mode,
                      pk.circuit_id, payload)) {
    return std::nullopt;
  }
  if (pk.backend == BackendId::kReal) {
    auto g = Groth16ProvingKey::from_bytes(payload);
    if (!g) return std::nullopt;
    pk.g16 = std::move(*g);
  } else {
    if (payload.size() != 32) return std::nullopt;
    std::memcpy(pk.mock_key.data(), payload.data(), 32);
  }
  return pk;
}

void ProverKey::save_file(const std::string& path) const {
  write_file(path, to_bytes());
}

ProverKey ProverKey::load_file(const std::string& path) {
  auto pk = from_bytes(read_file(path));
  if (!pk) throw std::runtime_error("malformed proving key file: " + path);
  return *pk;
}

Bytes VerifierKey::to_bytes() const {
  Bytes payload;
  if (backend == BackendId::kReal) {
    payload = g16.to_bytes();
  } else {
    payload.assign(mock_key.begin(), mock_key.end());
  }
  return key_envelope(KeyType::kVerifier, backend, mode, circuit_id, payload);
}

std::optional<VerifierKey> VerifierKey::from_bytes(const Bytes& data) {
  VerifierKey vk;
  Bytes payload;
  if (!parse_envelope(data, KeyType::kVerifier, vk.backend, vk.mode,
                      vk.circuit_id, payload)) {
    return std::nullopt;
  }
  if (vk.backend == BackendId::kReal) {
    auto g = Groth16VerifyingKey::from_bytes(payload);
    if (!g) return std::nullopt;
    vk.g16 = std::move(*g);
  } else {
    if (payload.size() != 32) return std::nullopt;
    std::memcpy(vk.mock_key.data(), payload.data(), 32);
  }
  return vk;
}

void VerifierKey::save_file(const std::string& path) const {
  write_file(path, to_bytes());
}

VerifierKey VerifierKey::load_file(const std::string& path) {
  auto vk = from_bytes(read_file(path));
  if (!vk) throw std::runtime_error("malformed verifying key file: " + path);
  return *vk;
}

BackendKeys backend_setup(
    BackendId backend, const PoseidonParams& params, ReplayMode mode,
    const std::optional<std::array<uint8_t, 32>>& seed) {
  if (seed) {
    std::fprintf(stderr,
                 "WARNING: seeded setup is deterministic and "
                 "INSECURE-FOR-PRODUCTION; use only for tests.\n");
  }
  Rng rng = seed ? Rng(*seed) : Rng();

  BackendKeys keys;
  keys.prover.backend = backend;
  keys.prover.mode = mode;
  keys.prover.circuit_id = circuit_id(params, mode);
  keys.verifier.backend = backend;
  keys.verifier.mode = mode;
  keys.verifier.circuit_id = keys.prover.circuit_id;

  if (backend == BackendId::kReal) {
    AuthCircuit circ = build_circuit(params, mode);
    Groth16KeyPair kp = groth16_setup(circ.cs, rng);
    keys.prover.g16 = std::move(kp.pk);
    keys.verifier.g16 = std::move(kp.vk);
  } else {
    rng.fill(keys.prover.mock_key.data(), keys.prover.mock_key.size());
    keys.verifier.mock_key = keys.prover.mock_key;
  }
  return keys;
}

AuthorizationProof backend_prove(const ProverKey& pk,
                                 const PoseidonParams& params,
                                 const AuthorizationWitness& witness,
                                 const PublicInputs& pub) {
  if (pk.circuit_id != circuit_id(params, pk.mode)) {
    throw std::invalid_argument("proving key circuit identifier mismatch");
  }
  if (!witness_consistent(params, pk.mode, witness, pub)) {
    throw std::invalid_argument("witness does not satisfy the statement");
  }
  AuthorizationProof proof;
  proof.backend = pk.backend;
  proof.circuit_id = pk.circuit_id;
  if (pk.backend == BackendId::kReal) {
    const AuthCircuit& circ = cached_circuit(pk, params);
    auto assignment = synthesize_assignment(params, pk.mode, witness, pub);
    Rng rng;
    Groth16Proof g = groth16_prove(pk.g16, circ.cs, assignment, rng);
    auto bytes = g.to_bytes();
    proof.proof_bytes.assign(bytes.begin(), bytes.end());
  } else {
    proof.proof_bytes = mock_mac(pk.mock_key, pk.circuit_id, pub);
  }
  return proof;
}

bool backend_verify(const VerifierKey& vk, const AuthorizationProof& proof,
                    const PublicInputs& pub) {
  if (proof.circuit_id != vk.circuit_id) return false;
  if (proof.backend != vk.backend) return false;
  if (vk.backend == BackendId::kReal) {
    auto g = Groth16Proof::from_bytes(proof.proof_bytes.data(),
                                      proof.proof_bytes.size());
    if (!g) return false;
    return groth16_verify(vk.g16, pub.as_vector(), *g);
  }
  Bytes expected = mock_mac(vk.mock_key, vk.circuit_id, pub);
  if (proof.proof_bytes.size() != expected.size()) return false;
  return sodium_memcmp(expected.data(), proof.proof_bytes.data(),
                       expected.size()) == 0;
}

bool backend_batch_verify(
    const VerifierKey& vk,
    const std::vector<std::pair<AuthorizationProof, PublicInputs>>& items,
    size_t* failing_index) {
  if (items.empty()) throw std::invalid_argument("empty batch");
  if (vk.backend == BackendId::kReal) {
    std::vector<std::pair<std::vector<Fr>, Groth16Proof>> g16_items;
    g16_items.reserve(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
      const auto& [proof, pub] = items[i];
      std::optional<Groth16Proof> g;
      if (proof.circuit_id == vk.circuit_id && proof.backend == vk.backend) {
        g = Groth16Proof::from_bytes(proof.proof_bytes.data(),
                                     proof.proof_bytes.size());
      }
      if (!g) {
        if (failing_index) *failing_index = i;
        return false;
      }
      g16_items.push_back({pub.as_vector(), *g});
    }
    Rng rng;
    return groth16_batch_verify(vk.g16, g16_items, rng, failing_index);
  }
  for (size_t i = 0; i < items.size(); ++i) {
    if (!backend_verify(vk, items[i].first, items[i].second)) {
      if (failing_index) *failing_index = i;
      return false;
    }
  }
  return true;
}

std::string ProofBundle::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["proof_b64"] = base64_encode(proof.proof_bytes);
  j["backend_id"] = backend_name(proof.backend);
  j["circuit_id"] = to_hex(proof.circuit_id.data(), proof.circuit_id.size());
  j["public_inputs"] = nlohmann::json::parse(pub.to_json(mode));
  j["payload_hex"] = to_hex(payload);
  return j.dump(2);
}

ProofBundle ProofBundle::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != 1) {
    throw std::invalid_argument("unsupported bundle version");
  }
  ProofBundle b;
  b.proof.proof_bytes = base64_decode(j.at("proof_b64").get<std::string>());
  auto be = backend_from_name(j.at("backend_id").get<std::string>());
  if (!be) throw std::invalid_argument("unknown backend id");
  b.proof.backend = *be;
  Bytes cid = from_hex(j.at("circuit_id").get<std::string>());
  if (cid.size() != 32) throw std::invalid_argument("bad circuit id");
  std::memcpy(b.proof.circuit_id.data(), cid.data(), 32);
  b.pub = PublicInputs::from_json(j.at("public_inputs").dump(), &b.mode);
  b.payload = from_hex(j.at("payload_hex").get<std::string>());
  return b;
}

}  // namespace zkace
