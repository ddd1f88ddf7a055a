// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "didp/didp.hpp"

#include <sodium.h>

#include <json.hpp>
#include <stdexcept>

namespace zkace {

RootEntropy::RootEntropy(const std::array<uint8_t, 32>& bytes)
    : bytes_(bytes) {}

RootEntropy::~RootEntropy() { sodium_memzero(bytes_.data(), bytes_.size()); }

RootEntropy RootEntropy::sample(Rng& rng) {
  std::array<uint8_t, 32> b;
  rng.fill(b.data(), b.size());
  return RootEntropy(b);
}

Fr RootEntropy::field() const {
  U256 v = U256::from_bytes_le(bytes_.data());
  return Fr::from_u256_reduce(v);
}

KdfParams KdfParams::production() {
  return {crypto_pwhash_OPSLIMIT_MODERATE, crypto_pwhash_MEMLIMIT_MODERATE};
}

KdfParams KdfParams::test() {
  return {crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN};
}

namespace {

std::array<uint8_t, 32> derive_key(const Bytes& credential,
                                   const std::array<uint8_t, 16>& salt,
                                   const KdfParams& cost) {
  std::array<uint8_t, 32> key;
  if (crypto_pwhash(key.data(), key.size(),
                    reinterpret_cast<const char*>(credential.data()),
                    credential.size(), salt.data(), cost.opslimit,
                    cost.memlimit, crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw std::runtime_error("key derivation failed (out of memory?)");
  }
  return key;
}

template <size_t N>
std::array<uint8_t, N> hex_field(const nlohmann::json& j, const char* name) {
  Bytes b = from_hex(j.at(name).get<std::string>());
  if (b.size() != N) {
    throw std::invalid_argument(std::string("bad length for ") + name);
  }
  std::array<uint8_t, N> out;
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

}  // namespace

std::string SealedArtifact::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["kdf_salt"] = to_hex(Bytes(kdf_salt.begin(), kdf_salt.end()));
  j["kdf_params"] = {{"opslimit", kdf_params.opslimit},
                     {"memlimit", kdf_params.memlimit}};
  j["nonce"] = to_hex(Bytes(nonce.begin(), nonce.end()));
  j["ciphertext"] = to_hex(Bytes(ciphertext.begin(), ciphertext.end()));
  j["tag"] = to_hex(Bytes(tag.begin(), tag.end()));
  return j.dump(2);
}

SealedArtifact SealedArtifact::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SealedArtifact a;
  a.version = j.at("version").get<uint32_t>();
  if (a.version != 1) throw std::invalid_argument("unsupported version");
  a.kdf_salt = hex_field<16>(j, "kdf_salt");
  a.kdf_params.opslimit = j.at("kdf_params").at("opslimit").get<uint64_t>();
  a.kdf_params.memlimit = j.at("kdf_params").at("memlimit").get<size_t>();
  a.nonce = hex_field<24>(j, "nonce");
  a.ciphertext = hex_field<32>(j, "ciphertext");
  a.tag = hex_field<16>(j, "tag");
  return a;
}

SealedArtifact seal(const RootEntropy& rev, const Bytes& credential,
                    const KdfParams& cost, Rng& rng) {
  if (credential.empty()) throw std::invalid_argument("empty credential");
  SealedArtifact a;
  a.kdf_params = cost;
  rng.fill(a.kdf_salt.data(), a.kdf_salt.size());
  rng.fill(a.nonce.data(), a.nonce.size());
  auto key = derive_key(credential, a.kdf_salt, cost);

  unsigned long long clen = 0;
  std::array<uint8_t, 48> combined;  // ciphertext || tag
  crypto_aead_xchacha20poly1305_ietf_encrypt(
      combined.data(), &clen, rev.bytes().data(), rev.bytes().size(), nullptr,
      0, nullptr, a.nonce.data(), key.data());
  sodium_memzero(key.data(), key.size());
  std::copy(combined.begin(), combined.begin() + 32, a.ciphertext.begin());
  std::copy(combined.begin() + 32, combined.end(), a.tag.begin());
  return a;
}

std::optional<RootEntropy> unseal(const SealedArtifact& artifact,
                                  const Bytes& credential) {
  if (credential.empty()) return std::nullopt;
  auto key = derive_key(credential, artifact.kdf_salt, artifact.kdf_params);
  std::array<uint8_t, 48> combined;
  std::copy(artifact.ciphertext.begin(), artifact.ciphertext.end(),
            combined.begin());
  std::copy(artifact.tag.begin(), artifact.tag.end(), combined.begin() + 32);
  std::array<uint8_t, 32> plain;
  unsigned long long plen = 0;
  int rc = crypto_aead_xchacha20poly1305_ietf_decrypt(
      plain.data(), &plen, nullptr, combined.data(), combined.size(), nullptr,
      0, artifact.nonce.data(), key.data());
  sodium_memzero(key.data(), key.size());
  if (rc != 0) return std::nullopt;
  RootEntropy rev(plain);
  sodium_memzero(plain.data(), plain.size());
  return rev;
}

Fr derive(const PoseidonParams& params, const RootEntropy& rev,
          const DerivationContext& ctx) {
  return poseidon_hash(params,
                       {rev.field(), ctx.alg_id, ctx.ctx_domain, ctx.index},
                       HashTag::kC2Inner);
}

Fr derive_target(const PoseidonParams& params, const RootEntropy& rev,
                 const DerivationContext& ctx) {
  return poseidon_hash(params, {derive(params, rev, ctx)}, HashTag::kC2Outer);
}

}  // namespace zkace
