// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "hash/poseidon.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "core/sha256.hpp"

namespace zkace {

namespace {
constexpr const char* kDefaultSeed = "zkace/poseidon/bn254/t3-a17/v1";

Fr sbox(const Fr& x) {
  // x^17 = ((x^2)^2)^2)^2 * x
  Fr x2 = x.square();
  Fr x4 = x2.square();
  Fr x8 = x4.square();
  Fr x16 = x8.square();
  return x16 * x;
}
}  // namespace

PoseidonParams PoseidonParams::generate(const std::string& seed,
                                        uint32_t version) {
  PoseidonParams p;
  p.version = version;
  const uint32_t n = kWidth * kTotalRounds;
  p.round_constants.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    auto h = Sha256().update(seed).update_u32_be(i).finish();
    U256 v = U256::from_bytes_be(h.data());
    p.round_constants.push_back(Fr::from_u256_reduce(v));
  }
  // Cauchy matrix over x_i = i, y_j = kWidth + j; pairwise-distinct
  // parameters make it invertible (in fact MDS).
  for (uint32_t i = 0; i < kWidth; ++i) {
    for (uint32_t j = 0; j < kWidth; ++j) {
      p.mds[i][j] = Fr::from_u64(i + kWidth + j).inverse();
    }
  }
  return p;
}

const PoseidonParams& PoseidonParams::default_params() {
  static const PoseidonParams p = generate(kDefaultSeed, 1);
  return p;
}

std::string PoseidonParams::to_json() const {
  nlohmann::json j;
  j["format_version"] = version;
  j["field"] = "bn254-fr";
  j["modulus"] = Fr::modulus().to_hex();
  j["width"] = kWidth;
  j["rate"] = kRate;
  j["alpha"] = kAlpha;
  j["full_rounds"] = kFullRounds;
  j["partial_rounds"] = kPartialRounds;
  nlohmann::json rc = nlohmann::json::array();
  for (const Fr& c : round_constants) rc.push_back(c.to_hex());
  j["round_constants"] = rc;
  nlohmann::json mdsj = nlohmann::json::array();
  for (uint32_t i = 0; i < kWidth; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (uint32_t jj = 0; jj < kWidth; ++jj) row.push_back(mds[i][jj].to_hex());
    mdsj.push_back(row);
  }
  j["mds"] = mdsj;
  return j.dump(2);
}

PoseidonParams PoseidonParams::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.at("width").get<uint32_t>() != kWidth ||
      j.at("rate").get<uint32_t>() != kRate ||
      j.at("alpha").get<uint32_t>() != kAlpha ||
      j.at("full_rounds").get<uint32_t>() != kFullRounds ||
      j.at("partial_rounds").get<uint32_t>() != kPartialRounds) {
    throw std::invalid_argument("unsupported poseidon parameter shape");
  }
  if (j.at("modulus").get<std::string>() != Fr::modulus().to_hex()) {
    throw std::invalid_argument("poseidon params use a different field");
  }
  PoseidonParams p;
  p.version = j.at("format_version").get<uint32_t>();
  for (const auto& c : j.at("round_constants")) {
    Fr f;
    if (!Fr::from_hex(c.get<std::string>(), f)) {
      throw std::invalid_argument("round constant out of field range");
    }
    p.round_constants.push_back(f);
  }
  if (p.round_constants.size() != kWidth * kTotalRounds) {
    throw std::invalid_argument("round constant table has wrong length");
  }
  const auto& mdsj = j.at("mds");
  if (mdsj.size() != kWidth) throw std::invalid_argument("bad mds shape");
  for (uint32_t i = 0; i < kWidth; ++i) {
    if (mdsj[i].size() != kWidth) throw std::invalid_argument("bad mds shape");
    for (uint32_t jj = 0; jj < kWidth; ++jj) {
      Fr f;
      if (!Fr::from_hex(mdsj[i][jj].get<std::string>(), f)) {
        throw std::invalid_argument("mds entry out of field range");
      }
      p.mds[i][jj] = f;
    }
  }
  if (!p.mds_invertible()) throw std::invalid_argument("mds not invertible");
  return p;
}

PoseidonParams PoseidonParams::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open hash params file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

void PoseidonParams::save_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write hash params file: " + path);
  f << to_json() << "\n";
}

std::array<uint8_t, 32> PoseidonParams::digest() const {
  Sha256 h;
  h.update("zkace-poseidon-table");
  h.update_u32_be(version);
  h.update_u32_be(kWidth);
  h.update_u32_be(kRate);
  h.update_u32_be(kAlpha);
  h.update_u32_be(kFullRounds);
  h.update_u32_be(kPartialRounds);
  for (const Fr& c : round_constants) {
    auto b = c.to_bytes_le();
    h.update(b.data(), b.size());
  }
  for (uint32_t i = 0; i < kWidth; ++i) {
    for (uint32_t j = 0; j < kWidth; ++j) {
      auto b = mds[i][j].to_bytes_le();
      h.update(b.data(), b.size());
    }
  }
  return h.finish();
}

bool PoseidonParams::mds_invertible() const {
  // 3x3 determinant.
  const Fr (&m)[3][3] = mds;
  Fr det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return !det.is_zero();
}

void poseidon_permute(const PoseidonParams& p, Fr state[3]) {
  constexpr uint32_t kHalfFull = PoseidonParams::kFullRounds / 2;
  uint32_t rc = 0;
  auto mix = [&p](Fr s[3]) {
    Fr out[3];
    for (uint32_t i = 0; i < 3; ++i) {
      out[i] = p.mds[i][0] * s[0] + p.mds[i][1] * s[1] + p.mds[i][2] * s[2];
    }
    s[0] = out[0];
    s[1] = out[1];
    s[2] = out[2];
  };
  for (uint32_t r = 0; r < PoseidonParams::kTotalRounds; ++r) {
    bool full = r < kHalfFull ||
                r >= kHalfFull + PoseidonParams::kPartialRounds;
    for (uint32_t i = 0; i < 3; ++i) state[i] += p.round_constants[rc++];
    if (full) {
      for (uint32_t i = 0; i < 3; ++i) state[i] = sbox(state[i]);
    } else {
      state[0] = sbox(state[0]);
    }
    mix(state);
  }
}

Fr poseidon_capacity_iv(HashTag tag, size_t arity) {
  // tag in the low byte, arity above it; fixes both the use site and
  // the input length so padding cannot alias across arities.
  return Fr::from_u64((uint64_t)tag | ((uint64_t)arity << 8));
}

Fr poseidon_hash(const PoseidonParams& p, const std::vector<Fr>& inputs,
                 HashTag tag) {
  if (inputs.empty()) throw std::invalid_argument("poseidon_hash: empty input");
  Fr state[3] = {Fr::zero(), Fr::zero(),
                 poseidon_capacity_iv(tag, inputs.size())};
  for (size_t i = 0; i < inputs.size(); i += PoseidonParams::kRate) {
    state[0] += inputs[i];
    if (i + 1 < inputs.size()) state[1] += inputs[i + 1];
    poseidon_permute(p, state);
  }
  return state[0];
}

std::vector<Fr> pack_bytes(const Bytes& payload) {
  if (payload.size() >= (1ULL << 32)) {
    throw std::invalid_argument("payload too large");
  }
  std::vector<Fr> out;
  out.push_back(Fr::from_u64(payload.size()));
  for (size_t off = 0; off < payload.size(); off += 31) {
    size_t n = std::min<size_t>(31, payload.size() - off);
    uint8_t chunk[32] = {0};
    // Big-endian chunk value, strictly below 2^248 < r.
    for (size_t i = 0; i < n; ++i) chunk[32 - n + i] = payload[off + i];
    Fr f;
    if (!Fr::from_bytes_le(U256::from_bytes_be(chunk).to_bytes_le().data(), f)) {
      throw std::logic_error("31-byte chunk exceeded field modulus");
    }
    out.push_back(f);
  }
  return out;
}

Fr tx_hash(const PoseidonParams& p, const Bytes& payload) {
  return poseidon_hash(p, pack_bytes(payload), HashTag::kTx);
}

Fr domain_element(const PoseidonParams& p, const std::string& descriptor) {
  Bytes b(descriptor.begin(), descriptor.end());
  return poseidon_hash(p, pack_bytes(b), HashTag::kDomain);
}

}  // namespace zkace
