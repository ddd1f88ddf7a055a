// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "accounting/accounting.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace zkace {

namespace {

struct SchemeRow {
  const char* name;
  uint64_t sig_bytes;
  uint64_t pk_bytes;
};

// Fixed artifact sizes for the reference signature schemes. FN-DSA-512 and
// secp256k1 signatures are variable length; their typical sizes are used.
constexpr SchemeRow kSchemes[] = {
    {"ml-dsa-44", 2420, 1312},   {"ml-dsa-65", 3309, 1952},
    {"ml-dsa-87", 4627, 2592},   {"slh-dsa-128f", 17088, 32},
    {"fn-dsa-512", 666, 897},    {"ed25519", 64, 32},
    {"secp256k1", 71, 33},
};

}  // namespace

std::string ArtifactProfile::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["signature_or_proof_bytes"] = signature_or_proof_bytes;
  j["public_key_bytes"] = public_key_bytes;
  j["commitment_bytes"] = commitment_bytes;
  j["public_input_bytes"] = public_input_bytes;
  j["amortize_public_key"] = amortize_public_key;
  j["total_bytes"] = total_bytes();
  return j.dump(2);
}

std::vector<ArtifactProfile> builtin_profiles(bool amortize_public_key) {
  std::vector<ArtifactProfile> out;
  for (const SchemeRow& s : kSchemes) {
    ArtifactProfile p;
    p.name = s.name;
    p.signature_or_proof_bytes = s.sig_bytes;
    p.public_key_bytes = s.pk_bytes;
    p.amortize_public_key = amortize_public_key;
    out.push_back(p);
  }
  return out;
}

ArtifactProfile builtin_profile(const std::string& name,
                                bool amortize_public_key) {
  for (const ArtifactProfile& p : builtin_profiles(amortize_public_key)) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown signature profile: " + name);
}

ArtifactProfile zkace_profile(uint64_t measured_proof_bytes,
                              uint64_t public_input_count) {
  ArtifactProfile p;
  p.name = "zk-ace";
  p.signature_or_proof_bytes = measured_proof_bytes;
  p.commitment_bytes = 32;
  p.public_input_bytes = 32 * public_input_count;
  // No per-sender public key on chain; the commitment plays that role and
  // is already counted.
  p.public_key_bytes = 0;
  p.amortize_public_key = false;
  return p;
}

ReductionReport reduction_report(const ArtifactProfile& pqc,
                                 const ArtifactProfile& zk) {
  ReductionReport r;
  r.pqc = pqc;
  r.zk = zk;
  r.ratio = (double)pqc.total_bytes() / (double)zk.total_bytes();
  r.footnotes = {
      "(i) signature-side totals depend on whether the public key is "
      "amortized across transactions from the same sender; both variants "
      "are selectable via the amortization flag",
      "(ii) neither column accounts for chain-specific encoding overhead",
      "(iii) proof generation cost is borne off-chain by the prover and is "
      "not reflected in on-chain bytes",
  };
  return r;
}

std::string ReductionReport::to_json() const {
  nlohmann::json j;
  j["pqc"] = nlohmann::json::parse(pqc.to_json());
  j["zk"] = nlohmann::json::parse(zk.to_json());
  j["ratio"] = ratio;
  j["footnotes"] = footnotes;
  return j.dump(2);
}

std::string ReductionReport::to_table() const {
  std::ostringstream os;
  auto row = [&](const ArtifactProfile& p) {
    os << "  " << p.name;
    for (size_t i = p.name.size(); i < 16; ++i) os << ' ';
    os << p.signature_or_proof_bytes << " sig/proof B, "
       << (p.amortize_public_key ? 0 : p.public_key_bytes) << " pk B, "
       << p.commitment_bytes << " com B, " << p.public_input_bytes
       << " pub B  => " << p.total_bytes() << " B total\n";
  };
  os << "per-transaction authorization data\n";
  row(pqc);
  row(zk);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", ratio);
  os << "  reduction: " << buf << "x\n";
  for (const std::string& f : footnotes) os << "  note " << f << "\n";
  return os.str();
}

}  // namespace zkace
