// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "circuit/auth_circuit.hpp"

#include <json.hpp>
#include <stdexcept>

#include "core/sha256.hpp"

namespace zkace {

namespace {

// Builds constraints and, when an assignment vector is supplied, computes
// the value of every allocated wire along the way.
class Synthesizer {
 public:
  Synthesizer(ConstraintSystem& cs, std::vector<Fr>* assignment)
      : cs_(cs), assignment_(assignment) {}

  LinearCombination mul(const LinearCombination& a,
                        const LinearCombination& b) {
    VarIndex v = cs_.alloc_private();
    if (assignment_) {
      Fr val = a.evaluate(*assignment_) * b.evaluate(*assignment_);
      assignment_->push_back(val);
    }
    LinearCombination out = LinearCombination::variable(v);
    cs_.enforce(a, b, out);
    return out;
  }

  void enforce_equal(const LinearCombination& a, const LinearCombination& b) {
    cs_.enforce(a - b, LinearCombination::constant(Fr::one()),
                LinearCombination());
  }

  // x^17 via four squarings and one multiplication.
  LinearCombination sbox(const LinearCombination& x) {
    LinearCombination x2 = mul(x, x);
    LinearCombination x4 = mul(x2, x2);
    LinearCombination x8 = mul(x4, x4);
    LinearCombination x16 = mul(x8, x8);
    return mul(x16, x);
  }

  LinearCombination poseidon(const PoseidonParams& p,
                             const std::vector<LinearCombination>& inputs,
                             HashTag tag) {
    if (inputs.empty()) throw std::invalid_argument("gadget: empty input");
    LinearCombination state[3];
    state[2] =
        LinearCombination::constant(poseidon_capacity_iv(tag, inputs.size()));
    for (size_t i = 0; i < inputs.size(); i += PoseidonParams::kRate) {
      state[0] = state[0] + inputs[i];
      if (i + 1 < inputs.size()) state[1] = state[1] + inputs[i + 1];
      permute(p, state);
    }
    return state[0];
  }

 private:
  void permute(const PoseidonParams& p, LinearCombination state[3]) {
    constexpr uint32_t kHalfFull = PoseidonParams::kFullRounds / 2;
    uint32_t rc = 0;
    for (uint32_t r = 0; r < PoseidonParams::kTotalRounds; ++r) {
      bool full =
          r < kHalfFull || r >= kHalfFull + PoseidonParams::kPartialRounds;
      for (uint32_t i = 0; i < 3; ++i) {
        state[i] = state[i] + p.round_constants[rc++];
      }
      if (full) {
        for (uint32_t i = 0; i < 3; ++i) state[i] = sbox(state[i]);
      } else {
        state[0] = sbox(state[0]);
      }
      LinearCombination mixed[3];
      for (uint32_t i = 0; i < 3; ++i) {
        mixed[i] = state[0].scaled(p.mds[i][0]) + state[1].scaled(p.mds[i][1]) +
                   state[2].scaled(p.mds[i][2]);
      }
      for (uint32_t i = 0; i < 3; ++i) state[i] = std::move(mixed[i]);
    }
  }

  ConstraintSystem& cs_;
  std::vector<Fr>* assignment_;
};

// Shared synthesis path for building, counting and witness generation.
AuthCircuit synthesize(const PoseidonParams& params, ReplayMode mode,
                       const AuthorizationWitness* w, const PublicInputs* pub,
                       std::vector<Fr>* assignment) {
  AuthCircuit out;
  out.mode = mode;
  ConstraintSystem& cs = out.cs;
  if (assignment) assignment->assign(1, Fr::one());

  auto pub_var = [&](const Fr* value) {
    VarIndex v = cs.alloc_public();
    if (assignment) assignment->push_back(*value);
    return LinearCombination::variable(v);
  };
  auto priv_var = [&](const Fr* value) {
    VarIndex v = cs.alloc_private();
    if (assignment) assignment->push_back(value ? *value : Fr::zero());
    return LinearCombination::variable(v);
  };

  const Fr zero = Fr::zero();
  const Fr* pv = pub ? nullptr : &zero;
  LinearCombination id_com = pub_var(pub ? &pub->id_com : pv);
  LinearCombination tx_hash_in = pub_var(pub ? &pub->tx_hash : pv);
  LinearCombination domain = pub_var(pub ? &pub->domain : pv);
  LinearCombination target = pub_var(pub ? &pub->target : pv);
  LinearCombination rp_com = pub_var(pub ? &pub->rp_com : pv);

  LinearCombination rev = priv_var(w ? &w->rev : nullptr);
  LinearCombination salt = priv_var(w ? &w->salt : nullptr);
  LinearCombination alg_id = priv_var(w ? &w->ctx.alg_id : nullptr);
  LinearCombination ctx_domain = priv_var(w ? &w->ctx.ctx_domain : nullptr);
  LinearCombination index = priv_var(w ? &w->ctx.index : nullptr);
  LinearCombination nonce = priv_var(w ? &w->nonce : nullptr);

  Synthesizer syn(cs, assignment);
  ConstraintReport& rep = out.report;
  size_t mark = 0;
  auto take = [&](size_t& slot) {
    slot = cs.num_constraints() - mark;
    mark = cs.num_constraints();
  };

  // C1: commitment consistency.
  LinearCombination c1 = syn.poseidon(params, {rev, salt, domain}, HashTag::kC1);
  syn.enforce_equal(c1, id_com);
  take(rep.c1);

  // C2: derivation correctness, inner then outer hash.
  LinearCombination derived = syn.poseidon(
      params, {rev, alg_id, ctx_domain, index}, HashTag::kC2Inner);
  LinearCombination c2 = syn.poseidon(params, {derived}, HashTag::kC2Outer);
  syn.enforce_equal(c2, target);
  take(rep.c2);

  // C3: authorization token, internal wire only.
  LinearCombination auth = syn.poseidon(
      params, {rev, alg_id, ctx_domain, index, tx_hash_in, domain, nonce},
      HashTag::kC3);
  take(rep.c3);

  // C4: replay-prevention commitment. Both modes hash two elements, so
  // the synthesized shape (and count) is identical.
  LinearCombination c4 =
      mode == ReplayMode::kNonceRegistry
          ? syn.poseidon(params, {id_com, nonce}, HashTag::kC4)
          : syn.poseidon(params, {auth, domain}, HashTag::kC4);
  syn.enforce_equal(c4, rp_com);
  take(rep.c4);

  // C5: context-domain binding.
  syn.enforce_equal(ctx_domain, domain);
  take(rep.c5);

  rep.total = cs.num_constraints();
  rep.hash_invocations = 5;
  return out;
}

}  // namespace

const char* replay_mode_name(ReplayMode m) {
  return m == ReplayMode::kNonceRegistry ? "nonce" : "nullifier";
}

std::optional<ReplayMode> replay_mode_from_name(const std::string& s) {
  if (s == "nonce") return ReplayMode::kNonceRegistry;
  if (s == "nullifier") return ReplayMode::kNullifierSet;
  return std::nullopt;
}

std::string PublicInputs::to_json(ReplayMode mode) const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["mode"] = replay_mode_name(mode);
  j["id_com"] = id_com.to_hex();
  j["tx_hash"] = tx_hash.to_hex();
  j["domain"] = domain.to_hex();
  j["target"] = target.to_hex();
  j["rp_com"] = rp_com.to_hex();
  return j.dump();
}

PublicInputs PublicInputs::from_json(const std::string& text,
                                     ReplayMode* mode_out) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != 1) {
    throw std::invalid_argument("unsupported public-inputs version");
  }
  PublicInputs p;
  auto field = [&j](const char* name) {
    Fr f;
    if (!Fr::from_hex(j.at(name).get<std::string>(), f)) {
      throw std::invalid_argument(std::string("bad field element: ") + name);
    }
    return f;
  };
  p.id_com = field("id_com");
  p.tx_hash = field("tx_hash");
  p.domain = field("domain");
  p.target = field("target");
  p.rp_com = field("rp_com");
  if (mode_out) {
    auto m = replay_mode_from_name(j.at("mode").get<std::string>());
    if (!m) throw std::invalid_argument("unknown replay mode");
    *mode_out = *m;
  }
  return p;
}

std::string ConstraintReport::to_json(ReplayMode mode) const {
  nlohmann::json j;
  j["mode"] = replay_mode_name(mode);
  j["constraints"] = {{"C1", c1}, {"C2", c2}, {"C3", c3},
                      {"C4", c4}, {"C5", c5}};
  j["total"] = total;
  j["hash_invocations"] = hash_invocations;
  return j.dump(2);
}

AuthCircuit build_circuit(const PoseidonParams& params, ReplayMode mode) {
  return synthesize(params, mode, nullptr, nullptr, nullptr);
}

ConstraintReport count_constraints(const PoseidonParams& params,
                                   ReplayMode mode) {
  return build_circuit(params, mode).report;
}

std::vector<Fr> synthesize_assignment(const PoseidonParams& params,
                                      ReplayMode mode,
                                      const AuthorizationWitness& w,
                                      const PublicInputs& pub) {
  std::vector<Fr> assignment;
  synthesize(params, mode, &w, &pub, &assignment);
  return assignment;
}

std::pair<AuthorizationWitness, PublicInputs> make_statement(
    const PoseidonParams& params, const Fr& rev, const Fr& salt,
    const DerivationContext& ctx, const Fr& nonce, const Bytes& tx_payload,
    const Fr& domain, ReplayMode mode) {
  AuthorizationWitness w;
  w.rev = rev;
  w.salt = salt;
  w.ctx = ctx;
  w.nonce = nonce;

  PublicInputs pub;
  pub.domain = domain;
  pub.tx_hash = tx_hash(params, tx_payload);
  pub.id_com = poseidon_hash(params, {rev, salt, domain}, HashTag::kC1);
  Fr derived = poseidon_hash(params, {rev, ctx.alg_id, ctx.ctx_domain,
                                      ctx.index},
                             HashTag::kC2Inner);
  pub.target = poseidon_hash(params, {derived}, HashTag::kC2Outer);
  Fr auth = auth_token(params, rev, ctx, pub.tx_hash, domain, nonce);
  pub.rp_com = mode == ReplayMode::kNonceRegistry
                   ? poseidon_hash(params, {pub.id_com, nonce}, HashTag::kC4)
                   : poseidon_hash(params, {auth, domain}, HashTag::kC4);
  return {w, pub};
}

Fr auth_token(const PoseidonParams& params, const Fr& rev,
              const DerivationContext& ctx, const Fr& tx_hash_value,
              const Fr& domain, const Fr& nonce) {
  return poseidon_hash(params,
                       {rev, ctx.alg_id, ctx.ctx_domain, ctx.index,
                        tx_hash_value, domain, nonce},
                       HashTag::kC3);
}

std::array<uint8_t, 32> circuit_id(const PoseidonParams& params,
                                   ReplayMode mode) {
  AuthCircuit c = build_circuit(params, mode);
  Sha256 h;
  h.update("zkace-circuit-id");
  auto pd = params.digest();
  h.update(pd.data(), pd.size());
  uint8_t m = (uint8_t)mode;
  h.update(&m, 1);
  auto cd = c.cs.digest();
  h.update(cd.data(), cd.size());
  return h.finish();
}

}  // namespace zkace
