// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "zkace/zkace.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "accounting/accounting.hpp"
#include "bench/bench.hpp"
#include "chain/chain.hpp"
#include "didp/didp.hpp"
#include "games/games.hpp"
#include "groth16/groth16.hpp"

using namespace zkace;

struct zkace_ctx {
  PoseidonParams params = PoseidonParams::default_params();
  std::string last_error = "ok";
};

namespace {

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(zkace_ctx* ctx, int code, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return code;
}

// Maps C++ exceptions from the core onto API error codes.
template <typename F>
int guarded(zkace_ctx* ctx, F&& fn) {
  if (!ctx) return ZKACE_ERR_INVALID_ARGUMENT;
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    return fail(ctx, ZKACE_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, ZKACE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(ctx, ZKACE_ERR_STATE, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, ZKACE_ERR_INTERNAL, e.what());
  }
}

ReplayMode parse_mode(const char* mode) {
  auto m = replay_mode_from_name(mode ? mode : "");
  if (!m) throw std::invalid_argument("mode must be nonce or nullifier");
  return *m;
}

BackendId parse_backend(const char* backend) {
  auto b = backend_from_name(backend ? backend : "");
  if (!b) throw std::invalid_argument("backend must be real or mock");
  return *b;
}

std::optional<std::array<uint8_t, 32>> parse_seed(const char* seed_hex) {
  if (!seed_hex) return std::nullopt;
  Bytes raw = from_hex(seed_hex);
  if (raw.size() != 32) {
    throw std::invalid_argument("seed must be 64 hex characters");
  }
  std::array<uint8_t, 32> seed{};
  std::copy(raw.begin(), raw.end(), seed.begin());
  return seed;
}

Fr parse_fr_hex(const char* hex, const char* what) {
  Fr v;
  if (!hex || !Fr::from_hex(hex, v)) {
    throw std::invalid_argument(std::string("bad field element: ") + what);
  }
  return v;
}

Bytes to_bytes(const uint8_t* data, size_t len) {
  if (!data && len > 0) throw std::invalid_argument("null buffer");
  return Bytes(data, data + len);
}

RootEntropy unseal_or_throw(const char* sealed_json,
                            const uint8_t* credential, size_t credential_len,
                            bool* auth_failed) {
  SealedArtifact artifact = SealedArtifact::from_json(sealed_json);
  auto rev = unseal(artifact, to_bytes(credential, credential_len));
  if (!rev) {
    *auth_failed = true;
    throw std::runtime_error("credential rejected");
  }
  return *rev;
}

}  // namespace

extern "C" {

zkace_ctx* zkace_ctx_new(void) { return new zkace_ctx(); }

void zkace_ctx_free(zkace_ctx* ctx) { delete ctx; }

const char* zkace_version(void) { return "1.0.0"; }

const char* zkace_last_error(const zkace_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void zkace_string_free(char* s) { std::free(s); }

int zkace_ctx_set_hash_params_file(zkace_ctx* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) throw std::invalid_argument("null path");
    ctx->params = PoseidonParams::load_file(path);
    return ZKACE_OK;
  });
}

int zkace_constraints(zkace_ctx* ctx, const char* mode, char** json_out) {
  return guarded(ctx, [&] {
    if (!json_out) throw std::invalid_argument("null output");
    ReplayMode m = parse_mode(mode);
    *json_out = dup_string(count_constraints(ctx->params, m).to_json(m));
    return ZKACE_OK;
  });
}

int zkace_identity_new(zkace_ctx* ctx, const uint8_t* credential,
                       size_t credential_len, const char* profile,
                       char** sealed_json_out) {
  return guarded(ctx, [&] {
    if (!sealed_json_out) throw std::invalid_argument("null output");
    std::string prof = profile ? profile : "test";
    KdfParams cost;
    if (prof == "test") {
      cost = KdfParams::test();
    } else if (prof == "production") {
      cost = KdfParams::production();
    } else {
      throw std::invalid_argument("profile must be test or production");
    }
    Rng rng;
    RootEntropy rev = RootEntropy::sample(rng);
    SealedArtifact artifact =
        seal(rev, to_bytes(credential, credential_len), cost, rng);
    *sealed_json_out = dup_string(artifact.to_json());
    return ZKACE_OK;
  });
}

int zkace_identity_commit(zkace_ctx* ctx, const char* sealed_json,
                          const uint8_t* credential, size_t credential_len,
                          const char* domain_descriptor, const char* salt_hex,
                          char** commit_json_out) {
  bool auth_failed = false;
  int rc = guarded(ctx, [&] {
    if (!sealed_json || !domain_descriptor || !commit_json_out) {
      throw std::invalid_argument("null argument");
    }
    RootEntropy rev = unseal_or_throw(sealed_json, credential,
                                      credential_len, &auth_failed);
    Fr salt;
    if (salt_hex) {
      salt = parse_fr_hex(salt_hex, "salt");
    } else {
      Rng rng;
      salt = rng.next_fr();
    }
    Fr domain = domain_element(ctx->params, domain_descriptor);
    Fr id_com = poseidon_hash(ctx->params, {rev.field(), salt, domain},
                              HashTag::kC1);
    nlohmann::json j;
    j["id_com"] = id_com.to_hex();
    j["salt"] = salt.to_hex();
    j["domain"] = domain.to_hex();
    j["domain_descriptor"] = domain_descriptor;
    *commit_json_out = dup_string(j.dump(2));
    return ZKACE_OK;
  });
  return auth_failed ? ZKACE_ERR_AUTH : rc;
}

int zkace_setup(zkace_ctx* ctx, const char* backend, const char* mode,
                const char* seed_hex, const char* prover_key_path,
                const char* verifier_key_path) {
  return guarded(ctx, [&] {
    if (!prover_key_path || !verifier_key_path) {
      throw std::invalid_argument("null key path");
    }
    BackendKeys keys = backend_setup(parse_backend(backend), ctx->params,
                                     parse_mode(mode), parse_seed(seed_hex));
    keys.prover.save_file(prover_key_path);
    keys.verifier.save_file(verifier_key_path);
    return ZKACE_OK;
  });
}

int zkace_prove(zkace_ctx* ctx, const char* prover_key_path,
                const char* sealed_json, const uint8_t* credential,
                size_t credential_len, const char* salt_hex,
                const char* domain_descriptor, uint64_t alg_id,
                uint64_t index, uint64_t nonce, const uint8_t* payload,
                size_t payload_len, char** bundle_json_out,
                char** witness_json_out) {
  bool auth_failed = false;
  int rc = guarded(ctx, [&] {
    if (!prover_key_path || !sealed_json || !domain_descriptor ||
        !bundle_json_out) {
      throw std::invalid_argument("null argument");
    }
    ProverKey pk = ProverKey::load_file(prover_key_path);
    RootEntropy rev = unseal_or_throw(sealed_json, credential,
                                      credential_len, &auth_failed);
    Fr salt = parse_fr_hex(salt_hex, "salt");
    Fr domain = domain_element(ctx->params, domain_descriptor);
    DerivationContext dctx{Fr::from_u64(alg_id), domain,
                           Fr::from_u64(index)};
    Bytes pl = to_bytes(payload, payload_len);
    auto [w, pub] =
        make_statement(ctx->params, rev.field(), salt, dctx,
                       Fr::from_u64(nonce), pl, domain, pk.mode);

    ProofBundle bundle;
    bundle.proof = backend_prove(pk, ctx->params, w, pub);
    bundle.pub = pub;
    bundle.mode = pk.mode;
    bundle.payload = pl;
    *bundle_json_out = dup_string(bundle.to_json());

    if (witness_json_out) {
      // Test-vector escape hatch: private witness in clear text.
      nlohmann::json j;
      j["INSECURE"] = true;
      j["rev"] = w.rev.to_hex();
      j["salt"] = w.salt.to_hex();
      j["alg_id"] = w.ctx.alg_id.to_hex();
      j["ctx_domain"] = w.ctx.ctx_domain.to_hex();
      j["index"] = w.ctx.index.to_hex();
      j["nonce"] = w.nonce.to_hex();
      *witness_json_out = dup_string(j.dump(2));
    }
    return ZKACE_OK;
  });
  return auth_failed ? ZKACE_ERR_AUTH : rc;
}

int zkace_verify(zkace_ctx* ctx, const char* verifier_key_path,
                 const char* bundle_json) {
  return guarded(ctx, [&] {
    if (!verifier_key_path || !bundle_json) {
      throw std::invalid_argument("null argument");
    }
    VerifierKey vk = VerifierKey::load_file(verifier_key_path);
    ProofBundle bundle = ProofBundle::from_json(bundle_json);
    if (!backend_verify(vk, bundle.proof, bundle.pub)) {
      return fail(ctx, ZKACE_ERR_VERIFY, "proof rejected");
    }
    return ZKACE_OK;
  });
}

int zkace_chain_init(zkace_ctx* ctx, const char* mode,
                     const char* domain_descriptor,
                     const char* verifier_key_path, int production,
                     const char* state_path) {
  return guarded(ctx, [&] {
    if (!domain_descriptor || !verifier_key_path || !state_path) {
      throw std::invalid_argument("null argument");
    }
    ChainState chain(parse_mode(mode),
                     domain_element(ctx->params, domain_descriptor),
                     VerifierKey::load_file(verifier_key_path),
                     production != 0);
    chain.save_file(state_path);
    return ZKACE_OK;
  });
}

int zkace_chain_register(zkace_ctx* ctx, const char* state_path,
                         const char* id_com_hex) {
  return guarded(ctx, [&] {
    if (!state_path) throw std::invalid_argument("null state path");
    ChainState chain = ChainState::load_file(state_path);
    chain.register_identity(parse_fr_hex(id_com_hex, "id_com"));
    chain.save_file(state_path);
    return ZKACE_OK;
  });
}

int zkace_chain_submit(zkace_ctx* ctx, const char* state_path,
                       const char* bundle_json, char** result_json_out) {
  return guarded(ctx, [&] {
    if (!state_path || !bundle_json) {
      throw std::invalid_argument("null argument");
    }
    ChainState chain = ChainState::load_file(state_path);
    SubmittedTx tx =
        SubmittedTx::from_bundle(ProofBundle::from_json(bundle_json));
    TxResult r = chain.process_tx(ctx->params, tx);
    chain.save_file(state_path);
    nlohmann::json j;
    j["accepted"] = r.accepted;
    j["reason"] = reject_reason_name(r.reason);
    j["height"] = chain.height();
    if (result_json_out) *result_json_out = dup_string(j.dump(2));
    if (!r.accepted) {
      return fail(ctx, ZKACE_ERR_REJECTED,
                  std::string("transaction rejected: ") +
                      reject_reason_name(r.reason));
    }
    return ZKACE_OK;
  });
}

int zkace_chain_batch(zkace_ctx* ctx, const char* state_path,
                      const char* bundles_json, char** results_json_out) {
  return guarded(ctx, [&] {
    if (!state_path || !bundles_json) {
      throw std::invalid_argument("null argument");
    }
    nlohmann::json arr = nlohmann::json::parse(bundles_json);
    if (!arr.is_array()) {
      throw std::invalid_argument("expected a JSON array of bundles");
    }
    std::vector<SubmittedTx> txs;
    for (const auto& e : arr) {
      txs.push_back(SubmittedTx::from_bundle(ProofBundle::from_json(
          e.is_string() ? e.get<std::string>() : e.dump())));
    }
    ChainState chain = ChainState::load_file(state_path);
    std::vector<TxResult> results = chain.process_batch(ctx->params, txs);
    chain.save_file(state_path);
    nlohmann::json out = nlohmann::json::array();
    for (const TxResult& r : results) {
      out.push_back({{"accepted", r.accepted},
                     {"reason", reject_reason_name(r.reason)}});
    }
    if (results_json_out) *results_json_out = dup_string(out.dump(2));
    return ZKACE_OK;
  });
}

int zkace_chain_status(zkace_ctx* ctx, const char* state_path,
                       char** status_json_out) {
  return guarded(ctx, [&] {
    if (!state_path || !status_json_out) {
      throw std::invalid_argument("null argument");
    }
    ChainState chain = ChainState::load_file(state_path);
    *status_json_out = dup_string(chain.status_json());
    return ZKACE_OK;
  });
}

int zkace_games_run(zkace_ctx* ctx, const char* game, uint64_t trials,
                    const char* mode, const char* seed_hex,
                    char** report_json_out) {
  return guarded(ctx, [&] {
    if (!game || !report_json_out) {
      throw std::invalid_argument("null argument");
    }
    ReplayMode m = parse_mode(mode);
    auto seed = parse_seed(seed_hex);
    Rng rng = seed ? Rng(*seed) : Rng();
    std::array<uint8_t, 32> key_seed{};
    rng.fill(key_seed.data(), key_seed.size());
    BackendKeys real =
        backend_setup(BackendId::kReal, ctx->params, m, key_seed);
    key_seed[0] ^= 1;
    BackendKeys mock =
        backend_setup(BackendId::kMock, ctx->params, m, key_seed);

    std::string name = game;
    std::vector<GameResult> results;
    if (name == "auth" || name == "all") {
      results.push_back(
          game_auth(ctx->params, real, mock, m, trials, rng));
    }
    if (name == "replay" || name == "all") {
      results.push_back(game_replay(ctx->params, real, m, trials, rng));
    }
    if (name == "subst" || name == "all") {
      results.push_back(game_subst(ctx->params, real, m, trials, rng));
    }
    if (name == "domain" || name == "all") {
      results.push_back(game_domain(ctx->params, real, m, trials, rng));
    }
    if (results.empty()) {
      throw std::invalid_argument(
          "game must be auth, replay, subst, domain or all");
    }

    bool passed = true;
    if (results.size() == 1) {
      passed = results[0].passed();
      *report_json_out = dup_string(results[0].to_json());
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const GameResult& r : results) {
        passed = passed && r.passed();
        arr.push_back(nlohmann::json::parse(r.to_json()));
      }
      *report_json_out = dup_string(arr.dump(2));
    }
    if (!passed) {
      return fail(ctx, ZKACE_ERR_VERIFY,
                  "adversary win or control failure recorded");
    }
    return ZKACE_OK;
  });
}

int zkace_accounting(zkace_ctx* ctx, const char* pqc_name,
                     const char* zk_profile, int amortize_public_key,
                     const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!pqc_name || !out) throw std::invalid_argument("null argument");
    std::string zk = zk_profile ? zk_profile : "measured";
    uint64_t proof_bytes;
    if (zk == "measured") {
      proof_bytes = Groth16Proof::kByteSize;
    } else if (zk == "groth16-class") {
      proof_bytes = 128;
    } else {
      throw std::invalid_argument(
          "zk profile must be measured or groth16-class");
    }
    PublicInputs pub{};
    ReductionReport report = reduction_report(
        builtin_profile(pqc_name, amortize_public_key != 0),
        zkace_profile(proof_bytes, pub.as_vector().size()));
    std::string fmt = format ? format : "json";
    if (fmt == "json") {
      *out = dup_string(report.to_json());
    } else if (fmt == "table") {
      *out = dup_string(report.to_table());
    } else {
      throw std::invalid_argument("format must be json or table");
    }
    return ZKACE_OK;
  });
}

int zkace_bench(zkace_ctx* ctx, const char* config_json, const char* format,
                char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("null argument");
    BenchConfig cfg;
    if (config_json) {
      nlohmann::json j = nlohmann::json::parse(config_json);
      cfg.iterations = j.value("iterations", cfg.iterations);
      cfg.batch_size = j.value("batch_size", cfg.batch_size);
      cfg.pipeline_txs = j.value("pipeline_txs", cfg.pipeline_txs);
      cfg.include_setup = j.value("include_setup", cfg.include_setup);
      cfg.parallel = j.value("parallel", cfg.parallel);
      if (j.contains("mode")) {
        cfg.mode = parse_mode(j["mode"].get<std::string>().c_str());
      }
      if (j.contains("seed_hex")) {
        auto seed = parse_seed(j["seed_hex"].get<std::string>().c_str());
        if (seed) cfg.seed = *seed;
      }
    }
    if (cfg.iterations == 0) {
      throw std::invalid_argument("iterations must be positive");
    }
    BenchReport report = run_bench(ctx->params, cfg);
    std::string fmt = format ? format : "json";
    if (fmt == "json") {
      *out = dup_string(report.to_json());
    } else if (fmt == "table") {
      *out = dup_string(report.to_table());
    } else {
      throw std::invalid_argument("format must be json or table");
    }
    return ZKACE_OK;
  });
}

}  // extern "C"
