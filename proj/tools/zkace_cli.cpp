// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Links only against the public C interface.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zkace/zkace.h"

namespace {

constexpr int kExitUsage = 64;  // bad invocation, distinct from API codes

struct Ctx {
  zkace_ctx* c = zkace_ctx_new();
  ~Ctx() { zkace_ctx_free(c); }
};

struct Str {
  char* s = nullptr;
  ~Str() { zkace_string_free(s); }
};

[[noreturn]] void die(const Ctx& ctx, int code) {
  std::fprintf(stderr, "{\"error\": %d, \"message\": \"%s\"}\n", code,
               zkace_last_error(ctx.c));
  std::exit(code);
}

void check(const Ctx& ctx, int code) {
  if (code != ZKACE_OK) die(ctx, code);
}

std::string read_file(const Ctx& ctx, const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::fprintf(stderr,
                 "{\"error\": %d, \"message\": \"cannot read %s\"}\n",
                 ZKACE_ERR_IO, path.c_str());
    std::exit(ZKACE_ERR_IO);
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) {
    std::fprintf(stderr,
                 "{\"error\": %d, \"message\": \"cannot write %s\"}\n",
                 ZKACE_ERR_IO, path.c_str());
    std::exit(ZKACE_ERR_IO);
  }
  f << text << "\n";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::printf("%s\n", text.c_str());
  } else {
    write_file(out_path, text);
  }
}

std::vector<uint8_t> parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) {
    std::fprintf(stderr,
                 "{\"error\": %d, \"message\": \"odd-length hex\"}\n",
                 ZKACE_ERR_INVALID_ARGUMENT);
    std::exit(ZKACE_ERR_INVALID_ARGUMENT);
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::vector<uint8_t> out;
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      std::fprintf(stderr,
                   "{\"error\": %d, \"message\": \"bad hex digit\"}\n",
                   ZKACE_ERR_INVALID_ARGUMENT);
      std::exit(ZKACE_ERR_INVALID_ARGUMENT);
    }
    out.push_back((uint8_t)((hi << 4) | lo));
  }
  return out;
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;

  std::string profile = env_or("ZKACE_PROFILE", "test");
  if (profile != "test" && profile != "production") {
    std::fprintf(
        stderr,
        "{\"error\": %d, \"message\": \"ZKACE_PROFILE must be test or "
        "production\"}\n",
        ZKACE_ERR_INVALID_ARGUMENT);
    return ZKACE_ERR_INVALID_ARGUMENT;
  }
  std::string params_path = env_or("ZKACE_HASH_PARAMS", "");
  if (!params_path.empty()) {
    check(ctx, zkace_ctx_set_hash_params_file(ctx.c, params_path.c_str()));
  }

  CLI::App app{"zkace: zero-knowledge authorization layer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", zkace_version());

  // ------------------------------------------------------------ identity
  auto* identity = app.add_subcommand("identity", "identity management");
  identity->require_subcommand(1);

  std::string credential, out_path, sealed_path, domain, salt_hex;
  auto* id_new = identity->add_subcommand("new", "sample and seal a root");
  id_new->add_option("--credential", credential, "sealing credential")
      ->required();
  id_new->add_option("--out", out_path, "sealed artifact path (default: stdout)");
  id_new->callback([&] {
    Str sealed;
    check(ctx, zkace_identity_new(
                   ctx.c, (const uint8_t*)credential.data(),
                   credential.size(), profile.c_str(), &sealed.s));
    emit(sealed.s, out_path);
  });

  auto* id_commit =
      identity->add_subcommand("commit", "derive an identity commitment");
  id_commit->add_option("--sealed", sealed_path, "sealed artifact file")
      ->required();
  id_commit->add_option("--credential", credential, "sealing credential")
      ->required();
  id_commit->add_option("--domain", domain, "domain descriptor")->required();
  id_commit->add_option("--salt", salt_hex, "salt (hex; default random)");
  id_commit->add_option("--out", out_path, "output path (default: stdout)");
  id_commit->callback([&] {
    std::string sealed = read_file(ctx, sealed_path);
    Str commit;
    check(ctx, zkace_identity_commit(
                   ctx.c, sealed.c_str(), (const uint8_t*)credential.data(),
                   credential.size(), domain.c_str(),
                   salt_hex.empty() ? nullptr : salt_hex.c_str(),
                   &commit.s));
    emit(commit.s, out_path);
  });

  // --------------------------------------------------------------- setup
  std::string backend = "real", mode = "nonce", seed_hex, pk_path, vk_path;
  auto* setup = app.add_subcommand("setup", "generate a key pair");
  setup->add_option("--backend", backend, "real|mock");
  setup->add_option("--mode", mode, "nonce|nullifier");
  setup->add_option("--seed", seed_hex, "64-hex seed (INSECURE, tests only)");
  setup->add_option("--pk", pk_path, "prover key output")->required();
  setup->add_option("--vk", vk_path, "verifier key output")->required();
  setup->callback([&] {
    check(ctx, zkace_setup(ctx.c, backend.c_str(), mode.c_str(),
                           seed_hex.empty() ? nullptr : seed_hex.c_str(),
                           pk_path.c_str(), vk_path.c_str()));
  });

  // --------------------------------------------------------------- prove
  uint64_t alg_id = 1, index = 0, nonce = 0;
  std::string payload_hex, witness_path;
  auto* prove = app.add_subcommand("prove", "prove one authorization");
  prove->add_option("--pk", pk_path, "prover key")->required();
  prove->add_option("--sealed", sealed_path, "sealed artifact")->required();
  prove->add_option("--credential", credential, "credential")->required();
  prove->add_option("--salt", salt_hex, "identity salt (hex)")->required();
  prove->add_option("--domain", domain, "domain descriptor")->required();
  prove->add_option("--alg-id", alg_id, "derivation algorithm id");
  prove->add_option("--index", index, "derivation index");
  prove->add_option("--nonce", nonce, "authorization nonce");
  prove->add_option("--payload", payload_hex, "payload (hex)")->required();
  prove->add_option("--out", out_path, "bundle path (default: stdout)");
  prove->add_option("--dump-witness-INSECURE", witness_path,
                    "write the private witness to this file (test vectors "
                    "only; leaks the root entropy)");
  prove->callback([&] {
    std::string sealed = read_file(ctx, sealed_path);
    std::vector<uint8_t> payload = parse_hex(payload_hex);
    Str bundle, witness;
    check(ctx,
          zkace_prove(ctx.c, pk_path.c_str(), sealed.c_str(),
                      (const uint8_t*)credential.data(), credential.size(),
                      salt_hex.c_str(), domain.c_str(), alg_id, index, nonce,
                      payload.data(), payload.size(), &bundle.s,
                      witness_path.empty() ? nullptr : &witness.s));
    emit(bundle.s, out_path);
    if (!witness_path.empty()) write_file(witness_path, witness.s);
  });

  // -------------------------------------------------------------- verify
  std::string bundle_path;
  auto* verify = app.add_subcommand("verify", "verify a proof bundle");
  verify->add_option("--vk", vk_path, "verifier key")->required();
  verify->add_option("--bundle", bundle_path, "proof bundle")->required();
  verify->callback([&] {
    std::string bundle = read_file(ctx, bundle_path);
    check(ctx, zkace_verify(ctx.c, vk_path.c_str(), bundle.c_str()));
    std::printf("{\"verified\": true}\n");
  });

  // --------------------------------------------------------------- chain
  auto* chain = app.add_subcommand("chain", "verifier-side state machine");
  chain->require_subcommand(1);
  std::string state_path, id_com_hex, bundles_path;

  auto* cinit = chain->add_subcommand("init", "create a chain state file");
  cinit->add_option("--mode", mode, "nonce|nullifier");
  cinit->add_option("--domain", domain, "expected domain descriptor")
      ->required();
  cinit->add_option("--vk", vk_path, "verifier key")->required();
  cinit->add_option("--state", state_path, "state file")->required();
  cinit->callback([&] {
    check(ctx, zkace_chain_init(ctx.c, mode.c_str(), domain.c_str(),
                                vk_path.c_str(), profile == "production",
                                state_path.c_str()));
  });

  auto* creg =
      chain->add_subcommand("register", "register an identity commitment");
  creg->add_option("--state", state_path, "state file")->required();
  creg->add_option("--id-com", id_com_hex, "identity commitment (hex)")
      ->required();
  creg->callback([&] {
    check(ctx, zkace_chain_register(ctx.c, state_path.c_str(),
                                    id_com_hex.c_str()));
  });

  auto* csubmit = chain->add_subcommand("submit", "submit one bundle");
  csubmit->add_option("--state", state_path, "state file")->required();
  csubmit->add_option("--bundle", bundle_path, "proof bundle")->required();
  csubmit->callback([&] {
    std::string bundle = read_file(ctx, bundle_path);
    Str result;
    int rc = zkace_chain_submit(ctx.c, state_path.c_str(), bundle.c_str(),
                                &result.s);
    if (result.s) std::printf("%s\n", result.s);
    if (rc != ZKACE_OK) die(ctx, rc);
  });

  auto* cbatch = chain->add_subcommand("batch", "submit a bundle array");
  cbatch->add_option("--state", state_path, "state file")->required();
  cbatch->add_option("--bundles", bundles_path, "JSON array of bundles")
      ->required();
  cbatch->callback([&] {
    std::string bundles = read_file(ctx, bundles_path);
    Str results;
    check(ctx, zkace_chain_batch(ctx.c, state_path.c_str(), bundles.c_str(),
                                 &results.s));
    std::printf("%s\n", results.s);
  });

  auto* cstatus = chain->add_subcommand("status", "report chain state");
  cstatus->add_option("--state", state_path, "state file")->required();
  cstatus->callback([&] {
    Str status;
    check(ctx, zkace_chain_status(ctx.c, state_path.c_str(), &status.s));
    std::printf("%s\n", status.s);
  });

  // --------------------------------------------------------------- games
  auto* games = app.add_subcommand("games", "adversarial harness");
  games->require_subcommand(1);
  std::string game = "all";
  uint64_t trials = 100;
  auto* grun = games->add_subcommand("run", "run a falsification campaign");
  grun->add_option("--game", game, "auth|replay|subst|domain|all");
  grun->add_option("--trials", trials, "trials per game");
  grun->add_option("--mode", mode, "nonce|nullifier");
  grun->add_option("--seed", seed_hex, "64-hex seed for reproducibility");
  grun->callback([&] {
    Str report;
    int rc = zkace_games_run(ctx.c, game.c_str(), trials, mode.c_str(),
                             seed_hex.empty() ? nullptr : seed_hex.c_str(),
                             &report.s);
    if (report.s) std::printf("%s\n", report.s);
    if (rc != ZKACE_OK) die(ctx, rc);
  });

  // ---------------------------------------------------------- accounting
  std::string pqc = "ml-dsa-44", zk = "measured", format = "table";
  bool amortize = false;
  auto* acct = app.add_subcommand("accounting", "on-chain data accounting");
  acct->add_option("--pqc", pqc, "signature profile name");
  acct->add_option("--zk", zk, "measured|groth16-class");
  acct->add_flag("--amortize", amortize, "amortize the signer public key");
  acct->add_option("--format", format, "table|json");
  acct->callback([&] {
    Str out;
    check(ctx, zkace_accounting(ctx.c, pqc.c_str(), zk.c_str(),
                                amortize ? 1 : 0, format.c_str(), &out.s));
    std::printf("%s\n", out.s);
  });

  // --------------------------------------------------------------- bench
  uint64_t iterations = 20, pipeline_txs = 2000, batch_size = 16;
  bool no_setup = false, parallel = false;
  auto* bench = app.add_subcommand("bench", "benchmark suite");
  bench->add_option("--iterations", iterations, "warm iterations per op");
  bench->add_option("--pipeline-txs", pipeline_txs, "mock pipeline size");
  bench->add_option("--batch-size", batch_size, "batch-verify size");
  bench->add_option("--mode", mode, "nonce|nullifier");
  bench->add_option("--seed", seed_hex, "64-hex seed");
  bench->add_flag("--no-setup", no_setup, "skip the setup measurement");
  bench->add_flag("--parallel", parallel,
                  "also measure multi-threaded verification (reported "
                  "separately)");
  bench->add_option("--format", format, "table|json");
  bench->add_option("--out", out_path, "report path (default: stdout)");
  bench->callback([&] {
    std::ostringstream cfg;
    cfg << "{\"iterations\": " << iterations
        << ", \"pipeline_txs\": " << pipeline_txs
        << ", \"batch_size\": " << batch_size << ", \"mode\": \"" << mode
        << "\", \"include_setup\": " << (no_setup ? "false" : "true")
        << ", \"parallel\": " << (parallel ? "true" : "false");
    if (!seed_hex.empty()) cfg << ", \"seed_hex\": \"" << seed_hex << "\"";
    cfg << "}";
    Str out;
    check(ctx, zkace_bench(ctx.c, cfg.str().c_str(), format.c_str(),
                           &out.s));
    emit(out.s, out_path);
  });

  // --------------------------------------------------------- constraints
  auto* constraints =
      app.add_subcommand("constraints", "circuit constraint accounting");
  constraints->add_option("--mode", mode, "nonce|nullifier");
  constraints->callback([&] {
    Str out;
    check(ctx, zkace_constraints(ctx.c, mode.c_str(), &out.s));
    std::printf("%s\n", out.s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::fprintf(stderr, "{\"error\": %d, \"message\": \"%s\"}\n",
                 kExitUsage, e.what());
    return kExitUsage;
  }
  return 0;
}
