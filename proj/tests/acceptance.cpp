// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion. Exit status is the
// number of failing criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "accounting/accounting.hpp"
#include "bench/bench.hpp"
#include "chain/chain.hpp"
#include "frozen_vectors.hpp"
#include "games/games.hpp"
#include "groth16/groth16.hpp"
#include "oracle/poseidon_oracle.hpp"

using namespace zkace;

namespace {

int g_failures = 0;

void criterion(int n, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Rng seeded_rng(uint8_t n) {
  std::array<uint8_t, 32> seed{};
  seed[0] = n;
  return Rng(seed);
}

std::array<uint8_t, 32> seed32(uint8_t n) {
  std::array<uint8_t, 32> s{};
  s[0] = n;
  return s;
}

const PoseidonParams& params() { return PoseidonParams::default_params(); }

std::pair<AuthorizationWitness, PublicInputs> random_statement(
    Rng& rng, ReplayMode mode, uint64_t nonce) {
  DerivationContext ctx;
  ctx.alg_id = Fr::from_u64(rng.next_u64() % 4);
  Fr domain = rng.next_fr();
  ctx.ctx_domain = domain;
  ctx.index = Fr::from_u64(rng.next_u64() % 64);
  return make_statement(params(), rng.next_fr(), rng.next_fr(), ctx,
                        Fr::from_u64(nonce), rng.bytes(16), domain, mode);
}

struct Identity {
  Fr rev, salt, id_com;
};

Identity fresh_identity(const Fr& domain, Rng& rng) {
  Identity id{rng.next_fr(), rng.next_fr(), Fr::zero()};
  id.id_com =
      poseidon_hash(params(), {id.rev, id.salt, domain}, HashTag::kC1);
  return id;
}

SubmittedTx make_tx(const BackendKeys& keys, const Identity& id,
                    const Fr& domain, uint64_t nonce, const Bytes& payload,
                    ReplayMode mode) {
  DerivationContext ctx{Fr::from_u64(1), domain, Fr::from_u64(0)};
  auto [w, pub] = make_statement(params(), id.rev, id.salt, ctx,
                                 Fr::from_u64(nonce), payload, domain, mode);
  SubmittedTx tx;
  tx.payload = payload;
  tx.pub = pub;
  tx.proof = backend_prove(keys.prover, params(), w, pub);
  return tx;
}

// ----------------------------------------------------------------------

void criterion1_constraints() {
  ConstraintReport a =
      count_constraints(params(), ReplayMode::kNonceRegistry);
  ConstraintReport b = count_constraints(params(), ReplayMode::kNullifierSet);
  bool same = a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3 && a.c4 == b.c4 &&
              a.c5 == b.c5 && a.total == b.total;
  double lo = 4024.0 * 0.85, hi = 4024.0 * 1.15;
  bool in_band = (double)a.total >= lo && (double)a.total <= hi;
  bool hashes = a.hash_invocations == 5 && b.hash_invocations == 5;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "constraint accounting: total %zu in [%.0f, %.0f], "
                "5 hash invocations (arity 3 / 4+1 / 7 / 2 / equality), "
                "totals identical across modes",
                a.total, lo, hi);
  criterion(1, same && in_band && hashes, buf);
}

void criterion2_completeness(const BackendKeys& nonce_keys,
                             const BackendKeys& null_keys) {
  Rng rng = seeded_rng(102);
  int failures = 0;
  for (ReplayMode mode :
       {ReplayMode::kNonceRegistry, ReplayMode::kNullifierSet}) {
    const BackendKeys& k =
        mode == ReplayMode::kNonceRegistry ? nonce_keys : null_keys;
    for (int i = 0; i < 200; ++i) {
      auto [w, pub] = random_statement(rng, mode, (uint64_t)i);
      AuthorizationProof proof = backend_prove(k.prover, params(), w, pub);
      if (!backend_verify(k.verifier, proof, pub)) ++failures;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "completeness: 200 honest statements per mode, %d failures",
                failures);
  criterion(2, failures == 0, buf);
}

void criterion3_games(const BackendKeys& nonce_keys,
                      const BackendKeys& null_keys,
                      const BackendKeys& mock_keys) {
  Rng rng = seeded_rng(103);
  constexpr uint64_t kTrials = 100;
  std::vector<GameResult> results;
  results.push_back(game_auth(params(), nonce_keys, mock_keys,
                              ReplayMode::kNonceRegistry, kTrials, rng));
  results.push_back(game_replay(params(), nonce_keys,
                                ReplayMode::kNonceRegistry, kTrials, rng));
  results.push_back(game_replay(params(), null_keys,
                                ReplayMode::kNullifierSet, kTrials, rng));
  results.push_back(game_subst(params(), nonce_keys,
                               ReplayMode::kNonceRegistry, kTrials, rng));
  results.push_back(game_domain(params(), nonce_keys,
                                ReplayMode::kNonceRegistry, kTrials, rng));
  uint64_t wins = 0, control_failures = 0;
  for (const GameResult& r : results) {
    wins += r.adversary_wins;
    control_failures += r.honest_control_failures;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "adversarial games: %llu adversary wins, %llu control "
                "failures over %zu campaigns x %llu trials",
                (unsigned long long)wins,
                (unsigned long long)control_failures, results.size(),
                (unsigned long long)kTrials);
  criterion(3, wins == 0 && control_failures == 0, buf);
}

void criterion4_replay_semantics() {
  Rng rng = seeded_rng(104);
  bool ok = true;
  std::string detail;
  for (ReplayMode mode :
       {ReplayMode::kNonceRegistry, ReplayMode::kNullifierSet}) {
    BackendKeys keys = backend_setup(BackendId::kMock, params(), mode,
                                     seed32(40 + (int)mode));
    Fr domain = domain_element(params(), "acceptance/replay");

    // Case analysis on one chain.
    ChainState chain(mode, domain, keys.verifier, false);
    Identity id = fresh_identity(domain, rng);
    chain.register_identity(id.id_com);
    SubmittedTx first = make_tx(keys, id, domain, 0, {1, 2}, mode);
    ok = ok && chain.process_tx(params(), first).accepted;
    ok = ok && !chain.process_tx(params(), first).accepted;  // direct replay
    SubmittedTx stale = make_tx(keys, id, domain, 0, {3, 4}, mode);
    if (mode == ReplayMode::kNullifierSet) stale.payload = first.payload;
    SubmittedTx reprove = make_tx(keys, id, domain, 0, {1, 2}, mode);
    ok = ok && !chain.process_tx(params(), reprove).accepted;  // re-prove
    if (mode == ReplayMode::kNonceRegistry) {
      ok = ok && !chain.process_tx(params(), stale).accepted;  // stale nonce
    }
    SubmittedTx fresh = make_tx(keys, id, domain, 1, {5, 6}, mode);
    ok = ok && chain.process_tx(params(), fresh).accepted;

    // Batch / sequential equivalence on a 500-tx adversarial workload.
    ChainState seq(mode, domain, keys.verifier, false);
    ChainState bat(mode, domain, keys.verifier, false);
    std::vector<Identity> ids;
    for (int i = 0; i < 8; ++i) {
      ids.push_back(fresh_identity(domain, rng));
      seq.register_identity(ids.back().id_com);
      bat.register_identity(ids.back().id_com);
    }
    std::vector<uint64_t> counters(ids.size(), 0);
    std::vector<SubmittedTx> workload;
    std::vector<SubmittedTx> pool;
    while (workload.size() < 500) {
      size_t k = rng.next_u64() % ids.size();
      uint64_t kind = rng.next_u64() % 8;
      Bytes payload = rng.bytes(1 + rng.next_u64() % 12);
      if (kind < 4) {
        SubmittedTx tx =
            make_tx(keys, ids[k], domain, counters[k]++, payload, mode);
        pool.push_back(tx);
        workload.push_back(tx);
      } else if (kind < 6 && !pool.empty()) {
        workload.push_back(pool[rng.next_u64() % pool.size()]);
      } else if (kind == 6) {
        uint64_t nonce = rng.next_u64() % (counters[k] + 2);
        workload.push_back(make_tx(keys, ids[k], domain, nonce, payload,
                                   mode));
      } else {
        SubmittedTx tx =
            make_tx(keys, ids[k], domain, counters[k], payload, mode);
        tx.proof.proof_bytes[0] ^= 0xFF;
        workload.push_back(tx);
      }
    }
    std::vector<TxResult> rs;
    for (const SubmittedTx& tx : workload) {
      rs.push_back(seq.process_tx(params(), tx));
    }
    std::vector<TxResult> rb = bat.process_batch(params(), workload);
    bool equal = rs.size() == rb.size();
    for (size_t i = 0; equal && i < rs.size(); ++i) equal = rs[i] == rb[i];
    equal = equal && seq.to_json() == bat.to_json();
    ok = ok && equal;
    detail += std::string(replay_mode_name(mode)) +
              (equal ? " batch==sequential; " : " batch!=sequential; ");
  }
  criterion(4, ok,
            "replay semantics: direct/stale/re-prove rejected, fresh "
            "accepted; 500-tx " +
                detail);
}

void criterion5_accounting() {
  struct Row {
    const char* name;
    uint64_t sig, pk;
  };
  const Row expected[] = {
      {"ml-dsa-44", 2420, 1312},   {"ml-dsa-65", 3309, 1952},
      {"ml-dsa-87", 4627, 2592},   {"slh-dsa-128f", 17088, 32},
      {"fn-dsa-512", 666, 897},    {"ed25519", 64, 32},
      {"secp256k1", 71, 33},
  };
  bool ok = true;
  for (const Row& row : expected) {
    ArtifactProfile p = builtin_profile(row.name, false);
    ok = ok && p.signature_or_proof_bytes == row.sig &&
         p.public_key_bytes == row.pk;
  }
  uint64_t n_pub = PublicInputs{}.as_vector().size();
  ok = ok && builtin_profile("ml-dsa-44", false).total_bytes() == 3732;
  ok = ok && builtin_profile("ml-dsa-87", false).total_bytes() == 7219;
  ok = ok && zkace_profile(128, n_pub).total_bytes() == 320;
  ok = ok && zkace_profile(256, n_pub).total_bytes() == 448;
  uint64_t measured = zkace_profile(Groth16Proof::kByteSize, n_pub)
                          .total_bytes();
  ok = ok && measured >= 320 && measured <= 448;
  double worst = reduction_report(builtin_profile("ml-dsa-44", false),
                                  zkace_profile(256, n_pub))
                     .ratio;
  double best = reduction_report(builtin_profile("ml-dsa-87", false),
                                 zkace_profile(128, n_pub))
                    .ratio;
  ok = ok && worst > 8.2 && worst < 8.4 && best > 22.5 && best < 22.7;
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "data accounting: scheme constants byte-exact, totals "
                "3732-7219 vs 320-448 B (measured %llu B), ratios "
                "%.1fx-%.1fx",
                (unsigned long long)measured, worst, best);
  criterion(5, ok, buf);
}

void criterion6_performance() {
  BenchConfig cfg;
  cfg.seed = seed32(106);
  BenchReport report = run_bench(params(), cfg);
  const BenchStat* setup = report.find("setup");
  const BenchStat* prove = report.find("prove");
  const BenchStat* verify = report.find("verify");
  const BenchStat* pipeline = report.find("pipeline_2000tx_mock");
  bool ok = setup && prove && verify && pipeline &&
            verify->median_ms < 10.0 && prove->median_ms < 2000.0 &&
            setup->median_ms < 5000.0 && pipeline->median_ms < 5000.0;
  char buf[256];
  std::snprintf(
      buf, sizeof(buf),
      "performance envelope: verify %.2f ms (<10, ref 0.651), prove %.0f ms "
      "(<2000, ref 63), setup %.0f ms (<5000, ref 120), 2000-tx mock "
      "pipeline %.0f ms (<5000, ref 7.56); hardware-relative",
      verify ? verify->median_ms : -1.0, prove ? prove->median_ms : -1.0,
      setup ? setup->median_ms : -1.0,
      pipeline ? pipeline->median_ms : -1.0);
  criterion(6, ok, buf);
}

void criterion7_hash_oracle() {
  oracle::OracleParams op = oracle::load_params_json(params().to_json());
  Rng rng = seeded_rng(107);
  int mismatches = 0;
  int count = 0;
  while (count < 1000) {
    size_t arity = 1 + rng.next_u64() % 7;
    unsigned tag = 1 + (unsigned)(rng.next_u64() % 7);
    std::vector<Fr> inputs;
    std::vector<std::string> hx;
    for (size_t i = 0; i < arity; ++i) {
      inputs.push_back(rng.next_fr());
      hx.push_back(inputs.back().to_hex());
    }
    Fr native = poseidon_hash(params(), inputs, (HashTag)tag);
    if (native.to_hex() != oracle::hash_hex(op, hx, tag)) ++mismatches;
    ++count;
  }
  // Frozen vectors guard against coordinated drift of both implementations.
  Fr a = Fr::from_u64(3), b = Fr::from_u64(7), c = Fr::from_u64(11);
  bool frozen_ok = poseidon_hash(params(), {a, b, c}, HashTag::kC1)
                       .to_hex() == ZKACE_FROZEN_HASH_3_7_11;
  Bytes payload(100);
  for (size_t i = 0; i < payload.size(); ++i) payload[i] = (uint8_t)i;
  frozen_ok = frozen_ok &&
              tx_hash(params(), payload).to_hex() == ZKACE_FROZEN_TX_100;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "hash oracle equivalence: %d/%d random inputs matched the "
                "independent straight-line oracle, frozen vectors %s",
                count - mismatches, count, frozen_ok ? "intact" : "DRIFTED");
  criterion(7, mismatches == 0 && frozen_ok, buf);
}

void criterion8_persistence() {
  Rng rng = seeded_rng(108);
  BackendKeys keys = backend_setup(BackendId::kMock, params(),
                                   ReplayMode::kNullifierSet, seed32(50));
  Fr domain = domain_element(params(), "acceptance/persistence");
  ChainState chain(ReplayMode::kNullifierSet, domain, keys.verifier, false);
  std::vector<Identity> ids;
  for (int i = 0; i < 5; ++i) {
    ids.push_back(fresh_identity(domain, rng));
    chain.register_identity(ids.back().id_com);
  }
  std::vector<SubmittedTx> txs;
  for (uint64_t n = 0; n < 10000; ++n) {
    txs.push_back(make_tx(keys, ids[n % ids.size()], domain, n,
                          rng.bytes(8), ReplayMode::kNullifierSet));
  }
  uint64_t accepted = 0;
  for (const TxResult& r : chain.process_batch(params(), txs)) {
    accepted += r.accepted ? 1 : 0;
  }
  bool ok = accepted == 10000 && chain.nullifier_count() == 10000;

  std::string text = chain.to_json();
  ChainState loaded = ChainState::from_json(text);
  ok = ok && loaded.to_json() == text &&
       loaded.nullifier_count() == 10000 &&
       loaded.height() == chain.height();
  ok = ok && !loaded.process_tx(params(), txs[123]).accepted;

  // One flipped character inside the state body must be detected.
  std::string corrupted = text;
  size_t pos = corrupted.find("nullifiers");
  pos = corrupted.find('"', pos + 12) + 5;
  corrupted[pos] = corrupted[pos] == 'a' ? 'b' : 'a';
  bool detected = false;
  try {
    ChainState::from_json(corrupted);
  } catch (const std::runtime_error&) {
    detected = true;
  }
  ok = ok && detected;

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "persistence: 10000-nullifier state round-trips exactly, "
                "replay still enforced after reload, corruption %s by "
                "checksum",
                detected ? "detected" : "MISSED");
  criterion(8, ok, buf);
}

}  // namespace

int main() {
  criterion1_constraints();

  BackendKeys nonce_keys = backend_setup(
      BackendId::kReal, params(), ReplayMode::kNonceRegistry, seed32(1));
  BackendKeys null_keys = backend_setup(
      BackendId::kReal, params(), ReplayMode::kNullifierSet, seed32(2));
  BackendKeys mock_keys = backend_setup(
      BackendId::kMock, params(), ReplayMode::kNonceRegistry, seed32(3));

  criterion2_completeness(nonce_keys, null_keys);
  criterion3_games(nonce_keys, null_keys, mock_keys);
  criterion4_replay_semantics();
  criterion5_accounting();
  criterion6_performance();
  criterion7_hash_oracle();
  criterion8_persistence();

  std::printf("%d/8 criteria passed\n", 8 - g_failures);
  return g_failures;
}
