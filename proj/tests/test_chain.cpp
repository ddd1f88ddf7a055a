// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "chain/chain.hpp"

using namespace zkace;

namespace {

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

struct Identity {
  Fr rev, salt;
  Fr id_com;
};

struct Fixture {
  ReplayMode mode;
  BackendKeys keys;
  Fr domain;

  explicit Fixture(ReplayMode m, uint8_t seed = 7)
      : mode(m),
        keys(backend_setup(BackendId::kMock, params(), m, seed32(seed))),
        domain(domain_element(params(), "zkace-test-domain")) {}

  ChainState fresh_chain() const {
    return ChainState(mode, domain, keys.verifier, /*production=*/false);
  }

  Identity make_identity(Rng& rng) const {
    Identity id;
    id.rev = rng.next_fr();
    id.salt = rng.next_fr();
    id.id_com =
        poseidon_hash(params(), {id.rev, id.salt, domain}, HashTag::kC1);
    return id;
  }

  SubmittedTx make_tx(const Identity& id, uint64_t nonce,
                      const Bytes& payload) const {
    DerivationContext ctx{Fr::from_u64(1), domain, Fr::from_u64(0)};
    auto [w, pub] = make_statement(params(), id.rev, id.salt, ctx,
                                   Fr::from_u64(nonce), payload, domain, mode);
    SubmittedTx tx;
    tx.payload = payload;
    tx.pub = pub;
    tx.proof = backend_prove(keys.prover, params(), w, pub);
    return tx;
  }
};

std::string temp_path(const char* name) {
  return std::string("/tmp/zkace_chain_test_") + name;
}

}  // namespace

TEST_CASE("honest tx accepted, state updated; each step rejects in order") {
  for (ReplayMode mode :
       {ReplayMode::kNonceRegistry, ReplayMode::kNullifierSet}) {
    Fixture fx(mode);
    Rng rng = seeded_rng(61);
    ChainState chain = fx.fresh_chain();
    Identity id = fx.make_identity(rng);
    chain.register_identity(id.id_com);
    CHECK_THROWS_AS(chain.register_identity(id.id_com),
                    std::invalid_argument);

    SubmittedTx tx = fx.make_tx(id, 0, {1, 2, 3});

    // Step 6: payload swap.
    SubmittedTx swapped = tx;
    swapped.payload = {9, 9, 9};
    CHECK(chain.process_tx(params(), swapped) ==
          TxResult{false, RejectReason::kContextBinding});

    // Step 7: unregistered identity.
    Identity other = fx.make_identity(rng);
    SubmittedTx unknown = fx.make_tx(other, 0, {4});
    CHECK(chain.process_tx(params(), unknown) ==
          TxResult{false, RejectReason::kPublicInput});

    // Step 8: corrupted proof.
    SubmittedTx badproof = tx;
    badproof.proof.proof_bytes[0] ^= 1;
    CHECK(chain.process_tx(params(), badproof) ==
          TxResult{false, RejectReason::kProofInvalid});

    // Nothing above mutated state.
    CHECK(chain.height() == 0);

    // Honest accept.
    CHECK(chain.process_tx(params(), tx) ==
          TxResult{true, RejectReason::kNone});
    CHECK(chain.height() == 1);

    // Step 9: direct replay of the accepted tuple.
    CHECK(chain.process_tx(params(), tx) ==
          TxResult{false, RejectReason::kReplay});
    CHECK(chain.height() == 1);
  }
}

TEST_CASE("nonce registry requires the exact expected counter") {
  Fixture fx(ReplayMode::kNonceRegistry);
  Rng rng = seeded_rng(62);
  ChainState chain = fx.fresh_chain();
  Identity id = fx.make_identity(rng);
  chain.register_identity(id.id_com);

  // Fresh proof carrying a stale (already-consumed) nonce commitment.
  CHECK(chain.process_tx(params(), fx.make_tx(id, 0, {1})).accepted);
  SubmittedTx stale = fx.make_tx(id, 0, {2});
  CHECK(chain.process_tx(params(), stale) ==
        TxResult{false, RejectReason::kReplay});

  // Skipping ahead is rejected too.
  SubmittedTx ahead = fx.make_tx(id, 5, {3});
  CHECK(chain.process_tx(params(), ahead) ==
        TxResult{false, RejectReason::kReplay});

  // The expected-next nonce advances one at a time.
  for (uint64_t n = 1; n <= 4; ++n) {
    CHECK(chain.process_tx(params(), fx.make_tx(id, n, {(uint8_t)n}))
              .accepted);
    CHECK(chain.next_nonce(id.id_com) == n + 1);
  }
}

TEST_CASE("nullifier mode rejects re-proved identical authorization") {
  Fixture fx(ReplayMode::kNullifierSet);
  Rng rng = seeded_rng(63);
  ChainState chain = fx.fresh_chain();
  Identity id = fx.make_identity(rng);
  chain.register_identity(id.id_com);

  SubmittedTx tx1 = fx.make_tx(id, 7, {1, 1});
  CHECK(chain.process_tx(params(), tx1).accepted);
  // Same authorization parameters, fresh proof: same nullifier.
  SubmittedTx tx2 = fx.make_tx(id, 7, {1, 1});
  CHECK(tx2.pub.rp_com == tx1.pub.rp_com);
  CHECK(chain.process_tx(params(), tx2) ==
        TxResult{false, RejectReason::kReplay});
  // A different nonce yields a fresh nullifier and is accepted.
  CHECK(chain.process_tx(params(), fx.make_tx(id, 8, {1, 1})).accepted);
}

TEST_CASE("domain invariant: cross-domain tuple rejected at step 7") {
  Fixture fx(ReplayMode::kNonceRegistry);
  Rng rng = seeded_rng(64);
  Identity id = fx.make_identity(rng);
  SubmittedTx tx = fx.make_tx(id, 0, {5});

  Fr other_domain = domain_element(params(), "another-domain");
  ChainState chain(fx.mode, other_domain, fx.keys.verifier, false);
  // Identity commitments are domain-scoped, so register the declared one.
  chain.register_identity(tx.pub.id_com);
  CHECK(chain.process_tx(params(), tx) ==
        TxResult{false, RejectReason::kPublicInput});
}

TEST_CASE("production profile refuses the mock backend") {
  Fixture fx(ReplayMode::kNonceRegistry);
  CHECK_THROWS_AS(
      ChainState(fx.mode, fx.domain, fx.keys.verifier, /*production=*/true),
      std::invalid_argument);
}

TEST_CASE("mode mismatch between chain and key is refused") {
  Fixture fx(ReplayMode::kNonceRegistry);
  CHECK_THROWS_AS(ChainState(ReplayMode::kNullifierSet, fx.domain,
                             fx.keys.verifier, false),
                  std::invalid_argument);
}

TEST_CASE("batch equals sequential on a 500+ tx adversarial workload") {
  for (ReplayMode mode :
       {ReplayMode::kNonceRegistry, ReplayMode::kNullifierSet}) {
    Fixture fx(mode);
    Rng rng = seeded_rng(65);
    ChainState seq = fx.fresh_chain();
    ChainState bat = fx.fresh_chain();

    std::vector<Identity> ids;
    for (int i = 0; i < 10; ++i) {
      ids.push_back(fx.make_identity(rng));
      seq.register_identity(ids.back().id_com);
      bat.register_identity(ids.back().id_com);
    }

    std::vector<uint64_t> counters(ids.size(), 0);
    std::vector<SubmittedTx> workload;
    std::vector<SubmittedTx> accepted_pool;
    while (workload.size() < 520) {
      size_t k = rng.next_u64() % ids.size();
      uint64_t kind = rng.next_u64() % 10;
      Bytes payload = rng.bytes(1 + rng.next_u64() % 16);
      if (kind < 5) {
        // Honest next tx for this identity.
        SubmittedTx tx = fx.make_tx(ids[k], counters[k]++, payload);
        accepted_pool.push_back(tx);
        workload.push_back(tx);
      } else if (kind < 7 && !accepted_pool.empty()) {
        // Duplicate of an earlier (likely accepted) tuple.
        workload.push_back(
            accepted_pool[rng.next_u64() % accepted_pool.size()]);
      } else if (kind == 7) {
        // Stale or future nonce.
        uint64_t nonce = rng.next_u64() % (counters[k] + 3);
        workload.push_back(fx.make_tx(ids[k], nonce, payload));
      } else if (kind == 8) {
        // Payload swap after proving.
        SubmittedTx tx = fx.make_tx(ids[k], counters[k], payload);
        tx.payload.push_back(0xAA);
        workload.push_back(tx);
      } else {
        // Corrupted proof bytes.
        SubmittedTx tx = fx.make_tx(ids[k], counters[k], payload);
        tx.proof.proof_bytes[0] ^= 0xFF;
        workload.push_back(tx);
      }
    }

    std::vector<TxResult> seq_results;
    for (const auto& tx : workload) {
      seq_results.push_back(seq.process_tx(params(), tx));
    }
    std::vector<TxResult> bat_results = bat.process_batch(params(), workload);

    REQUIRE(seq_results.size() == bat_results.size());
    for (size_t i = 0; i < seq_results.size(); ++i) {
      CAPTURE(i);
      CHECK(seq_results[i] == bat_results[i]);
    }
    CHECK(seq.to_json() == bat.to_json());
    CHECK(seq.height() > 200);  // workload really exercises accepts
  }
}

TEST_CASE("batch of two identical tuples: accept then replay-reject") {
  Fixture fx(ReplayMode::kNullifierSet);
  Rng rng = seeded_rng(66);
  ChainState chain = fx.fresh_chain();
  Identity id = fx.make_identity(rng);
  chain.register_identity(id.id_com);
  SubmittedTx tx = fx.make_tx(id, 0, {1});
  auto results = chain.process_batch(params(), {tx, tx});
  REQUIRE(results.size() == 2);
  CHECK(results[0] == TxResult{true, RejectReason::kNone});
  CHECK(results[1] == TxResult{false, RejectReason::kReplay});
}

TEST_CASE("persistence round trip with 10000 nullifiers and checksums") {
  Fixture fx(ReplayMode::kNullifierSet);
  Rng rng = seeded_rng(67);
  ChainState chain = fx.fresh_chain();
  Identity id = fx.make_identity(rng);
  chain.register_identity(id.id_com);

  std::vector<SubmittedTx> txs;
  for (uint64_t n = 0; n < 10000; ++n) {
    txs.push_back(fx.make_tx(id, n, {(uint8_t)n, (uint8_t)(n >> 8)}));
  }
  auto results = chain.process_batch(params(), txs);
  for (const auto& r : results) REQUIRE(r.accepted);
  REQUIRE(chain.nullifier_count() == 10000);

  std::string path = temp_path("nullifiers.json");
  chain.save_file(path);
  ChainState loaded = ChainState::load_file(path);
  CHECK(loaded.to_json() == chain.to_json());
  CHECK(loaded.nullifier_count() == 10000);
  CHECK(loaded.height() == chain.height());

  // Loaded state still enforces replay.
  CHECK(loaded.process_tx(params(), txs[0]) ==
        TxResult{false, RejectReason::kReplay});

  // Single corrupted byte -> checksum error.
  std::string text = chain.to_json();
  size_t pos = text.find("nullifiers");
  text[pos + 30] = text[pos + 30] == 'a' ? 'b' : 'a';
  CHECK_THROWS_AS(ChainState::from_json(text), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("empty state round trips") {
  Fixture fx(ReplayMode::kNonceRegistry);
  ChainState chain = fx.fresh_chain();
  ChainState back = ChainState::from_json(chain.to_json());
  CHECK(back.to_json() == chain.to_json());
  CHECK(back.height() == 0);
}

TEST_CASE("status report fields") {
  Fixture fx(ReplayMode::kNonceRegistry);
  ChainState chain = fx.fresh_chain();
  std::string s = chain.status_json();
  CHECK(s.find("\"height\": 0") != std::string::npos);
  CHECK(s.find("\"mode\": \"nonce\"") != std::string::npos);
  CHECK(s.find("\"backend\": \"mock\"") != std::string::npos);
}
