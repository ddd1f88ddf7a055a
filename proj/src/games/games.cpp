// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "games/games.hpp"

#include <json.hpp>

#include "groth16/groth16.hpp"

namespace zkace {

namespace {

struct Identity {
  Fr rev, salt, id_com;
};

Identity fresh_identity(const PoseidonParams& p, const Fr& domain, Rng& rng) {
  Identity id;
  id.rev = rng.next_fr();
  id.salt = rng.next_fr();
  id.id_com = poseidon_hash(p, {id.rev, id.salt, domain}, HashTag::kC1);
  return id;
}

std::pair<AuthorizationWitness, PublicInputs> statement_for(
    const PoseidonParams& p, const Identity& id, const Fr& domain,
    uint64_t nonce, const Bytes& payload, ReplayMode mode) {
  DerivationContext ctx{Fr::from_u64(1), domain, Fr::from_u64(0)};
  return make_statement(p, id.rev, id.salt, ctx, Fr::from_u64(nonce), payload,
                        domain, mode);
}

SubmittedTx proved_tx(const PoseidonParams& p, const ProverKey& pk,
                      const Identity& id, const Fr& domain, uint64_t nonce,
                      const Bytes& payload, ReplayMode mode) {
  auto [w, pub] = statement_for(p, id, domain, nonce, payload, mode);
  SubmittedTx tx;
  tx.payload = payload;
  tx.pub = pub;
  tx.proof = backend_prove(pk, p, w, pub);
  return tx;
}

}  // namespace

std::string GameResult::to_json() const {
  nlohmann::json j;
  j["game"] = game;
  j["mode"] = replay_mode_name(mode);
  j["trials"] = trials;
  j["adversary_wins"] = adversary_wins;
  j["honest_controls"] = honest_controls;
  j["honest_control_failures"] = honest_control_failures;
  j["strategies_exercised"] = strategies_exercised;
  j["passed"] = passed();
  return j.dump(2);
}

GameResult game_auth(const PoseidonParams& params, const BackendKeys& real,
                     const BackendKeys& mock, ReplayMode mode,
                     uint64_t trials, Rng& rng) {
  GameResult r;
  r.game = "auth";
  r.mode = mode;
  r.trials = trials;
  r.strategies_exercised = {"random-proof-bytes", "other-identity-retarget",
                           "mock-proof-to-real-verifier",
                           "random-rev-witness"};
  Fr domain = domain_element(params, "zkace-games/auth");
  AuthCircuit circ = build_circuit(params, mode);

  for (uint64_t t = 0; t < trials; ++t) {
    // The victim: an honest identity whose root entropy the adversary never
    // sees. The adversary observes the accepted tuple (passive transcript).
    Identity victim = fresh_identity(params, domain, rng);
    Bytes payload = rng.bytes(1 + rng.next_u64() % 32);
    SubmittedTx honest = proved_tx(params, real.prover, victim, domain,
                                   /*nonce=*/t, payload, mode);
    ++r.honest_controls;
    if (!backend_verify(real.verifier, honest.proof, honest.pub)) {
      ++r.honest_control_failures;
    }

    // Strategy 1: uniformly random proof blob of the correct shape.
    AuthorizationProof forged = honest.proof;
    forged.proof_bytes = rng.bytes(honest.proof.proof_bytes.size());
    if (backend_verify(real.verifier, forged, honest.pub)) ++r.adversary_wins;

    // Strategy 2: the adversary proves with its own identity, then swaps
    // the victim's commitment into the public inputs.
    Identity self = fresh_identity(params, domain, rng);
    SubmittedTx own = proved_tx(params, real.prover, self, domain, t, payload,
                                mode);
    PublicInputs retarget = own.pub;
    retarget.id_com = honest.pub.id_com;
    if (backend_verify(real.verifier, own.proof, retarget)) {
      ++r.adversary_wins;
    }

    // Strategy 3: a mock-backend authenticator tag submitted to the real
    // verifier, both labeled and relabeled as a real proof.
    auto [mw, mpub] = statement_for(params, self, domain, t, payload, mode);
    AuthorizationProof mock_proof = backend_prove(mock.prover, params, mw,
                                                  mpub);
    if (backend_verify(real.verifier, mock_proof, mpub)) ++r.adversary_wins;
    AuthorizationProof relabeled = mock_proof;
    relabeled.backend = BackendId::kReal;
    if (backend_verify(real.verifier, relabeled, mpub)) ++r.adversary_wins;

    // Strategy 4: prove over an assignment using a guessed root entropy for
    // the victim's public inputs. The prover runs below the consistency
    // check, as a cheating prover would.
    AuthorizationWitness guess;
    guess.rev = rng.next_fr();
    guess.salt = rng.next_fr();
    guess.ctx = DerivationContext{Fr::from_u64(1), domain, Fr::from_u64(0)};
    guess.nonce = Fr::from_u64(t);
    std::vector<Fr> assignment =
        synthesize_assignment(params, mode, guess, honest.pub);
    Groth16Proof gp =
        groth16_prove(real.prover.g16, circ.cs, assignment, rng);
    if (groth16_verify(real.verifier.g16, honest.pub.as_vector(), gp)) {
      ++r.adversary_wins;
    }
  }
  return r;
}

GameResult game_replay(const PoseidonParams& params, const BackendKeys& real,
                       ReplayMode mode, uint64_t trials, Rng& rng) {
  GameResult r;
  r.game = "replay";
  r.mode = mode;
  r.trials = trials;
  r.strategies_exercised = {"direct-replay",
                           mode == ReplayMode::kNonceRegistry
                               ? "stale-nonce-fresh-proof"
                               : "identical-auth-reprove"};
  Fr domain = domain_element(params, "zkace-games/replay");

  for (uint64_t t = 0; t < trials; ++t) {
    ChainState chain(mode, domain, real.verifier, false);
    Identity id = fresh_identity(params, domain, rng);
    chain.register_identity(id.id_com);
    Bytes payload = rng.bytes(1 + rng.next_u64() % 32);

    SubmittedTx first = proved_tx(params, real.prover, id, domain, 0, payload,
                                  mode);
    ++r.honest_controls;
    if (!chain.process_tx(params, first).accepted) {
      ++r.honest_control_failures;
      continue;
    }

    // Direct replay of the accepted tuple.
    if (chain.process_tx(params, first).accepted) ++r.adversary_wins;

    // A fresh proof over the already-consumed authorization parameters:
    // same nonce, so the same replay commitment in either mode.
    SubmittedTx again = proved_tx(params, real.prover, id, domain, 0, payload,
                                  mode);
    if (chain.process_tx(params, again).accepted) ++r.adversary_wins;

    // Liveness control: a genuinely new authorization is accepted.
    SubmittedTx next = proved_tx(params, real.prover, id, domain, 1,
                                 rng.bytes(8), mode);
    ++r.honest_controls;
    if (!chain.process_tx(params, next).accepted) {
      ++r.honest_control_failures;
    }
  }
  return r;
}

GameResult game_subst(const PoseidonParams& params, const BackendKeys& real,
                      ReplayMode mode, uint64_t trials, Rng& rng) {
  GameResult r;
  r.game = "subst";
  r.mode = mode;
  r.trials = trials;
  r.strategies_exercised = {"single-field-mutation", "two-field-mutation"};
  Fr domain = domain_element(params, "zkace-games/subst");

  for (uint64_t t = 0; t < trials; ++t) {
    Identity id = fresh_identity(params, domain, rng);
    SubmittedTx tx = proved_tx(params, real.prover, id, domain, t,
                               rng.bytes(1 + rng.next_u64() % 32), mode);
    ++r.honest_controls;
    if (!backend_verify(real.verifier, tx.proof, tx.pub)) {
      ++r.honest_control_failures;
    }

    auto mutate = [&](PublicInputs& p, int field) {
      Fr d = Fr::from_u64(1 + rng.next_u64() % 997);
      switch (field) {
        case 0: p.id_com += d; break;
        case 1: p.tx_hash += d; break;
        case 2: p.domain += d; break;
        case 3: p.target += d; break;
        case 4: p.rp_com += d; break;
      }
    };
    for (int field = 0; field < 5; ++field) {
      PublicInputs bad = tx.pub;
      mutate(bad, field);
      if (backend_verify(real.verifier, tx.proof, bad)) ++r.adversary_wins;
    }
    int f1 = (int)(rng.next_u64() % 5);
    int f2 = (int)((f1 + 1 + rng.next_u64() % 4) % 5);
    PublicInputs bad2 = tx.pub;
    mutate(bad2, f1);
    mutate(bad2, f2);
    if (backend_verify(real.verifier, tx.proof, bad2)) ++r.adversary_wins;
  }
  return r;
}

GameResult game_domain(const PoseidonParams& params, const BackendKeys& real,
                       ReplayMode mode, uint64_t trials, Rng& rng) {
  GameResult r;
  r.game = "domain";
  r.mode = mode;
  r.trials = trials;
  r.strategies_exercised = {"raw-cross-submit", "domain-field-rewrite"};
  Fr d1 = domain_element(params, "zkace-games/domain-1");
  Fr d2 = domain_element(params, "zkace-games/domain-2");

  for (uint64_t t = 0; t < trials; ++t) {
    // One root entropy registered on both domains with independent salts.
    Fr rev = rng.next_fr();
    Identity on_d1{rev, rng.next_fr(), Fr::zero()};
    on_d1.id_com = poseidon_hash(params, {rev, on_d1.salt, d1}, HashTag::kC1);
    Identity on_d2{rev, rng.next_fr(), Fr::zero()};
    on_d2.id_com = poseidon_hash(params, {rev, on_d2.salt, d2}, HashTag::kC1);

    ChainState chain2(mode, d2, real.verifier, false);
    chain2.register_identity(on_d2.id_com);

    Bytes payload = rng.bytes(1 + rng.next_u64() % 32);
    SubmittedTx tx1 = proved_tx(params, real.prover, on_d1, d1, 0, payload,
                                mode);

    // Verbatim transplant of the d1 tuple into d2's verifier.
    if (chain2.process_tx(params, tx1).accepted) ++r.adversary_wins;

    // Rewriting the public domain (and identity) fields to pass the chain
    // checks; the proof must not verify under them.
    SubmittedTx rewritten = tx1;
    rewritten.pub.domain = d2;
    rewritten.pub.id_com = on_d2.id_com;
    if (chain2.process_tx(params, rewritten).accepted) ++r.adversary_wins;

    // Control: a native d2 authorization is accepted.
    SubmittedTx native = proved_tx(params, real.prover, on_d2, d2, 0, payload,
                                   mode);
    ++r.honest_controls;
    if (!chain2.process_tx(params, native).accepted) {
      ++r.honest_control_failures;
    }
  }
  return r;
}

}  // namespace zkace
