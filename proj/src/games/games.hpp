// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Adversarial harness: structural falsification campaigns against the full
// stack. Each game runs a fixed set of adversary strategies that must never
// be accepted, plus honest control cases that must always be accepted, so
// soundness failures are distinguishable from liveness failures.

#pragma once

#include "chain/chain.hpp"

namespace zkace {

struct GameResult {
  std::string game;
  ReplayMode mode = ReplayMode::kNonceRegistry;
  uint64_t trials = 0;
  uint64_t adversary_wins = 0;
  uint64_t honest_controls = 0;
  uint64_t honest_control_failures = 0;
  std::vector<std::string> strategies_exercised;

  bool passed() const {
    return adversary_wins == 0 && honest_control_failures == 0;
  }
  std::string to_json() const;
};

// Forgery without knowledge of the root entropy: random proof blobs,
// re-targeted honest proofs from another identity, mock proofs against the
// real verifier, and proofs over an unsatisfied random-entropy witness.
GameResult game_auth(const PoseidonParams& params, const BackendKeys& real,
                     const BackendKeys& mock, ReplayMode mode,
                     uint64_t trials, Rng& rng);

// Replay of an already-accepted authorization: direct re-submission, a
// fresh proof carrying a stale nonce commitment (nonce-registry mode), and
// a re-proved identical authorization (nullifier-set mode). The positive
// control is a genuinely new authorization.
GameResult game_replay(const PoseidonParams& params, const BackendKeys& real,
                       ReplayMode mode, uint64_t trials, Rng& rng);

// Public-input substitution: an accepting proof re-verified under mutated
// public inputs (every single field, plus random two-field mutations).
GameResult game_subst(const PoseidonParams& params, const BackendKeys& real,
                      ReplayMode mode, uint64_t trials, Rng& rng);

// Cross-domain transplantation: the same root entropy registered on two
// domains; proofs for one domain submitted to the other's verifier both
// verbatim and with the domain field rewritten.
GameResult game_domain(const PoseidonParams& params, const BackendKeys& real,
                       ReplayMode mode, uint64_t trials, Rng& rng);

}  // namespace zkace
