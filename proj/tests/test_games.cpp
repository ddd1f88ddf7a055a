// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "games/games.hpp"

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

// The games target the real backend; keys are shared across test cases.
struct GameKeys {
  BackendKeys real_nonce = backend_setup(
      BackendId::kReal, params(), ReplayMode::kNonceRegistry, seed32(21));
  BackendKeys real_null = backend_setup(
      BackendId::kReal, params(), ReplayMode::kNullifierSet, seed32(22));
  BackendKeys mock_nonce = backend_setup(
      BackendId::kMock, params(), ReplayMode::kNonceRegistry, seed32(23));
};

const GameKeys& keys() {
  static const GameKeys k;
  return k;
}

// Reduced trial counts keep this suite fast; the acceptance suite runs the
// full 100-trial campaigns.
constexpr uint64_t kTrials = 5;

}  // namespace

TEST_CASE("auth game: zero wins, all controls accept") {
  Rng rng = seeded_rng(71);
  GameResult r = game_auth(params(), keys().real_nonce, keys().mock_nonce,
                           ReplayMode::kNonceRegistry, kTrials, rng);
  CHECK(r.adversary_wins == 0);
  CHECK(r.honest_controls == kTrials);
  CHECK(r.honest_control_failures == 0);
  CHECK(r.trials == kTrials);
  CHECK(r.strategies_exercised.size() == 4);
  CHECK(r.passed());
}

TEST_CASE("replay game: zero wins in both modes") {
  Rng rng = seeded_rng(72);
  for (ReplayMode mode :
       {ReplayMode::kNonceRegistry, ReplayMode::kNullifierSet}) {
    const BackendKeys& k = mode == ReplayMode::kNonceRegistry
                               ? keys().real_nonce
                               : keys().real_null;
    GameResult r = game_replay(params(), k, mode, kTrials, rng);
    CHECK(r.adversary_wins == 0);
    CHECK(r.honest_controls == 2 * kTrials);
    CHECK(r.honest_control_failures == 0);
    CHECK(r.passed());
  }
}

TEST_CASE("substitution game: zero wins") {
  Rng rng = seeded_rng(73);
  GameResult r = game_subst(params(), keys().real_nonce,
                            ReplayMode::kNonceRegistry, kTrials, rng);
  CHECK(r.adversary_wins == 0);
  CHECK(r.honest_control_failures == 0);
  CHECK(r.passed());
}

TEST_CASE("domain game: zero wins, native proof accepted") {
  Rng rng = seeded_rng(74);
  GameResult r = game_domain(params(), keys().real_nonce,
                             ReplayMode::kNonceRegistry, kTrials, rng);
  CHECK(r.adversary_wins == 0);
  CHECK(r.honest_controls == kTrials);
  CHECK(r.honest_control_failures == 0);
  CHECK(r.passed());
}

TEST_CASE("game result json carries all fields") {
  Rng rng = seeded_rng(75);
  GameResult r = game_subst(params(), keys().real_nonce,
                            ReplayMode::kNonceRegistry, 1, rng);
  std::string j = r.to_json();
  CHECK(j.find("\"game\": \"subst\"") != std::string::npos);
  CHECK(j.find("\"adversary_wins\": 0") != std::string::npos);
  CHECK(j.find("\"strategies_exercised\"") != std::string::npos);
  CHECK(j.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("harness flags a broken verifier as adversary wins") {
  // Sanity check that the win counter is live: a verifier that accepts
  // everything must produce wins, not a vacuous pass.
  Rng rng = seeded_rng(76);
  Fr domain = domain_element(params(), "zkace-games/subst");
  Fr rev = rng.next_fr(), salt = rng.next_fr();
  Fr id_com = poseidon_hash(params(), {rev, salt, domain}, HashTag::kC1);
  DerivationContext ctx{Fr::from_u64(1), domain, Fr::from_u64(0)};
  auto [w, pub] = make_statement(params(), rev, salt, ctx, Fr::zero(),
                                 {1, 2, 3}, domain,
                                 ReplayMode::kNonceRegistry);
  auto proof = backend_prove(keys().real_nonce.prover, params(), w, pub);
  // Mutated inputs reject; the same tuple unmutated accepts.
  PublicInputs bad = pub;
  bad.domain += Fr::one();
  CHECK_FALSE(backend_verify(keys().real_nonce.verifier, proof, bad));
  CHECK(backend_verify(keys().real_nonce.verifier, proof, pub));
}
