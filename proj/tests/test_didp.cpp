// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "didp/didp.hpp"
#include "frozen_vectors.hpp"

using namespace zkace;

namespace {

Rng seeded_rng(uint8_t n) {
  std::array<uint8_t, 32> seed{};
  seed[0] = n;
  return Rng(seed);
}

Bytes cred(const std::string& s) { return Bytes(s.begin(), s.end()); }

}  // namespace

TEST_CASE("seal/unseal round trip over 100 random pairs") {
  Rng rng = seeded_rng(41);
  for (int i = 0; i < 100; ++i) {
    RootEntropy rev = RootEntropy::sample(rng);
    Bytes credential = rng.bytes(1 + rng.next_u64() % 40);
    SealedArtifact a = seal(rev, credential, KdfParams::test(), rng);
    auto back = unseal(a, credential);
    REQUIRE(back.has_value());
    CHECK(*back == rev);
  }
}

TEST_CASE("wrong credential or flipped ciphertext bit fails authentication") {
  Rng rng = seeded_rng(42);
  for (int i = 0; i < 100; ++i) {
    RootEntropy rev = RootEntropy::sample(rng);
    Bytes credential = rng.bytes(8);
    SealedArtifact a = seal(rev, credential, KdfParams::test(), rng);
    if (i % 2 == 0) {
      Bytes other = credential;
      other[rng.next_u64() % other.size()] ^= 1 + (rng.next_u64() % 255);
      CHECK_FALSE(unseal(a, other).has_value());
    } else {
      SealedArtifact b = a;
      size_t bit = rng.next_u64() % 256;
      b.ciphertext[bit / 8] ^= (uint8_t)(1 << (bit % 8));
      CHECK_FALSE(unseal(b, credential).has_value());
    }
  }
}

TEST_CASE("two seals of the same rev differ") {
  Rng rng = seeded_rng(43);
  RootEntropy rev = RootEntropy::sample(rng);
  SealedArtifact a = seal(rev, cred("pw"), KdfParams::test(), rng);
  SealedArtifact b = seal(rev, cred("pw"), KdfParams::test(), rng);
  CHECK(a.kdf_salt != b.kdf_salt);
  CHECK(a.nonce != b.nonce);
  CHECK(a.ciphertext != b.ciphertext);
}

TEST_CASE("artifact json round trip; malformed input is a parse error") {
  Rng rng = seeded_rng(44);
  RootEntropy rev = RootEntropy::sample(rng);
  SealedArtifact a = seal(rev, cred("secret"), KdfParams::test(), rng);
  SealedArtifact b = SealedArtifact::from_json(a.to_json());
  CHECK(b.kdf_salt == a.kdf_salt);
  CHECK(b.nonce == a.nonce);
  CHECK(b.ciphertext == a.ciphertext);
  CHECK(b.tag == a.tag);
  CHECK(b.kdf_params.opslimit == a.kdf_params.opslimit);
  auto back = unseal(b, cred("secret"));
  REQUIRE(back.has_value());
  CHECK(*back == rev);

  CHECK_THROWS_AS(SealedArtifact::from_json("{"), std::exception);
  // Truncated byte field.
  std::string t = a.to_json();
  auto pos = t.find(to_hex(Bytes(a.kdf_salt.begin(), a.kdf_salt.end())));
  t = t.substr(0, pos) + t.substr(pos + 2);
  CHECK_THROWS_AS(SealedArtifact::from_json(t), std::exception);
}

TEST_CASE("empty credential rejected") {
  Rng rng = seeded_rng(45);
  RootEntropy rev = RootEntropy::sample(rng);
  CHECK_THROWS(seal(rev, {}, KdfParams::test(), rng));
}

TEST_CASE("derive matches the frozen reference vector") {
  const PoseidonParams& p = PoseidonParams::default_params();
  std::array<uint8_t, 32> fixed;
  for (int i = 0; i < 32; ++i) fixed[i] = (uint8_t)i;
  RootEntropy rev(fixed);
  DerivationContext ctx{Fr::from_u64(1), Fr::from_u64(2), Fr::from_u64(3)};
  CHECK(derive(p, rev, ctx).to_hex() == ZKACE_FROZEN_DERIVE);
  CHECK(derive_target(p, rev, ctx).to_hex() == ZKACE_FROZEN_DERIVE_TARGET);
}

TEST_CASE("context isolation over 1000 random context pairs") {
  const PoseidonParams& p = PoseidonParams::default_params();
  Rng rng = seeded_rng(46);
  RootEntropy rev = RootEntropy::sample(rng);
  for (int i = 0; i < 1000; ++i) {
    DerivationContext a{rng.next_fr(), rng.next_fr(), rng.next_fr()};
    DerivationContext b = a;
    switch (rng.next_u64() % 3) {
      case 0: b.alg_id += Fr::one(); break;
      case 1: b.ctx_domain += Fr::one(); break;
      default: b.index += Fr::one(); break;
    }
    CHECK(derive(p, rev, a) != derive(p, rev, b));
  }
}

TEST_CASE("derive is deterministic and distinct from derive_target") {
  const PoseidonParams& p = PoseidonParams::default_params();
  Rng rng = seeded_rng(47);
  RootEntropy rev = RootEntropy::sample(rng);
  DerivationContext ctx{rng.next_fr(), rng.next_fr(), rng.next_fr()};
  CHECK(derive(p, rev, ctx) == derive(p, rev, ctx));
  CHECK(derive_target(p, rev, ctx) == derive_target(p, rev, ctx));
  CHECK(derive(p, rev, ctx) != derive_target(p, rev, ctx));
}

TEST_CASE("derive agrees with the statement assembly in the circuit module") {
  const PoseidonParams& p = PoseidonParams::default_params();
  Rng rng = seeded_rng(48);
  RootEntropy rev = RootEntropy::sample(rng);
  Fr domain = rng.next_fr();
  DerivationContext ctx{Fr::from_u64(2), domain, Fr::from_u64(7)};
  auto [w, pub] = make_statement(p, rev.field(), rng.next_fr(), ctx,
                                 Fr::zero(), Bytes{1}, domain,
                                 ReplayMode::kNonceRegistry);
  CHECK(pub.target == derive_target(p, rev, ctx));
}
