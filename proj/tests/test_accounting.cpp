// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "accounting/accounting.hpp"
#include "circuit/auth_circuit.hpp"
#include "groth16/groth16.hpp"

using namespace zkace;

TEST_CASE("builtin profile constants are byte-exact") {
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
  for (const Row& row : expected) {
    ArtifactProfile p = builtin_profile(row.name, false);
    CHECK(p.signature_or_proof_bytes == row.sig);
    CHECK(p.public_key_bytes == row.pk);
    CHECK(p.total_bytes() == row.sig + row.pk);
    ArtifactProfile amortized = builtin_profile(row.name, true);
    CHECK(amortized.total_bytes() == row.sig);
  }
  CHECK(builtin_profiles(false).size() == 7);
  CHECK_THROWS_AS(builtin_profile("rsa-2048", false), std::invalid_argument);
}

TEST_CASE("per-transaction totals") {
  CHECK(builtin_profile("ml-dsa-44", false).total_bytes() == 3732);
  CHECK(builtin_profile("ml-dsa-87", false).total_bytes() == 7219);
  CHECK(builtin_profile("ed25519", true).total_bytes() == 64);
}

TEST_CASE("proof-artifact profile reads the live public-input layout") {
  PublicInputs pub{};
  uint64_t n_pub = pub.as_vector().size();
  CHECK(n_pub == 5);

  ArtifactProfile lo = zkace_profile(128, n_pub);
  CHECK(lo.total_bytes() == 320);
  ArtifactProfile hi = zkace_profile(256, n_pub);
  CHECK(hi.total_bytes() == 448);
  ArtifactProfile measured = zkace_profile(Groth16Proof::kByteSize, n_pub);
  CHECK(measured.total_bytes() == 384);
  CHECK(measured.public_input_bytes == 160);
  CHECK(measured.commitment_bytes == 32);
}

TEST_CASE("reduction ratios bracket the claimed range") {
  PublicInputs pub{};
  uint64_t n_pub = pub.as_vector().size();
  double worst = reduction_report(builtin_profile("ml-dsa-44", false),
                                  zkace_profile(256, n_pub))
                     .ratio;
  double best = reduction_report(builtin_profile("ml-dsa-87", false),
                                 zkace_profile(128, n_pub))
                    .ratio;
  CHECK(worst == doctest::Approx(3732.0 / 448.0));
  CHECK(best == doctest::Approx(7219.0 / 320.0));
  CHECK(worst > 8.0);
  CHECK(worst < 8.5);
  CHECK(best > 22.0);
  CHECK(best < 23.0);

  double measured = reduction_report(
                        builtin_profile("ml-dsa-44", false),
                        zkace_profile(Groth16Proof::kByteSize, n_pub))
                        .ratio;
  CHECK(measured >= 8.0);
}

TEST_CASE("equal profiles give ratio 1") {
  ArtifactProfile p = builtin_profile("ed25519", false);
  CHECK(reduction_report(p, p).ratio == doctest::Approx(1.0));
}

TEST_CASE("report rendering") {
  ReductionReport r = reduction_report(builtin_profile("ml-dsa-44", false),
                                       zkace_profile(192, 5));
  std::string j = r.to_json();
  CHECK(j.find("\"ratio\"") != std::string::npos);
  CHECK(j.find("\"footnotes\"") != std::string::npos);
  CHECK(j.find("ml-dsa-44") != std::string::npos);
  std::string t = r.to_table();
  CHECK(t.find("3732 B total") != std::string::npos);
  CHECK(t.find("384 B total") != std::string::npos);
  CHECK(t.find("reduction: 9.7x") != std::string::npos);
  CHECK(r.footnotes.size() == 3);
}
