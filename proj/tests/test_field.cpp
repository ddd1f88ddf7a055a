// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <gmpxx.h>

#include "core/fields.hpp"
#include "core/rng.hpp"

using namespace zkace;

namespace {

mpz_class to_mpz(const U256& v) { return mpz_class(v.to_hex(), 16); }

mpz_class fr_mod() { return to_mpz(Fr::modulus()); }

Fr from_mpz(const mpz_class& v) {
  mpz_class r = v % fr_mod();
  if (r < 0) r += fr_mod();
  std::string s = r.get_str(16);
  Fr out;
  REQUIRE(Fr::from_hex(s, out));
  return out;
}

}  // namespace

TEST_CASE("montgomery arithmetic matches gmp") {
  std::array<uint8_t, 32> seed{};
  seed[0] = 1;
  Rng rng(seed);
  mpz_class p = fr_mod();
  for (int i = 0; i < 2000; ++i) {
    Fr a = rng.next_fr();
    Fr b = rng.next_fr();
    mpz_class am = to_mpz(a.to_u256());
    mpz_class bm = to_mpz(b.to_u256());
    CHECK((a + b) == from_mpz(am + bm));
    CHECK((a - b) == from_mpz(am - bm));
    CHECK((a * b) == from_mpz(am * bm));
    CHECK((-a) == from_mpz(-am));
    if (!a.is_zero()) {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), p.get_mpz_t());
      CHECK(a.inverse() == from_mpz(inv));
      CHECK(a * a.inverse() == Fr::one());
    }
  }
}

TEST_CASE("pow matches gmp") {
  std::array<uint8_t, 32> seed{};
  seed[0] = 2;
  Rng rng(seed);
  mpz_class p = fr_mod();
  for (int i = 0; i < 50; ++i) {
    Fr a = rng.next_fr();
    Fr e = rng.next_fr();
    mpz_class am = to_mpz(a.to_u256());
    mpz_class em = to_mpz(e.to_u256());
    mpz_class r;
    mpz_powm(r.get_mpz_t(), am.get_mpz_t(), em.get_mpz_t(), p.get_mpz_t());
    CHECK(a.pow(e.to_u256()) == from_mpz(r));
  }
}

TEST_CASE("canonical 32-byte little-endian round trip") {
  std::array<uint8_t, 32> seed{};
  seed[0] = 3;
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Fr a = rng.next_fr();
    auto bytes = a.to_bytes_le();
    Fr back;
    REQUIRE(Fr::from_bytes_le(bytes.data(), back));
    CHECK(back == a);
    CHECK(back.to_bytes_le() == bytes);
  }
}

TEST_CASE("encodings >= p are rejected") {
  auto bytes = Fr::modulus().to_bytes_le();
  Fr out;
  CHECK_FALSE(Fr::from_bytes_le(bytes.data(), out));
  uint8_t ff[32];
  std::memset(ff, 0xff, 32);
  CHECK_FALSE(Fr::from_bytes_le(ff, out));
  CHECK_FALSE(Fr::from_hex("g", out));
}

TEST_CASE("hex display is big-endian") {
  CHECK(Fr::from_u64(0x1234).to_hex() ==
        "0000000000000000000000000000000000000000000000000000000000001234");
}

TEST_CASE("fq sqrt") {
  std::array<uint8_t, 32> seed{};
  seed[0] = 4;
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    Fq a = rng.next_fq();
    Fq sq = a.square();
    Fq r;
    REQUIRE(fq_sqrt(sq, r));
    CHECK((r == a || r == -a));
  }
}

TEST_CASE("fr two-adic root of unity") {
  Fr w = fr_root_of_unity();
  Fr acc = w;
  for (unsigned i = 0; i < kFrTwoAdicity; ++i) acc = acc.square();
  CHECK(acc == Fr::one());
  // Order is exactly 2^28.
  acc = w;
  for (unsigned i = 0; i + 1 < kFrTwoAdicity; ++i) acc = acc.square();
  CHECK(acc != Fr::one());
  CHECK(acc.square() == Fr::one());
}
