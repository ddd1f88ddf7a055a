// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle/poseidon_oracle.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace zkace::oracle {

namespace {

mpz_class from_hex(const std::string& h) { return mpz_class(h, 16); }

std::string to_hex64(const mpz_class& v) {
  std::string s = v.get_str(16);
  if (s.size() < 64) s = std::string(64 - s.size(), '0') + s;
  return s;
}

mpz_class powmod(const mpz_class& b, unsigned e, const mpz_class& p) {
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), e, p.get_mpz_t());
  return r;
}

}  // namespace

OracleParams load_params_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  OracleParams p;
  p.p = from_hex(j.at("modulus").get<std::string>());
  p.width = j.at("width").get<unsigned>();
  p.rate = j.at("rate").get<unsigned>();
  p.alpha = j.at("alpha").get<unsigned>();
  p.full_rounds = j.at("full_rounds").get<unsigned>();
  p.partial_rounds = j.at("partial_rounds").get<unsigned>();
  for (const auto& c : j.at("round_constants")) {
    p.round_constants.push_back(from_hex(c.get<std::string>()));
  }
  for (const auto& row : j.at("mds")) {
    std::vector<mpz_class> r;
    for (const auto& c : row) r.push_back(from_hex(c.get<std::string>()));
    p.mds.push_back(r);
  }
  if (p.round_constants.size() != p.width * (p.full_rounds + p.partial_rounds))
    throw std::invalid_argument("oracle: bad round constant count");
  return p;
}

void permute(const OracleParams& p, std::vector<mpz_class>& state) {
  if (state.size() != p.width) throw std::invalid_argument("oracle: bad state");
  const unsigned half = p.full_rounds / 2;
  const unsigned total = p.full_rounds + p.partial_rounds;
  size_t rc = 0;
  for (unsigned r = 0; r < total; ++r) {
    for (unsigned i = 0; i < p.width; ++i) {
      state[i] = (state[i] + p.round_constants[rc++]) % p.p;
    }
    bool full = r < half || r >= half + p.partial_rounds;
    unsigned nsbox = full ? p.width : 1;
    for (unsigned i = 0; i < nsbox; ++i) state[i] = powmod(state[i], p.alpha, p.p);
    std::vector<mpz_class> mixed(p.width, 0);
    for (unsigned i = 0; i < p.width; ++i) {
      for (unsigned jj = 0; jj < p.width; ++jj) {
        mixed[i] = (mixed[i] + p.mds[i][jj] * state[jj]) % p.p;
      }
    }
    state = mixed;
  }
}

std::string hash_hex(const OracleParams& p,
                     const std::vector<std::string>& inputs_hex, unsigned tag) {
  std::vector<mpz_class> inputs;
  for (const auto& h : inputs_hex) inputs.push_back(from_hex(h));
  std::vector<mpz_class> state(p.width, 0);
  state[p.width - 1] = mpz_class(tag) + mpz_class(inputs.size()) * 256;
  for (size_t i = 0; i < inputs.size(); i += p.rate) {
    for (unsigned r = 0; r < p.rate && i + r < inputs.size(); ++r) {
      state[r] = (state[r] + inputs[i + r]) % p.p;
    }
    permute(p, state);
  }
  return to_hex64(state[0]);
}

}  // namespace zkace::oracle
