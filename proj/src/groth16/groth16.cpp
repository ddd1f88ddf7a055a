// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "groth16/groth16.hpp"

#include <cstring>
#include <stdexcept>

#include "groth16/fft.hpp"

namespace zkace {

namespace {

// Fixed-base windowed multiplication for the repeated generator
// multiplications in setup.
template <typename P>
class FixedBaseTable {
 public:
  static constexpr unsigned kWindow = 4;
  static constexpr unsigned kWindows = 256 / kWindow;

  explicit FixedBaseTable(const P& base) {
    table_.resize(kWindows * 15);
    P cur = base;
    for (unsigned w = 0; w < kWindows; ++w) {
      P acc = P::infinity();
      for (unsigned k = 1; k <= 15; ++k) {
        acc = acc + cur;
        table_[w * 15 + (k - 1)] = acc;
      }
      for (unsigned i = 0; i < kWindow; ++i) cur = cur.dbl();
    }
  }

  P mul(const Fr& s) const {
    U256 k = s.to_u256();
    P acc = P::infinity();
    for (unsigned w = 0; w < kWindows; ++w) {
      unsigned limb = w / 16;
      unsigned shift = (w % 16) * kWindow;
      unsigned digit = (unsigned)((k.limb[limb] >> shift) & 0xf);
      if (digit) acc = acc + table_[w * 15 + (digit - 1)];
    }
    return acc;
  }

 private:
  std::vector<P> table_;
};

// Pippenger bucket MSM.
template <typename P>
P msm(const std::vector<P>& bases, const std::vector<Fr>& scalars) {
  if (bases.size() != scalars.size()) {
    throw std::invalid_argument("msm size mismatch");
  }
  size_t n = bases.size();
  if (n == 0) return P::infinity();
  unsigned c = n < 32 ? 3 : (n < 1024 ? 6 : 8);
  unsigned windows = (254 + c - 1) / c;
  std::vector<U256> ks(n);
  for (size_t i = 0; i < n; ++i) ks[i] = scalars[i].to_u256();

  P result = P::infinity();
  for (int w = (int)windows - 1; w >= 0; --w) {
    for (unsigned i = 0; i < c; ++i) result = result.dbl();
    std::vector<P> buckets((size_t)1 << c, P::infinity());
    unsigned lo = (unsigned)w * c;
    for (size_t i = 0; i < n; ++i) {
      unsigned limb = lo / 64, off = lo % 64;
      uint64_t d = ks[i].limb[limb] >> off;
      if (off + c > 64 && limb < 3) d |= ks[i].limb[limb + 1] << (64 - off);
      d &= ((uint64_t)1 << c) - 1;
      if (d) buckets[d] = buckets[d] + bases[i];
    }
    P run = P::infinity(), sum = P::infinity();
    for (size_t b = buckets.size() - 1; b >= 1; --b) {
      run = run + buckets[b];
      sum = sum + run;
    }
    result = result + sum;
  }
  return result;
}

// Montgomery batch inversion.
void batch_invert(std::vector<Fr>& xs) {
  std::vector<Fr> prefix(xs.size());
  Fr acc = Fr::one();
  for (size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc *= xs[i];
  }
  Fr inv = acc.inverse();
  for (size_t i = xs.size(); i-- > 0;) {
    Fr tmp = inv * prefix[i];
    inv *= xs[i];
    xs[i] = tmp;
  }
}

struct QapEvaluation {
  std::vector<Fr> u, v, w;  // per-variable polynomial values at tau
  Fr vanishing;             // Z(tau)
  size_t domain_size;
};

// Evaluates the QAP polynomials at tau. Public inputs (and the constant)
// get an extra consistency row each so their u-polynomials stay linearly
// independent.
QapEvaluation evaluate_qap(const ConstraintSystem& cs, const Fr& tau) {
  size_t m = cs.num_constraints();
  size_t inputs = (size_t)cs.num_public() + 1;
  EvaluationDomain dom(m + inputs);
  size_t n = dom.size();

  // Lagrange values L_i(tau) = Z(tau) w^i / (n (tau - w^i)).
  Fr z_tau = tau.pow(U256((uint64_t)n)) - Fr::one();
  std::vector<Fr> denom(n);
  Fr wi = Fr::one();
  Fr n_inv = Fr::from_u64(n).inverse();
  std::vector<Fr> wpow(n);
  for (size_t i = 0; i < n; ++i) {
    wpow[i] = wi;
    denom[i] = tau - wi;
    wi *= dom.omega();
  }
  batch_invert(denom);
  std::vector<Fr> lag(n);
  for (size_t i = 0; i < n; ++i) lag[i] = z_tau * wpow[i] * n_inv * denom[i];

  QapEvaluation q;
  q.domain_size = n;
  q.vanishing = z_tau;
  size_t nv = cs.num_variables();
  q.u.assign(nv, Fr::zero());
  q.v.assign(nv, Fr::zero());
  q.w.assign(nv, Fr::zero());
  const auto& constraints = cs.constraints();
  for (size_t i = 0; i < m; ++i) {
    for (const auto& t : constraints[i].a.terms()) q.u[t.var] += t.coeff * lag[i];
    for (const auto& t : constraints[i].b.terms()) q.v[t.var] += t.coeff * lag[i];
    for (const auto& t : constraints[i].c.terms()) q.w[t.var] += t.coeff * lag[i];
  }
  for (size_t j = 0; j < inputs; ++j) q.u[j] += lag[m + j];
  return q;
}

// Domain evaluations of <A_i, z>, <B_i, z>, <C_i, z> including the
// consistency rows; returns the h(x) coefficient vector.
std::vector<Fr> compute_h(const ConstraintSystem& cs,
                          const std::vector<Fr>& z) {
  size_t m = cs.num_constraints();
  size_t inputs = (size_t)cs.num_public() + 1;
  EvaluationDomain dom(m + inputs);
  size_t n = dom.size();
  std::vector<Fr> a(n, Fr::zero()), b(n, Fr::zero()), c(n, Fr::zero());
  const auto& constraints = cs.constraints();
  for (size_t i = 0; i < m; ++i) {
    a[i] = constraints[i].a.evaluate(z);
    b[i] = constraints[i].b.evaluate(z);
    c[i] = constraints[i].c.evaluate(z);
  }
  for (size_t j = 0; j < inputs; ++j) a[m + j] = z[j];

  dom.ifft(a);
  dom.ifft(b);
  dom.ifft(c);
  dom.coset_fft(a);
  dom.coset_fft(b);
  dom.coset_fft(c);
  Fr zinv = dom.coset_vanishing().inverse();
  for (size_t i = 0; i < n; ++i) a[i] = (a[i] * b[i] - c[i]) * zinv;
  dom.coset_ifft(a);
  return a;  // degree <= n - 2
}

void put_g1(Bytes& out, const G1& p) {
  auto b = g1_compress(p);
  out.insert(out.end(), b.begin(), b.end());
}
void put_g2(Bytes& out, const G2& p) {
  auto b = g2_serialize(p);
  out.insert(out.end(), b.begin(), b.end());
}
void put_u32(Bytes& out, uint32_t v) { append_u32_le(out, v); }

struct Reader {
  const uint8_t* p;
  size_t left;
  bool ok = true;

  bool take(size_t n, const uint8_t** out) {
    if (left < n) {
      ok = false;
      return false;
    }
    *out = p;
    p += n;
    left -= n;
    return true;
  }
  bool g1(G1& out) {
    const uint8_t* b;
    if (!take(32, &b)) return false;
    auto r = g1_decompress(b);
    if (!r) {
      ok = false;
      return false;
    }
    out = *r;
    return true;
  }
  bool g2(G2& out) {
    const uint8_t* b;
    if (!take(128, &b)) return false;
    auto r = g2_deserialize(b);
    if (!r) {
      ok = false;
      return false;
    }
    out = *r;
    return true;
  }
  bool u32(uint32_t& v) {
    const uint8_t* b;
    if (!take(4, &b)) return false;
    v = (uint32_t)b[0] | ((uint32_t)b[1] << 8) | ((uint32_t)b[2] << 16) |
        ((uint32_t)b[3] << 24);
    return true;
  }
};

}  // namespace

std::array<uint8_t, Groth16Proof::kByteSize> Groth16Proof::to_bytes() const {
  std::array<uint8_t, kByteSize> out{};
  auto ab = g1_compress(a);
  auto bb = g2_serialize(b);
  auto cb = g1_compress(c);
  std::memcpy(out.data(), ab.data(), 32);
  std::memcpy(out.data() + 32, bb.data(), 128);
  std::memcpy(out.data() + 160, cb.data(), 32);
  return out;
}

std::optional<Groth16Proof> Groth16Proof::from_bytes(const uint8_t* data,
                                                     size_t len) {
  if (len != kByteSize) return std::nullopt;
  auto a = g1_decompress(data);
  auto b = g2_deserialize(data + 32);
  auto c = g1_decompress(data + 160);
  if (!a || !b || !c) return std::nullopt;
  return Groth16Proof{*a, *b, *c};
}

Bytes Groth16VerifyingKey::to_bytes() const {
  Bytes out;
  put_g1(out, alpha_g1);
  put_g2(out, beta_g2);
  put_g2(out, gamma_g2);
  put_g2(out, delta_g2);
  put_u32(out, (uint32_t)ic.size());
  for (const G1& p : ic) put_g1(out, p);
  return out;
}

std::optional<Groth16VerifyingKey> Groth16VerifyingKey::from_bytes(
    const Bytes& data) {
  Reader r{data.data(), data.size()};
  Groth16VerifyingKey vk;
  uint32_t n = 0;
  if (!r.g1(vk.alpha_g1) || !r.g2(vk.beta_g2) || !r.g2(vk.gamma_g2) ||
      !r.g2(vk.delta_g2) || !r.u32(n)) {
    return std::nullopt;
  }
  if (n > (1u << 20)) return std::nullopt;
  vk.ic.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    if (!r.g1(vk.ic[i])) return std::nullopt;
  }
  if (r.left != 0) return std::nullopt;
  return vk;
}

Bytes Groth16ProvingKey::to_bytes() const {
  Bytes out;
  put_g1(out, alpha_g1);
  put_g1(out, beta_g1);
  put_g1(out, delta_g1);
  put_g2(out, beta_g2);
  put_g2(out, delta_g2);
  put_u32(out, num_public);
  auto vec1 = [&out](const std::vector<G1>& v) {
    put_u32(out, (uint32_t)v.size());
    for (const G1& p : v) put_g1(out, p);
  };
  vec1(a_query);
  vec1(b_g1_query);
  put_u32(out, (uint32_t)b_g2_query.size());
  for (const G2& p : b_g2_query) put_g2(out, p);
  vec1(h_query);
  vec1(l_query);
  return out;
}

std::optional<Groth16ProvingKey> Groth16ProvingKey::from_bytes(
    const Bytes& data) {
  Reader r{data.data(), data.size()};
  Groth16ProvingKey pk;
  if (!r.g1(pk.alpha_g1) || !r.g1(pk.beta_g1) || !r.g1(pk.delta_g1) ||
      !r.g2(pk.beta_g2) || !r.g2(pk.delta_g2) || !r.u32(pk.num_public)) {
    return std::nullopt;
  }
  auto vec1 = [&r](std::vector<G1>& v) {
    uint32_t n = 0;
    if (!r.u32(n) || n > (1u << 24)) return false;
    v.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
      if (!r.g1(v[i])) return false;
    }
    return true;
  };
  if (!vec1(pk.a_query) || !vec1(pk.b_g1_query)) return std::nullopt;
  uint32_t n2 = 0;
  if (!r.u32(n2) || n2 > (1u << 24)) return std::nullopt;
  pk.b_g2_query.resize(n2);
  for (uint32_t i = 0; i < n2; ++i) {
    if (!r.g2(pk.b_g2_query[i])) return std::nullopt;
  }
  if (!vec1(pk.h_query) || !vec1(pk.l_query)) return std::nullopt;
  if (r.left != 0) return std::nullopt;
  return pk;
}

Groth16KeyPair groth16_setup(const ConstraintSystem& cs, Rng& rng) {
  Fr tau = rng.next_fr(), alpha = rng.next_fr(), beta = rng.next_fr();
  Fr gamma = rng.next_fr(), delta = rng.next_fr();
  while (tau.is_zero()) tau = rng.next_fr();

  QapEvaluation q = evaluate_qap(cs, tau);
  size_t nv = cs.num_variables();
  size_t inputs = (size_t)cs.num_public() + 1;
  Fr gamma_inv = gamma.inverse();
  Fr delta_inv = delta.inverse();

  FixedBaseTable<G1> t1(g1_generator());
  FixedBaseTable<G2> t2(g2_generator());

  Groth16KeyPair kp;
  Groth16ProvingKey& pk = kp.pk;
  Groth16VerifyingKey& vk = kp.vk;

  pk.alpha_g1 = t1.mul(alpha);
  pk.beta_g1 = t1.mul(beta);
  pk.delta_g1 = t1.mul(delta);
  pk.beta_g2 = t2.mul(beta);
  pk.delta_g2 = t2.mul(delta);
  pk.num_public = cs.num_public();

  vk.alpha_g1 = pk.alpha_g1;
  vk.beta_g2 = pk.beta_g2;
  vk.gamma_g2 = t2.mul(gamma);
  vk.delta_g2 = pk.delta_g2;

  pk.a_query.resize(nv);
  pk.b_g1_query.resize(nv);
  pk.b_g2_query.resize(nv);
  vk.ic.resize(inputs);
  pk.l_query.resize(nv - inputs);
  for (size_t j = 0; j < nv; ++j) {
    pk.a_query[j] = t1.mul(q.u[j]);
    pk.b_g1_query[j] = t1.mul(q.v[j]);
    pk.b_g2_query[j] = t2.mul(q.v[j]);
    Fr k = beta * q.u[j] + alpha * q.v[j] + q.w[j];
    if (j < inputs) {
      vk.ic[j] = t1.mul(k * gamma_inv);
    } else {
      pk.l_query[j - inputs] = t1.mul(k * delta_inv);
    }
  }

  size_t n = q.domain_size;
  pk.h_query.resize(n - 1);
  Fr cur = q.vanishing * delta_inv;
  for (size_t i = 0; i + 1 < n; ++i) {
    pk.h_query[i] = t1.mul(cur);
    cur *= tau;
  }
  return kp;
}

Groth16Proof groth16_prove(const Groth16ProvingKey& pk,
                           const ConstraintSystem& cs,
                           const std::vector<Fr>& assignment, Rng& rng) {
  if (assignment.size() != cs.num_variables() ||
      pk.a_query.size() != assignment.size()) {
    throw std::invalid_argument("assignment does not match proving key");
  }
  size_t inputs = (size_t)pk.num_public + 1;
  Fr r = rng.next_fr(), s = rng.next_fr();

  std::vector<Fr> h = compute_h(cs, assignment);
  h.resize(pk.h_query.size());

  G1 a = pk.alpha_g1 + msm(pk.a_query, assignment) + g1_mul(pk.delta_g1, r);
  G2 b = pk.beta_g2 + msm(pk.b_g2_query, assignment) + g2_mul(pk.delta_g2, s);
  G1 b1 = pk.beta_g1 + msm(pk.b_g1_query, assignment) + g1_mul(pk.delta_g1, s);

  std::vector<Fr> priv(assignment.begin() + inputs, assignment.end());
  G1 c = msm(pk.l_query, priv) + msm(pk.h_query, h) + g1_mul(a, s) +
         g1_mul(b1, r) - g1_mul(pk.delta_g1, r * s);
  return {a, b, c};
}

bool groth16_verify(const Groth16VerifyingKey& vk,
                    const std::vector<Fr>& public_inputs,
                    const Groth16Proof& proof) {
  if (public_inputs.size() + 1 != vk.ic.size()) return false;
  if (!g1_valid(proof.a) || !g2_valid(proof.b) || !g1_valid(proof.c)) {
    return false;
  }
  G1 acc = vk.ic[0];
  for (size_t i = 0; i < public_inputs.size(); ++i) {
    acc = acc + g1_mul(vk.ic[i + 1], public_inputs[i]);
  }
  // e(A, B) = e(alpha, beta) e(acc, gamma) e(C, delta)
  return pairing_product_is_one({{-proof.a, proof.b},
                                 {vk.alpha_g1, vk.beta_g2},
                                 {acc, vk.gamma_g2},
                                 {proof.c, vk.delta_g2}});
}

bool groth16_batch_verify(
    const Groth16VerifyingKey& vk,
    const std::vector<std::pair<std::vector<Fr>, Groth16Proof>>& items,
    Rng& rng, size_t* failing_index) {
  if (items.empty()) return true;
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].first.size() + 1 != vk.ic.size()) {
      if (failing_index) *failing_index = i;
      return false;
    }
  }

  // Random 126-bit combiners keep soundness error negligible while
  // halving the scalar-multiplication cost.
  std::vector<std::pair<G1, G2>> pairs;
  pairs.reserve(items.size() + 3);
  Fr rho_sum = Fr::zero();
  G1 ic_sum = G1::infinity();
  G1 c_sum = G1::infinity();
  bool structurally_ok = true;
  for (const auto& [pub, proof] : items) {
    if (!g1_valid(proof.a) || !g2_valid(proof.b) || !g1_valid(proof.c)) {
      structurally_ok = false;
      break;
    }
    Fr rho = Fr::from_u256(
        U256(rng.next_u64(), rng.next_u64() & 0x3fffffffffffffffULL, 0, 0));
    rho_sum += rho;
    G1 acc = vk.ic[0];
    for (size_t i = 0; i < pub.size(); ++i) {
      acc = acc + g1_mul(vk.ic[i + 1], pub[i]);
    }
    ic_sum = ic_sum + g1_mul(acc, rho);
    c_sum = c_sum + g1_mul(proof.c, rho);
    pairs.push_back({g1_mul(-proof.a, rho), proof.b});
  }
  if (structurally_ok) {
    pairs.push_back({g1_mul(vk.alpha_g1, rho_sum), vk.beta_g2});
    pairs.push_back({ic_sum, vk.gamma_g2});
    pairs.push_back({c_sum, vk.delta_g2});
    if (pairing_product_is_one(pairs)) return true;
  }

  // Slow path: identify the first failing proof.
  for (size_t i = 0; i < items.size(); ++i) {
    if (!groth16_verify(vk, items[i].first, items[i].second)) {
      if (failing_index) *failing_index = i;
      return false;
    }
  }
  // The combined check failed but the items pass individually; treat the
  // batch as valid (the randomized check has a tiny false-negative chance
  // only if rho collided, which cannot happen with distinct items).
  return true;
}

G1 g1_msm(const std::vector<G1>& bases, const std::vector<Fr>& scalars) {
  return msm(bases, scalars);
}

}  // namespace zkace
