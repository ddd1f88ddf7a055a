// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "groth16/fft.hpp"

#include <stdexcept>

namespace zkace {

EvaluationDomain::EvaluationDomain(size_t n) {
  size_ = 1;
  log_size_ = 0;
  while (size_ < n) {
    size_ <<= 1;
    ++log_size_;
  }
  if (log_size_ > kFrTwoAdicity) throw std::invalid_argument("domain too big");
  omega_ = fr_root_of_unity();
  for (unsigned i = log_size_; i < kFrTwoAdicity; ++i) omega_ = omega_.square();
  omega_inv_ = omega_.inverse();
  size_inv_ = Fr::from_u64(size_).inverse();
}

void EvaluationDomain::transform(std::vector<Fr>& a, const Fr& root) const {
  if (a.size() != size_) throw std::invalid_argument("size mismatch");
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < size_; ++i) {
    size_t bit = size_ >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= size_; len <<= 1) {
    Fr wlen = root;
    for (size_t l = len; l < size_; l <<= 1) wlen = wlen.square();
    for (size_t i = 0; i < size_; i += len) {
      Fr w = Fr::one();
      for (size_t k = 0; k < len / 2; ++k) {
        Fr u = a[i + k];
        Fr v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

void EvaluationDomain::fft(std::vector<Fr>& a) const { transform(a, omega_); }

void EvaluationDomain::ifft(std::vector<Fr>& a) const {
  transform(a, omega_inv_);
  for (Fr& x : a) x *= size_inv_;
}

void EvaluationDomain::coset_fft(std::vector<Fr>& a) const {
  Fr g = multiplicative_generator();
  Fr cur = Fr::one();
  for (Fr& x : a) {
    x *= cur;
    cur *= g;
  }
  fft(a);
}

void EvaluationDomain::coset_ifft(std::vector<Fr>& a) const {
  ifft(a);
  Fr gi = multiplicative_generator().inverse();
  Fr cur = Fr::one();
  for (Fr& x : a) {
    x *= cur;
    cur *= gi;
  }
}

Fr EvaluationDomain::coset_vanishing() const {
  Fr g = multiplicative_generator();
  Fr acc = g;
  for (unsigned i = 0; i < log_size_; ++i) acc = acc.square();
  return acc - Fr::one();
}

}  // namespace zkace
