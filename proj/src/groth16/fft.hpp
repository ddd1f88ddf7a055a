// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Radix-2 evaluation domain over Fr.

#pragma once

#include <cstddef>
#include <vector>

#include "core/fields.hpp"

namespace zkace {

class EvaluationDomain {
 public:
  // n is rounded up to the next power of two (max 2^28).
  explicit EvaluationDomain(size_t n);

  size_t size() const { return size_; }
  const Fr& omega() const { return omega_; }

  // In-place bit-reversal FFT; input/output in natural order.
  void fft(std::vector<Fr>& a) const;
  void ifft(std::vector<Fr>& a) const;

  // Evaluation over the coset g*H with g the Fr multiplicative generator.
  void coset_fft(std::vector<Fr>& a) const;
  void coset_ifft(std::vector<Fr>& a) const;

  // Z_H(g) = g^n - 1, the vanishing polynomial on the coset (constant there).
  Fr coset_vanishing() const;

  static Fr multiplicative_generator() { return Fr::from_u64(5); }

 private:
  void transform(std::vector<Fr>& a, const Fr& root) const;

  size_t size_;
  unsigned log_size_;
  Fr omega_, omega_inv_, size_inv_;
};

}  // namespace zkace
