// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Rank-1 constraint system: a * b = c over linear combinations of wires.
// Variable 0 is the constant one; public inputs occupy 1..num_public.

#pragma once

#include <cstdint>
#include <vector>

#include "core/fields.hpp"
#include "core/sha256.hpp"

namespace zkace {

using VarIndex = uint32_t;

class LinearCombination {
 public:
  struct Term {
    VarIndex var;
    Fr coeff;
  };

  LinearCombination() = default;

  static LinearCombination constant(const Fr& c) {
    LinearCombination lc;
    if (!c.is_zero()) lc.terms_.push_back({0, c});
    return lc;
  }
  static LinearCombination variable(VarIndex v, const Fr& coeff = Fr::one()) {
    LinearCombination lc;
    if (!coeff.is_zero()) lc.terms_.push_back({v, coeff});
    return lc;
  }

  LinearCombination operator+(const LinearCombination& o) const;
  LinearCombination operator-(const LinearCombination& o) const;
  LinearCombination scaled(const Fr& k) const;
  LinearCombination operator+(const Fr& c) const {
    return *this + constant(c);
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Fr evaluate(const std::vector<Fr>& assignment) const;

 private:
  // Sorted by var index, coefficients nonzero.
  std::vector<Term> terms_;
};

struct Constraint {
  LinearCombination a, b, c;
};

class ConstraintSystem {
 public:
  VarIndex alloc_public();
  VarIndex alloc_private();

  void enforce(LinearCombination a, LinearCombination b, LinearCombination c);

  uint32_t num_variables() const { return num_vars_; }
  uint32_t num_public() const { return num_public_; }
  size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // assignment[0] must be one; size must equal num_variables().
  bool is_satisfied(const std::vector<Fr>& assignment,
                    size_t* first_failing = nullptr) const;

  // Content digest of the constraint matrices (for circuit identifiers).
  std::array<uint8_t, 32> digest() const;

 private:
  uint32_t num_vars_ = 1;
  uint32_t num_public_ = 0;
  bool private_allocated_ = false;
  std::vector<Constraint> constraints_;
};

}  // namespace zkace
