// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0

#include "r1cs/r1cs.hpp"

#include <stdexcept>

namespace zkace {

LinearCombination LinearCombination::operator+(
    const LinearCombination& o) const {
  LinearCombination out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j >= o.terms_.size() ||
        (i < terms_.size() && terms_[i].var < o.terms_[j].var)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i >= terms_.size() || o.terms_[j].var < terms_[i].var) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Fr c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back({terms_[i].var, c});
      ++i;
      ++j;
    }
  }
  return out;
}

LinearCombination LinearCombination::operator-(
    const LinearCombination& o) const {
  return *this + o.scaled(-Fr::one());
}

LinearCombination LinearCombination::scaled(const Fr& k) const {
  LinearCombination out;
  if (k.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.var, t.coeff * k});
  return out;
}

Fr LinearCombination::evaluate(const std::vector<Fr>& assignment) const {
  Fr acc = Fr::zero();
  for (const Term& t : terms_) acc += t.coeff * assignment[t.var];
  return acc;
}

VarIndex ConstraintSystem::alloc_public() {
  if (private_allocated_) {
    throw std::logic_error("public variables must be allocated first");
  }
  ++num_public_;
  return num_vars_++;
}

VarIndex ConstraintSystem::alloc_private() {
  private_allocated_ = true;
  return num_vars_++;
}

void ConstraintSystem::enforce(LinearCombination a, LinearCombination b,
                               LinearCombination c) {
  constraints_.push_back({std::move(a), std::move(b), std::move(c)});
}

bool ConstraintSystem::is_satisfied(const std::vector<Fr>& assignment,
                                    size_t* first_failing) const {
  if (assignment.size() != num_vars_ || assignment[0] != Fr::one()) {
    if (first_failing) *first_failing = 0;
    return false;
  }
  for (size_t i = 0; i < constraints_.size(); ++i) {
    const Constraint& c = constraints_[i];
    if (c.a.evaluate(assignment) * c.b.evaluate(assignment) !=
        c.c.evaluate(assignment)) {
      if (first_failing) *first_failing = i;
      return false;
    }
  }
  return true;
}

std::array<uint8_t, 32> ConstraintSystem::digest() const {
  Sha256 h;
  h.update("zkace-r1cs");
  h.update_u32_be(num_vars_);
  h.update_u32_be(num_public_);
  h.update_u32_be((uint32_t)constraints_.size());
  auto feed = [&h](const LinearCombination& lc) {
    h.update_u32_be((uint32_t)lc.terms().size());
    for (const auto& t : lc.terms()) {
      h.update_u32_be(t.var);
      auto b = t.coeff.to_bytes_le();
      h.update(b.data(), b.size());
    }
  };
  for (const Constraint& c : constraints_) {
    feed(c.a);
    feed(c.b);
    feed(c.c);
  }
  return h.finish();
}

}  // namespace zkace
