// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Optimal ate pairing on BN254.

#pragma once

#include <vector>

#include "curve/curve.hpp"

namespace zkace {

// Product of Miller loops over the given pairs; infinity pairs contribute 1.
Fq12 multi_miller_loop(const std::vector<std::pair<G1, G2>>& pairs);

Fq12 final_exponentiation(const Fq12& f);

Fq12 pairing(const G1& p, const G2& q);

// True iff the product of pairings over all pairs equals one.
bool pairing_product_is_one(const std::vector<std::pair<G1, G2>>& pairs);

}  // namespace zkace
