// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Frozen digests, computed with the straight-line GMP oracle before the
// native implementation was wired up.
#pragma once

#define ZKACE_FROZEN_HASH_3_7_11 \
  "27e9aa6a3575ab804952be701ae1a9569247e3f8065067caa7d533dc27d0733e"
#define ZKACE_FROZEN_TX_100 \
  "195058e91691568c355922c4cca7ecef267b9f2b03b1b0ceb1b74aa73c786f1a"

// derive / derive_target for rev_bytes = 00 01 ... 1f (little-endian) and
// context (alg_id=1, ctx_domain=2, index=3).
#define ZKACE_FROZEN_DERIVE \
  "239ffa60f9434f0fa9efe6ac8e0f4a82473e70af63e37eeb8a3e2bcd349e551e"
#define ZKACE_FROZEN_DERIVE_TARGET \
  "0976e1a6129dfeeddb6687766e06302adb68164352319cceaeda3de502b63909"
