// Copyright 2026 The zkace Authors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark harness: median wall-clock timings over warm iterations for
// every core operation, plus a mock-backend transaction pipeline run.
// Single-threaded by default for comparability; reference medians from the
// original measurement hardware are carried in the report as context, not
// as pass/fail bounds.

#pragma once

#include "chain/chain.hpp"

namespace zkace {

struct BenchStat {
  std::string op;
  uint64_t iterations = 0;
  double median_ms = 0.0;
  double p25_ms = 0.0;  // interquartile range around the median
  double p75_ms = 0.0;
  double reference_ms = 0.0;  // 0 when no reference line exists
  std::string note;
};

struct BenchConfig {
  uint64_t iterations = 20;    // warm iterations per operation
  uint64_t batch_size = 16;    // batch-verify and process_batch size
  uint64_t pipeline_txs = 2000;
  std::array<uint8_t, 32> seed{};
  ReplayMode mode = ReplayMode::kNonceRegistry;
  bool include_setup = true;   // setup is the slowest op; optional
  // Opt-in: adds a multi-threaded verification stat, reported separately
  // from the single-threaded baseline numbers.
  bool parallel = false;
};

struct BenchReport {
  std::string hardware;
  uint64_t threads = 1;
  BenchConfig config;
  std::vector<BenchStat> stats;

  const BenchStat* find(const std::string& op) const;
  std::string to_json() const;
  std::string to_table() const;
};

std::string hardware_descriptor();

BenchReport run_bench(const PoseidonParams& params, const BenchConfig& cfg);

}  // namespace zkace
