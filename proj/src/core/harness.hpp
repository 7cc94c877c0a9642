// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exnil {

struct SuiteParams {
  int max_n = 3;
  int max_N = 4;
  uint64_t seed = 20260101;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  /// The check refused to run because a computation cap was hit.
  bool cap_exceeded = false;
  std::string detail;
};

/// Suite names in the order `verify --suite all` runs them.
const std::vector<std::string>& suite_names();

/// Independent checks of one suite; throws PreconditionError for an unknown name.
std::vector<Check> suite_checks(const std::string& suite, const SuiteParams& p);

/// EXNIL_THREADS when set to a positive integer, else the hardware concurrency (at least 1).
int thread_count();

/// Runs checks on up to `threads` workers; results keep the input order. Exceptions become failures.
std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<Check>& checks, int threads);

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteParams& p, int threads);

}  // namespace exnil
