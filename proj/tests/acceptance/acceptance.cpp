// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
//
// Every criterion is exact; the only tolerances are wall-clock limits, pinned below.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "harness.hpp"

namespace {

using exnil::SuiteParams;

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  SuiteParams params;
  /// Wall-clock limit in seconds; nullopt when the criterion states none.
  std::optional<double> limit_s;
};

SuiteParams params(int max_n, int max_N) {
  SuiteParams p;
  p.max_n = max_n;
  p.max_N = max_N;
  return p;
}

const std::vector<Criterion> kCriteria = {
    {1, "Schubert and dual Schubert tables of S_3", "schubert-table", params(3, 3), 1.0},
    {2, "defining relations and dot slides (a <= 4) normalize, n <= 4", "relations", params(4, 4), 30.0},
    {3, "2^n independent wedges and decompose/reconstruct round trips, n = 2..4", "rank", params(4, 4), 60.0},
    {4, "kernel test agrees with coefficient test on 200 inputs per n <= 3", "membership", params(3, 3), std::nullopt},
    {5, "differential restricted to dual generators, n <= 4, n-1 <= N <= 6", "restrict", params(4, 6), std::nullopt},
    {6, "Grassmannian cohomology equals [N choose n]_{q^2}", "cohomology", params(3, 5), 60.0},
    {7, "deformed quotient: total 6 with blocks 1, 4, 1", "deformed", params(2, 4), std::nullopt},
    {8, "idempotents and matrix isomorphism, n <= 3", "idempotents", params(3, 3), std::nullopt},
    {9, "symmetric function identities, n <= 5, N <= 6", "identities", params(5, 6), std::nullopt},
    {10, "H Q = Id, E Qtilde = Id (n <= 4); J map and triple lemma", "solomon", params(4, 4), std::nullopt},
    {11, "deformed cyclotomic ideal identities, n <= 3, N <= 4, y <= 2", "ideal", params(3, 4), 120.0},
};

}  // namespace

int main() {
  const int threads = exnil::thread_count();
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<exnil::CheckResult> results;
    std::string error;
    try {
      results = exnil::run_suite(c.suite, c.params, threads);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    size_t passed = 0;
    std::string first_failure;
    for (const auto& r : results) {
      if (r.pass) ++passed;
      else if (first_failure.empty()) first_failure = r.name + (r.detail.empty() ? "" : ": " + r.detail);
    }
    const bool in_time = !c.limit_s || secs < *c.limit_s;
    const bool ok = error.empty() && !results.empty() && passed == results.size() && in_time;
    if (!ok) ++failed;

    std::printf("criterion %2d  %s  %-72s %zu/%zu checks  %.2f s", c.id, ok ? "PASS" : "FAIL", c.title, passed, results.size(),
                secs);
    if (c.limit_s) std::printf(" (limit %.0f s)", *c.limit_s);
    std::printf("\n");
    if (!error.empty()) std::printf("              error: %s\n", error.c_str());
    if (!first_failure.empty()) std::printf("              first failure: %s\n", first_failure.c_str());
    if (!in_time) std::printf("              over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", kCriteria.size() - static_cast<size_t>(failed), kCriteria.size());
  return failed == 0 ? 0 : 1;
}
