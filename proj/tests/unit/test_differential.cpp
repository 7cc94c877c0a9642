#include <bit>

#include "differential.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "extsym.hpp"
#include "nilhecke.hpp"
#include "parse.hpp"
#include "sampling.hpp"

using namespace exnil;

namespace {

Poly P(int n, const char* text) { return parse_poly(n, text); }

/// [N choose n]_{q^2} by counting n-subsets of {1..N} by their sum.
GradedDims subset_count(int N, int n) {
  GradedDims g;
  const int base = n * (n + 1) / 2;
  for (uint32_t s = 0; s < (1U << N); ++s) {
    if (std::popcount(s) != n) continue;
    int sum = 0;
    for (int b = 0; b < N; ++b)
      if (s >> b & 1U) sum += b + 1;
    g.add(2 * (sum - base), 1);
  }
  return g;
}

}  // namespace

TEST_SUITE("differential") {

TEST_CASE("images of odd generators") {
  const auto d = DifferentialSpec::undeformed(3);
  CHECK(d_omega(d, 2, 1) == P(2, "-x1^3"));
  CHECK(d_omega(d, 2, 2) == P(2, "x1^2 + x1*x2 + x2^2"));
  const SuperPoly v = parse_superpoly(2, "w1*w2");
  CHECK(apply_d(d, v) == parse_superpoly(2, "-x1^3*w2 - (x1^2 + x1*x2 + x2^2)*w1"));
  CHECK(apply_d(d, parse_superpoly(2, "x1 + x2")).is_zero());
}

TEST_CASE("differential squares to zero and is an odd derivation") {
  Rng rng(51);
  for (int N = 1; N <= 4; ++N) {
    const auto d = DifferentialSpec::undeformed(N);
    for (int t = 0; t < 10; ++t) {
      const SuperPoly a = random_superpoly(rng, 3, 2, 3).exterior_part(1), b = random_superpoly(rng, 3, 2, 3);
      CHECK(apply_d(d, apply_d(d, b)).is_zero());
      CHECK(apply_d(d, a * b) == apply_d(d, a) * b - a * apply_d(d, b));
    }
  }
}

TEST_CASE("deformed sign conventions") {
  const RootMultiset zero({Rat(0), Rat(0), Rat(0)});
  const auto printed = DifferentialSpec::deformed(zero, SigmaSign::AsPrinted);
  const auto matched = DifferentialSpec::deformed(zero, SigmaSign::MatchUndeformed);
  const auto plain = DifferentialSpec::undeformed(3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(d_omega(matched, 3, i) == d_omega(plain, 3, i));
    CHECK(d_omega(printed, 3, i) == -d_omega(plain, 3, i));
  }
}

TEST_CASE("root multisets") {
  const RootMultiset r = parse_roots("0:2,1:2");
  CHECK(r.N() == 4);
  CHECK(r.kappas() == std::vector<Rat>{Rat(-2), Rat(1), Rat(0), Rat(0)});
  CHECK(r.kappa(0) == 1);
  CHECK(r.P(2, 1) == P(2, "x1^4 - 2*x1^3 + x1^2"));
  CHECK(parse_kappas("1,0,-1/2").kappas() == std::vector<Rat>{Rat(1), Rat(0), Rat(-1, 2)});
  CHECK(parse_kappas("0,0").is_undeformed());
  CHECK_THROWS(parse_roots("1:1,1:2"));
  CHECK_THROWS(parse_roots("1:0"));
  CHECK_THROWS(parse_kappas("1,,2"));
}

TEST_CASE("relations are killed") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 4; ++N) CHECK(relations_killed_check(DifferentialSpec::undeformed(N), n));
  CHECK(relations_killed_check(DifferentialSpec::deformed(parse_kappas("1,-1/2,2")), 3));
}

TEST_CASE("restriction to the dual generators") {
  for (int n = 1; n <= 4; ++n)
    for (int N = std::max(1, n - 1); N <= 6; ++N) CHECK(restrict_check(n, N));
  for (int N = 2; N <= 5; ++N) {
    const auto d = DifferentialSpec::undeformed(N);
    CHECK(apply_d(d, hw(3, 3)) == SuperPoly::scalar(-complete(3, N, {1, 3})));
    CHECK(apply_d(d, hw(3, 2)) == SuperPoly::scalar(complete(3, N - 1, {1, 3})));
    CHECK(apply_d(d, hw(3, 1)) == SuperPoly::scalar(-complete(3, N - 2, {1, 3})));
  }
}

TEST_CASE("splitting identity for complete functions") {
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 6; ++N)
      for (int i = 1; i <= n; ++i) CHECK(sym_ident_check(n, N, i));
}

TEST_CASE("Koszul sequence") {
  const auto a = koszul_sequence(DifferentialSpec::undeformed(4), 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == -complete(2, 4, {1, 2}));
  CHECK(a[1] == complete(2, 3, {1, 2}));
}

TEST_CASE("Gaussian binomials match subset counts") {
  for (int N = 0; N <= 7; ++N)
    for (int n = 0; n <= N; ++n) {
      CHECK(gaussian_binomial_sq(N, n) == subset_count(N, n));
      CHECK(binomial(N, n) == subset_count(N, n).total());
    }
}

TEST_CASE("Grassmannian cohomology") {
  for (const auto [n, N] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
    const CohomologyResult c = cohomology_dims(n, DifferentialSpec::undeformed(N));
    CHECK(c.matches);
    CHECK(c.euler_ok);
    CHECK(c.by_ext_degree.front() == subset_count(N, n));
    for (size_t k = 1; k < c.totals.size(); ++k) CHECK(c.totals[k] == 0);
  }
  CHECK(to_string(cohomology_dims(2, DifferentialSpec::undeformed(3)).by_ext_degree.front()) == "1 + q^2 + q^4");
  CHECK(certified_cap(2, 4) == 4);
  CHECK(default_cap(2, 4) == 8);
  CHECK_THROWS_AS(cohomology_dims(2, DifferentialSpec::undeformed(4), 1), CapExceeded);
}

TEST_CASE("deformed quotient splits over the roots") {
  const DeformedResult r = deformed_total_dim(2, parse_roots("0:2,1:2"));
  CHECK(r.total == 6);
  CHECK(r.matches);
  std::map<std::vector<int>, long> dims;
  for (const BlockDim& b : r.blocks) dims[b.parts] = b.dim;
  CHECK(dims == std::map<std::vector<int>, long>{{{2, 0}, 1}, {{1, 1}, 4}, {{0, 2}, 1}});
  CHECK(deformed_total_dim(1, parse_roots("3:1")).total == 1);
  CHECK(deformed_total_dim(2, parse_roots("-1:1,0:1,2:1")).total == 3);
}

TEST_CASE("ideal membership") {
  const RootMultiset sigma = parse_kappas("0,0");
  CHECK(ideal_membership(parse_nh(2, "x1^2"), sigma).status == Membership::Member);
  CHECK(ideal_membership(parse_nh(2, "d1*x1^2"), sigma).status == Membership::Member);
  CHECK(ideal_membership(parse_nh(2, "x2^2"), sigma).status == Membership::Member);
  CHECK(ideal_membership(parse_nh(2, "1"), sigma).status == Membership::Indeterminate);
  CHECK(ideal_membership(parse_nh(2, "x1"), sigma).status == Membership::Indeterminate);
  CHECK_THROWS_AS(ideal_membership(parse_nh(2, "w1"), sigma), PreconditionError);
  CHECK(ideal_membership_spanning(parse_nh(2, "x1^2"), sigma, 2).status == Membership::Member);
  CHECK(ideal_membership_spanning(parse_nh(2, "x2^2*(x1 + x2)"), sigma, 2).status ==
        ideal_membership(parse_nh(2, "x2^2*(x1 + x2)"), sigma).status);
  const RootMultiset deformed = parse_kappas("1,-1/2");
  for (const auto& [label, e] : deformed_ideal_identities(2, deformed, 2)) {
    INFO(label);
    CHECK(ideal_membership(e, deformed).status == Membership::Member);
  }
}

}  // TEST_SUITE
