#include <algorithm>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "sampling.hpp"

using namespace exnil;

namespace {

Poly P(int n, const char* text) { return parse_poly(n, text); }

}  // namespace

TEST_SUITE("corepoly") {

TEST_CASE("arithmetic keeps canonical form") {
  const Poly a = P(2, "x1 + x2"), b = P(2, "x1 - x2");
  CHECK(a * b == P(2, "x1^2 - x2^2"));
  CHECK((a - a).is_zero());
  CHECK((a * Rat(0)).is_zero());
  CHECK(to_string(P(3, "x1^2*x2 - 1/2*x3 + 3/6")) == "x1^2*x2 - 1/2*x3 + 1/2");
  CHECK(to_string(Poly(3)) == "0");
  CHECK(P(2, "(x1 + 1)^3").coeff(Monomial{1, 0}) == 3);
  CHECK(P(2, "2/4*x1").coeff(Monomial{1, 0}) == Rat(1, 2));
}

TEST_CASE("degree helpers") {
  const Poly f = P(3, "x1^3 + x2*x3 - 4");
  CHECK(f.degree() == 3);
  CHECK(f.low_degree() == 0);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.homogeneous_part(2) == P(3, "x2*x3"));
  CHECK(Poly(3).degree() == -1);
  CHECK(P(3, "7").as_constant() == Rat(7));
  CHECK_FALSE(f.as_constant().has_value());
}

TEST_CASE("mismatched variable counts are structural errors") {
  CHECK_THROWS_AS(P(2, "x1") + P(3, "x1"), StructuralError);
  CHECK_THROWS_AS(Poly::variable(2, 3), StructuralError);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 4;
    const Poly a = random_poly(rng, n, 3, 4), b = random_poly(rng, n, 3, 4), c = random_poly(rng, n, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    for (const auto& pt : oracle::sample_points(n, 3, 100 + t))
      CHECK(oracle::eval(a * b, pt) == oracle::eval(a, pt) * oracle::eval(b, pt));
  }
}

TEST_CASE("permutation action substitutes variables") {
  const Poly f = P(3, "x1^2*x2 + x3");
  CHECK(act_perm(Perm::simple(3, 1), f) == P(3, "x2^2*x1 + x3"));
  CHECK(swap_adjacent(2, f) == P(3, "x1^2*x3 + x2"));
  const Perm w = Perm::from_one_line({2, 3, 1});
  CHECK(act_perm(w, f) == P(3, "x2^2*x3 + x1"));
  CHECK(act_perm(Perm(3), f) == f);
  CHECK(partial_derivative(f, 1) == P(3, "2*x1*x2"));
  CHECK(partial_derivative(f, 3) == P(3, "1"));
}

TEST_CASE("elementary and complete symmetric polynomials match enumeration") {
  for (int n = 1; n <= 5; ++n)
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo - 1; hi <= n; ++hi)
        for (int k = 0; k <= 4; ++k) {
          CHECK(oracle::agree_on(elementary(n, k, {lo, hi}), [&](const auto& v) { return oracle::e_value(v, k, lo, hi); }, n, 3));
          CHECK(oracle::agree_on(complete(n, k, {lo, hi}), [&](const auto& v) { return oracle::h_value(v, k, lo, hi); }, n, 3));
        }
  CHECK(elementary(2, 3, {1, 2}).is_zero());
  CHECK(complete(3, 0, {2, 1}) == Poly::constant(3, 1));
  CHECK_THROWS_AS(elementary(3, -1, {1, 3}), PreconditionError);
  CHECK(elementary_or_zero(3, -1, {1, 3}).is_zero());
  CHECK(power_sum(3, 2, {1, 3}) == P(3, "x1^2 + x2^2 + x3^2"));
}

TEST_CASE("alternating e h convolution vanishes") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 2 * n; ++m) {
      Poly s(n);
      for (int k = 0; k <= m; ++k) {
        Poly t = elementary(n, k, {1, n}) * complete(n, m - k, {1, n});
        s += k % 2 ? -t : t;
      }
      CHECK(s.is_zero());
    }
}

TEST_CASE("Schur determinant matches tableau enumeration") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& padded : padded_partitions(d, n)) {
        std::vector<int> parts;
        for (int v : padded)
          if (v > 0) parts.push_back(v);
        const Poly s = schur(n, Partition(parts), {1, n});
        CHECK(is_symmetric(s));
        CHECK(oracle::agree_on(s, [&](const auto& v) { return oracle::schur_value(v, parts, n); }, n, 4));
      }
  CHECK(schur(3, Partition({4}), {1, 1}) == P(3, "x1^4"));
  CHECK(schur(3, Partition({1, 1}), {1, 1}).is_zero());
  CHECK(schur(2, Partition(std::vector<int>{}), {1, 2}) == P(2, "1"));
}

TEST_CASE("monomial symmetric functions and partitions") {
  CHECK(monomial_symmetric(3, Partition({2, 1})) == P(3, "x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2"));
  CHECK(padded_partitions(3, 2) == std::vector<std::vector<int>>{{3, 0}, {2, 1}});
  CHECK(padded_partitions(0, 2) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("e recursion and staircase monomial") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= n + 1; ++m) CHECK(recursion_check_e(m, n));
  CHECK(x_delta(3) == P(3, "x1^2*x2"));
  CHECK(x_delta(1) == P(1, "1"));
}

TEST_CASE("determinant of a polynomial matrix") {
  const int n = 2;
  std::vector<std::vector<Poly>> m = {{P(n, "x1"), P(n, "1")}, {P(n, "x1*x2"), P(n, "x2")}};
  CHECK(determinant(m, n).is_zero());
  m[1][1] = P(n, "x1 + x2");
  CHECK(determinant(m, n) == P(n, "x1^2"));
}

TEST_CASE("json round trip") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Poly f = random_poly(rng, 3, 4, 5);
    CHECK(poly_from_json(to_json(f), 3) == f);
  }
}

}  // TEST_SUITE
