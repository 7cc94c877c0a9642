#include "divdiff.hpp"
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

/// (f(pt) - f(s_i pt)) / (pt_i - pt_{i+1}).
Rat dd_value(const Poly& f, int i, std::vector<Rat> pt) {
  const Rat before = oracle::eval(f, pt);
  const Rat gap = pt[i - 1] - pt[i];
  std::swap(pt[i - 1], pt[i]);
  return (before - oracle::eval(f, pt)) / gap;
}

}  // namespace

TEST_SUITE("divdiff") {

TEST_CASE("small divided differences") {
  CHECK(dd(1, P(2, "x1")) == P(2, "1"));
  CHECK(dd(1, P(2, "x1^2")) == P(2, "x1 + x2"));
  CHECK(dd(1, P(2, "x1*x2")).is_zero());
  CHECK(dd(2, P(3, "x2")) == P(3, "1"));
  CHECK(dd(1, P(3, "x3^5")).is_zero());
  // d_{s1 s2} applies d_2 first: d_2(x1^2 x2) = x1^2, then d_1(x1^2) = x1 + x2.
  CHECK(dd_word({1, 2}, P(3, "x1^2*x2")) == P(3, "x1 + x2"));
  CHECK(dd_perm(Perm::from_word(3, {1, 2}), P(3, "x1^2*x2")) == P(3, "x1 + x2"));
  CHECK(dd_perm(Perm(3), P(3, "x2^3")) == P(3, "x2^3"));
  CHECK_THROWS_AS(dd(3, P(3, "x1")), StructuralError);
  CHECK_THROWS_AS(divide_by_root(P(2, "x1"), 1), InvariantViolation);
  CHECK(divide_by_root(P(2, "x1^2 - x2^2"), 1) == P(2, "x1 + x2"));
}

TEST_CASE("divided differences agree with pointwise quotients") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 3;
    const Poly f = random_poly(rng, n, 4, 5);
    for (int i = 1; i < n; ++i) {
      const Poly g = dd(i, f);
      for (const auto& pt : oracle::sample_points(n, 3, 40 + t)) CHECK(oracle::eval(g, pt) == dd_value(f, i, pt));
    }
  }
}

TEST_CASE("nil-Coxeter relations as operators") {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Poly f = random_poly(rng, 4, 5, 6);
    for (int i = 1; i < 4; ++i) {
      CHECK(dd(i, dd(i, f)).is_zero());
      if (i + 1 < 4) CHECK(dd(i, dd(i + 1, dd(i, f))) == dd(i + 1, dd(i, dd(i + 1, f))));
    }
    CHECK(dd(1, dd(3, f)) == dd(3, dd(1, f)));
  }
}

TEST_CASE("top divided difference of the staircase monomial is 1") {
  for (int n = 1; n <= 5; ++n) CHECK(dd_perm(Perm::longest(n), x_delta(n)) == Poly::constant(n, 1));
}

TEST_CASE("Schubert polynomials of S_3") {
  CHECK(schubert(Perm(3)) == P(3, "1"));
  CHECK(schubert(parse_perm(3, "s1")) == P(3, "x1"));
  CHECK(schubert(parse_perm(3, "s2")) == P(3, "x1 + x2"));
  CHECK(schubert(parse_perm(3, "s1 s2")) == P(3, "x1*x2"));
  CHECK(schubert(parse_perm(3, "s2 s1")) == P(3, "x1^2"));
  CHECK(schubert(Perm::longest(3)) == P(3, "x1^2*x2"));
}

TEST_CASE("Schubert polynomials are a descending family under divided differences") {
  for (int n = 1; n <= 4; ++n)
    for (const Perm& w : all_perms(n)) {
      const Poly s = schubert(w);
      CHECK(s.is_homogeneous());
      CHECK(s.degree() == (w.is_identity() ? 0 : w.length()));
      for (int i = 1; i < n; ++i) {
        const Perm ws = w * Perm::simple(n, i);
        CHECK(dd(i, s) == (ws.length() < w.length() ? schubert(ws) : Poly(n)));
      }
    }
}

TEST_CASE("Grassmannian Schubert polynomials are Schur polynomials") {
  for (int n = 2; n <= 4; ++n)
    for (const Perm& w : all_perms(n)) {
      if (!w.is_grassmannian()) continue;
      const int k = w.descents().front();
      CHECK(schubert(w) == schur(n, partition_of(w), {1, k}));
    }
}

TEST_CASE("Schubert polynomials of Coxeter tails are elementary") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j) CHECK(schubert(coxeter_tail(n, j)) == elementary(n, n - j, {1, n - 1}));
}

TEST_CASE("dual Schubert polynomials pair with Schubert polynomials") {
  for (int n = 1; n <= 4; ++n) {
    const auto ps = all_perms(n);
    for (const Perm& u : ps)
      for (const Perm& v : ps) {
        const Poly pairing = dd_perm(Perm::longest(n), schubert(u) * dual_schubert(v));
        CHECK(pairing == Poly::constant(n, u == v ? 1 : 0));
      }
  }
}

TEST_CASE("dual Schubert polynomials of S_3") {
  const Perm w0 = Perm::longest(3);
  CHECK(dual_schubert(w0) == P(3, "1"));
  CHECK(dual_schubert(w0 * parse_perm(3, "s1")) == P(3, "-x2 - x3"));
  CHECK(dual_schubert(w0 * parse_perm(3, "s2")) == P(3, "-x3"));
  CHECK(dual_schubert(w0 * parse_perm(3, "s1 s2")) == P(3, "x3^2"));
  CHECK(dual_schubert(w0 * parse_perm(3, "s2 s1")) == P(3, "x2*x3"));
  CHECK(dual_schubert(Perm(3)) == P(3, "-x2*x3^2"));
}

TEST_CASE("dual Schubert polynomials of w0 times Coxeter words are signed complete functions") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        Poly h = complete(n, k - j, {k, n});
        if ((k - j) % 2) h = -h;
        CHECK(dual_schubert(Perm::longest(n) * coxeter(n, j, k)) == h);
      }
}

TEST_CASE("dot slides through divided differences") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i < n; ++i)
      for (int a = 0; a <= 4; ++a) CHECK(dotslide_check(n, i, a, 3));
}

TEST_CASE("mixed determinant equals the Schur polynomial of alpha") {
  CHECK(schur_det_mixed(BinSeq::from_bits({1, 1, 0})) == P(3, "x1^2"));
  CHECK(schur_det_mixed(BinSeq::from_bits({1, 0, 1})) == P(3, "x1"));
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(schur_det_mixed(BinSeq::tau(n, k)) == Poly::constant(n, 1));
      for (const BinSeq& a : binseqs_of_weight(n, k)) CHECK(schur_det_mixed(a) == schur(n, lambda_of(a), {1, n - k}));
    }
  }
}

TEST_CASE("symmetric polynomials are killed and the image of d_i is s_i invariant") {
  Rng rng(17);
  for (int t = 0; t < 15; ++t) {
    const Poly s = random_symmetric(rng, 3, 4);
    for (int i = 1; i < 3; ++i) CHECK(dd(i, s).is_zero());
    const Poly f = random_poly(rng, 3, 4, 4);
    for (int i = 1; i < 3; ++i) CHECK(swap_adjacent(i, dd(i, f)) == dd(i, f));
  }
  CHECK(monomials_up_to(2, 2).size() == 6);
}

}  // TEST_SUITE
