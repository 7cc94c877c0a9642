#include "doctest.h"
#include "errors.hpp"
#include "extsym.hpp"
#include "nilhecke.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "sampling.hpp"

using namespace exnil;

namespace {

NHElem E(int n, const char* text) { return parse_nh(n, text); }

}  // namespace

TEST_SUITE("nilhecke") {

TEST_CASE("defining relations normalize") {
  CHECK(E(2, "x1*d1 - d1*x2") == NHElem::one(2));
  CHECK(E(2, "d1*x1 - x2*d1") == NHElem::one(2));
  CHECK(E(3, "d1*d1").is_zero());
  CHECK(E(3, "d1*d2*d1") == E(3, "d2*d1*d2"));
  CHECK(E(3, "d1*d2*d1") == NHElem::dd_perm(Perm::longest(3)));
  CHECK(E(3, "w2*w1") == -E(3, "w1*w2"));
  CHECK(E(3, "d1*w3") == E(3, "w3*d1"));
  CHECK(E(2, "d1*w1") == E(2, "w1*d1 - w2*(x2*d1 - d1*x2)"));
  CHECK(E(2, "d1*w1") == E(2, "(w1 + (x1 - x2)*w2)*d1 - w2"));
}

TEST_CASE("commuting a divided difference past an extended polynomial") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const SuperPoly g = random_superpoly(rng, 3, 2, 3);
    for (int i = 1; i < 3; ++i) {
      const auto [a, b] = commute_past(i, g);
      CHECK(a == ext_dd(i, g));
      CHECK(b == act_si(i, g));
      CHECK(NHElem::dd(3, i) * NHElem::from_superpoly(g) ==
            NHElem::from_superpoly(a) + NHElem::from_superpoly(b) * NHElem::dd(3, i));
    }
  }
}

TEST_CASE("product is associative and compatible with the action") {
  Rng rng(43);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + t % 2;
    const NHElem a = random_nh(rng, n, 2, 3), b = random_nh(rng, n, 2, 3), c = random_nh(rng, n, 1, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const SuperPoly v = random_superpoly(rng, n, 3, 3);
    CHECK(act(a * b, v) == act(a, act(b, v)));
  }
}

TEST_CASE("action of generators") {
  const int n = 3;
  const SuperPoly v = parse_superpoly(n, "x1^2*w1");
  CHECK(act(NHElem::dd(n, 1), v) == ext_dd(1, v));
  CHECK(act(NHElem::x(n, 2), v) == parse_superpoly(n, "x1^2*x2*w1"));
  CHECK(act(NHElem::omega(n, 3), v) == parse_superpoly(n, "-x1^2*w1*w3"));
  CHECK(act(NHElem::one(n), v) == v);
}

TEST_CASE("grading and parity") {
  CHECK(paper_degree(NHKey{Monomial{1, 0}, 0, Perm(2)}) == 2);
  CHECK(degree(E(2, "x1*d1")) == std::vector<int>{0});
  CHECK(degree(E(3, "w2")) == std::vector<int>{-6});
  CHECK(degree(E(3, "x1^2*w1 + d1*d2")) == std::vector<int>{-4, 0});
  CHECK(parity(E(3, "w1*w2")) == 0);
  CHECK(parity(E(3, "w1 + x1*w3")) == 1);
  CHECK(parity(E(3, "w1 + x1")) == -1);
}

TEST_CASE("graded dimension helpers") {
  GradedDims q3 = quantum_factorial_sq(3);
  CHECK(to_string(q3) == "1 + 2*q^2 + 2*q^4 + q^6");
  CHECK(q3.total() == 6);
  CHECK(column_shifts(3) == q3);
  CHECK(to_string(GradedDims{}) == "0");
}

TEST_CASE("index set and idempotent ingredients") {
  CHECK(sq_index_set(3).size() == 6);
  CHECK(l_hat({1, 0}) == std::vector<int>{0, 0, 2});
  CHECK(e_l(3, {1, 2}) == parse_poly(3, "x1^2*x2"));
}

TEST_CASE("idempotents at n = 2 are x1 d1 and -d1 x2") {
  const auto e = idempotents(2);
  REQUIRE(e.size() == 2);
  CHECK(((e[0] == E(2, "x1*d1") && e[1] == E(2, "-d1*x2")) || (e[1] == E(2, "x1*d1") && e[0] == E(2, "-d1*x2"))));
}

TEST_CASE("idempotents are orthogonal, n! in number and sum to one") {
  for (int n = 1; n <= 3; ++n) {
    const auto e = idempotents(n);
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<long>(e.size()) == fact);
    NHElem sum(n);
    for (size_t a = 0; a < e.size(); ++a) {
      sum += e[a];
      for (size_t b = 0; b < e.size(); ++b) CHECK(e[a] * e[b] == (a == b ? e[a] : NHElem(n)));
    }
    CHECK(sum == NHElem::one(n));
  }
  CHECK_THROWS_AS(idempotents(5), CapExceeded);
}

TEST_CASE("lambda and sigma pair to the top element") {
  for (int n = 2; n <= 3; ++n) {
    const auto sq = sq_index_set(n);
    const NHElem top = NHElem::from_poly(x_delta(n)) * NHElem::dd_perm(Perm::longest(n));
    for (const auto& l : sq)
      for (const auto& m : sq) CHECK(lambda_elem(n, m) * sigma_elem(n, l) == (l == m ? top : NHElem(n)));
  }
}

TEST_CASE("matrix isomorphism is multiplicative and invertible") {
  Rng rng(45);
  for (int n = 1; n <= 3; ++n) {
    CHECK(matrix_iso(NHElem::one(n)) == identity_matrix(n));
    for (int t = 0; t < 4; ++t) {
      const NHElem a = random_nh(rng, n, 2, 2), b = random_nh(rng, n, 2, 2);
      CHECK(matrix_iso(a * b) == matrix_product(matrix_iso(a), matrix_iso(b)));
      CHECK(matrix_iso_inv(matrix_iso(a), n) == a);
    }
  }
}

TEST_CASE("graded center") {
  CHECK(center_check(NHElem::from_poly(elementary(3, 1, {1, 3}))));
  CHECK(center_check(NHElem::from_superpoly(dual_exterior_basis(3)[0])));
  CHECK_FALSE(center_check(NHElem::x(3, 1)));
  CHECK_FALSE(center_check(NHElem::omega(3, 2)));
  CHECK_THROWS_AS(center_check(E(2, "x1 + 1")), PreconditionError);
}

TEST_CASE("text and json round trips") {
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const NHElem a = random_nh(rng, 3, 2, 4);
    CHECK(nh_from_json(to_json(a), 3) == a);
    CHECK(parse_nh(3, to_string(a)) == a);
  }
  CHECK(to_string(NHElem(2)) == "0");
}

}  // TEST_SUITE
