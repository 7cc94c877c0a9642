#include <map>

#include "divdiff.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "extsym.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "sampling.hpp"
#include "superpoly.hpp"

using namespace exnil;

namespace {

SuperPoly S(int n, const char* text) { return parse_superpoly(n, text); }
Poly P(int n, const char* text) { return parse_poly(n, text); }

/// Coordinates of v in the monomial basis x^a w_S; index packs mask and exponents.
SparseVec flatten(const SuperPoly& v) {
  SparseVec out;
  for (const auto& [mask, f] : v.components())
    for (const auto& [m, c] : f.terms()) {
      int key = static_cast<int>(mask);
      for (int i = 1; i <= m.nvars(); ++i) key = key * 32 + m[i];
      out[key] = c;
    }
  return out;
}

int weight_of_mask(uint32_t mask) {
  int s = 0;
  for (int i : mask_indices(mask)) s += i;
  return s;
}

}  // namespace

TEST_SUITE("extsym") {

TEST_CASE("membership tests on small inputs") {
  CHECK(is_extended_symmetric(S(2, "w1 + x1*w2")));
  CHECK_FALSE(is_extended_symmetric(S(2, "w1")));
  CHECK(is_extended_symmetric(S(3, "x1 + x2 + x3")));
  CHECK(is_extended_symmetric(S(3, "w3")));
  CHECK_FALSE(is_extended_symmetric(S(3, "w2")));
  CHECK(is_extended_symmetric(SuperPoly(3)));
}

TEST_CASE("kernel and coefficient-system tests agree") {
  Rng rng(31);
  for (int n = 1; n <= 3; ++n) {
    const auto gens = dual_exterior_basis(n);
    for (int t = 0; t < 30; ++t) {
      const SuperPoly inv = reconstruct(random_coordinates(rng, n, 2), gens);
      CHECK(kernel_test(inv));
      CHECK(system_test(inv));
      const SuperPoly noise = random_superpoly(rng, n, 2, 2);
      CHECK(kernel_test(inv + noise) == system_test(inv + noise));
    }
  }
}

TEST_CASE("phi_k builds invariants from bisymmetric polynomials") {
  CHECK(phi_k(3, 3, P(3, "1")) == S(3, "w1*w2*w3"));
  CHECK(phi_k(2, 1, P(2, "1")) == S(2, "w2"));
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      const Poly F = elementary(n, 1, {1, n - k}) * elementary(n, 1, {n - k + 1, n}) + elementary(n, 2, {1, n - k});
      const SuperPoly v = phi_k(n, k, F);
      CHECK(is_extended_symmetric(v));
      CHECK(phi_reconstruct(v) == v);
    }
  CHECK_THROWS_AS(phi_k(3, 1, P(3, "x1")), PreconditionError);
}

TEST_CASE("phi reconstruction detects non-invariants") {
  Rng rng(33);
  const auto gens = schubert_exterior_basis(3);
  for (int t = 0; t < 20; ++t) {
    const SuperPoly v = reconstruct(random_coordinates(rng, 3, 2), gens);
    CHECK(phi_reconstruct(v) == v);
  }
  CHECK_FALSE(phi_reconstruct(S(3, "w1")) == S(3, "w1"));
}

TEST_CASE("admissible tuples of size two") {
  for (const char* a : {"x1", "-x2", "1/2*x1 - 1/2*x2"}) {
    const auto g = exterior_gen({P(2, a), P(2, "1")});
    CHECK(g[0] == S(2, "w1") + SuperPoly::scalar(P(2, a)) * S(2, "w2"));
    CHECK(g[1] == S(2, "w2"));
    CHECK(is_extended_symmetric(g[0]));
  }
  CHECK(admissibility_failure({P(2, "0"), P(2, "1")}, true).has_value());
  CHECK(admissibility_failure({P(2, "x1^2"), P(2, "1")}, true).has_value());
  CHECK(admissibility_failure({P(2, "2*x1"), P(2, "1")}, true).has_value());
  CHECK_FALSE(admissibility_failure({P(2, "2*x1"), P(2, "1")}, false).has_value());
  CHECK_THROWS_AS(exterior_gen({P(2, "0"), P(2, "1")}), PreconditionError);
}

TEST_CASE("named exterior bases at n = 3") {
  const auto s = schubert_exterior_basis(3);
  CHECK(s[0] == S(3, "w1 + x1*w2 + x1*x2*w3"));
  CHECK(s[1] == S(3, "w2 + (x1 + x2)*w3"));
  CHECK(s[2] == S(3, "w3"));
  const auto d = dual_exterior_basis(3);
  CHECK(d[0] == S(3, "w1 - (x2 + x3)*w2 + x3^2*w3"));
  CHECK(d[1] == S(3, "w2 - x3*w3"));
  CHECK(d[2] == S(3, "w3"));
  const auto r1 = exterior_basis(3, parse_basis_spec("interp:1"));
  CHECK(r1[0] == S(3, "w1 + x1*w2 - (x1 + x2)*x3*w3"));
  CHECK(to_string(parse_basis_spec("interp:2")) == "interp:2");
  CHECK_THROWS(parse_basis_spec("bogus"));
}

TEST_CASE("interpolating family endpoints") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j) {
      CHECK(interp_p(n, j, 0) == elementary(n, n - j, {1, n - 1}));
      CHECK(interp_p(n, j, 0) == schubert_p(n)[j - 1]);
      CHECK(interp_p(n, j, n - j) == dual_p(n)[j - 1]);
    }
}

TEST_CASE("complete and elementary generator families") {
  CHECK(hw(3, 1) == S(3, "w3"));
  CHECK(hw(3, 2) == S(3, "w2 - x3*w3"));
  CHECK(hw(3, 3) == S(3, "w1 - (x2 + x3)*w2 + x3^2*w3"));
  CHECK(ew(3, 1) == S(3, "w3"));
  CHECK(ew(3, 2) == S(3, "w2 + (x1 + x2)*w3"));
  for (int n = 1; n <= 5; ++n) {
    CHECK(e_and_h_check(n));
    for (int j = 1; j <= n; ++j) {
      CHECK(hw(n, j) == dual_exterior_basis(n)[n - j]);
      for (int k = 0; k <= j; ++k) CHECK(eh_lemma_check(n, j, k));
    }
  }
}

TEST_CASE("exterior generators anticommute and are invariant") {
  for (int n = 1; n <= 4; ++n)
    for (const char* fam : {"schubert", "dual", "interp:1"}) {
      const auto g = exterior_basis(n, parse_basis_spec(fam));
      for (int i = 0; i < n; ++i) {
        CHECK(is_extended_symmetric(g[i]));
        for (int j = 0; j < n; ++j) CHECK(g[i] * g[j] == -(g[j] * g[i]));
      }
    }
}

TEST_CASE("decomposition is the inverse of reconstruction") {
  Rng rng(35);
  for (int n = 1; n <= 3; ++n)
    for (const char* fam : {"schubert", "dual", "interp:1"}) {
      const auto g = exterior_basis(n, parse_basis_spec(fam));
      for (int t = 0; t < 10; ++t) {
        const Coordinates c = random_coordinates(rng, n, 3);
        CHECK(decompose(reconstruct(c, g), g) == c);
      }
    }
  const auto d = dual_exterior_basis(3);
  const SuperPoly v = SuperPoly::scalar(elementary(3, 1, {1, 3})) * d[0] + d[1];
  const Coordinates c = decompose(v, d);
  CHECK(c.size() == 2);
  CHECK(c.at(0b001) == elementary(3, 1, {1, 3}));
  CHECK(c.at(0b010) == Poly::constant(3, 1));
  CHECK_THROWS(decompose(S(3, "w1"), d));
}

TEST_CASE("wedges of Schubert generators match minors") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (const BinSeq& a : binseqs_of_weight(n, k)) CHECK(wedge_alpha_check(a));
}

TEST_CASE("Schubert times symmetric times wedge is a basis of each weight piece") {
  // Weight of x^a w_S is |a| - sum S; every generator product below is homogeneous for it.
  for (int n = 2; n <= 3; ++n) {
    const auto gens = schubert_exterior_basis(n);
    for (int d = -3; d <= 2; ++d) {
      long monomials = 0;
      for (uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int deg = d + weight_of_mask(mask);
        if (deg >= 0) monomials += static_cast<long>(monomials_up_to(n, deg).size() - (deg > 0 ? monomials_up_to(n, deg - 1).size() : 0));
      }
      EchelonBasis span;
      long products = 0;
      for (const Perm& w : all_perms(n))
        for (uint32_t mask = 0; mask < (1U << n); ++mask) {
          const int sym_deg = d + weight_of_mask(mask) - w.length();
          if (sym_deg < 0) continue;
          const SuperPoly wedge_part = wedge(gens, mask);
          for (const auto& mu : padded_partitions(sym_deg, n)) {
            std::vector<int> parts;
            for (int v : mu)
              if (v > 0) parts.push_back(v);
            const Poly m = monomial_symmetric(n, Partition(parts));
            ++products;
            span.insert(flatten((schubert(w) * m) * wedge_part));
          }
        }
      CHECK(products == monomials);
      CHECK(static_cast<long>(span.rank()) == monomials);
    }
  }
}

TEST_CASE("power sums give back the complete-function description") {
  // (-1)^{n-j} p_{n-j}(x_1..x_{n-1}) differs from the complete-function choice by a symmetric
  // polynomial and a sign: p_m(x_1..x_{n-1}) = p_m(x_1..x_n) - x_n^m.
  for (int n = 2; n <= 4; ++n) {
    std::vector<Poly> p;
    for (int j = 1; j <= n; ++j) {
      Poly q = j == n ? Poly::constant(n, 1) : power_sum(n, n - j, {1, n - 1});
      if ((n - j) % 2) q = -q;
      p.push_back(q);
    }
    CHECK_FALSE(admissibility_failure(p, false).has_value());
    const auto dual = dual_p(n);
    for (int j = 1; j < n; ++j) {
      CHECK(dd_perm(coxeter_tail(n, j), p[j - 1]) == Poly::constant(n, -1));
      CHECK(is_symmetric(p[j - 1] + dual[j - 1]));
    }
    for (int j = 1; j < n; ++j) p[j - 1] = -p[j - 1];
    const auto g = exterior_gen(p);
    const auto h = dual_exterior_basis(n);
    for (int j = 1; j <= n; ++j) {
      const Coordinates c = decompose(g[j - 1], h);
      CHECK(c.at(1U << (j - 1)) == Poly::constant(n, 1));
      for (const auto& [mask, f] : c) CHECK((mask == (1U << (j - 1)) || mask == (1U << (n - 1))));
    }
  }
}

}  // TEST_SUITE
