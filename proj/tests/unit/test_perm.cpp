#include <algorithm>
#include <set>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "perm.hpp"

using namespace exnil;

TEST_SUITE("permcomb") {

TEST_CASE("basic statistics in S_3") {
  const Perm w0 = Perm::longest(3);
  CHECK(w0.one_line() == std::vector<int>{3, 2, 1});
  CHECK(w0.length() == 3);
  CHECK(w0.descents() == std::vector<int>{1, 2});
  CHECK_FALSE(w0.is_grassmannian());
  const Perm c = Perm::from_word(3, {1, 2});
  CHECK(c.one_line() == std::vector<int>{2, 3, 1});
  CHECK(c.descents() == std::vector<int>{2});
  CHECK(c.is_grassmannian());
  CHECK(Perm(3).is_identity());
  CHECK_FALSE(Perm(3).is_grassmannian());
}

TEST_CASE("composition applies the right factor first") {
  const Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  const Perm p = s1 * s2;
  CHECK(p(1) == s1(s2(1)));
  CHECK(p(3) == 1);
  CHECK(p * p.inverse() == Perm(3));
  CHECK((s1 * s2 * s1) == (s2 * s1 * s2));
}

TEST_CASE("reduced words are reduced and rebuild the permutation") {
  CHECK(Perm(3).reduced_word().empty());
  CHECK(Perm::simple(3, 2).reduced_word() == std::vector<int>{2});
  CHECK(Perm::longest(3).reduced_word() == std::vector<int>{1, 2, 1});
  for (int n = 1; n <= 5; ++n)
    for (const Perm& w : all_perms(n)) {
      const auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Perm::from_word(n, word) == w);
      CHECK(w.length() == oracle::inversions(w.one_line()));
    }
}

TEST_CASE("Lehmer code counts later smaller values") {
  CHECK(Perm::longest(3).lehmer_code() == std::vector<int>{2, 1, 0});
  CHECK(Perm::from_one_line({2, 3, 1}).lehmer_code() == std::vector<int>{1, 1, 0});
  for (int n = 1; n <= 5; ++n)
    for (const Perm& w : all_perms(n)) {
      const auto img = w.one_line();
      std::vector<int> parts;
      for (size_t i = 0; i < img.size(); ++i) {
        int c = 0;
        for (size_t j = i + 1; j < img.size(); ++j) c += img[j] < img[i] ? 1 : 0;
        CHECK(w.lehmer_code()[i] == c);
        if (c > 0) parts.push_back(c);
      }
      std::sort(parts.rbegin(), parts.rend());
      CHECK(partition_of(w).parts() == parts);
    }
}

TEST_CASE("all_perms orders by length and covers S_n") {
  for (int n = 1; n <= 5; ++n) {
    const auto ps = all_perms(n);
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<long>(ps.size()) == fact);
    CHECK(std::set<Perm>(ps.begin(), ps.end()).size() == ps.size());
    for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].length() <= ps[i].length());
  }
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Perm::from_one_line({1, 1, 2}), StructuralError);
  CHECK_THROWS_AS(Perm::from_word(3, {3}), StructuralError);
  CHECK_THROWS(parse_perm(3, "[1,2]"));
  CHECK_THROWS(parse_perm(3, "s0"));
  CHECK(parse_perm(3, "s1 s2") == parse_perm(3, "[2,3,1]"));
  CHECK(parse_perm(3, "2 3 1") == parse_perm(3, "[2,3,1]"));
  CHECK(parse_perm(3, "id") == Perm(3));
  CHECK(parse_perm(4, "") == Perm(4));
}

TEST_CASE("partitions") {
  const Partition p({3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.conjugate().parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition({4, 2}).conjugate().parts() == std::vector<int>{2, 2, 1, 1});
  CHECK(p.part(4) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK(parse_partition("2 1") == Partition({2, 1}));
  CHECK(parse_partition("").length() == 0);
}

TEST_CASE("binary sequences") {
  const BinSeq t = BinSeq::tau(4, 2);
  CHECK(t.ones() == std::vector<int>{3, 4});
  CHECK(t.zeros() == std::vector<int>{1, 2});
  CHECK(BinSeq::lambda(4, 2).ones() == std::vector<int>{1, 2});
  CHECK(t.weight() == 2);
  CHECK(binseqs_of_weight(4, 2).size() == 6);
  const BinSeq a = BinSeq::from_bits({0, 1, 1, 0});
  CHECK(descent_set(a) == std::vector<int>{1});
  CHECK(in_I(a, 3));
  CHECK(in_J(a, 1));
  CHECK_FALSE(in_J(a, 2));
  CHECK(to_string(a) == "0110");
  CHECK(parse_binseq("0110") == a);
}

TEST_CASE("sigma_alpha is the unique minimal permutation carrying tau to alpha") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const BinSeq& alpha : binseqs_of_weight(n, k)) {
        int best = 1 << 20, count = 0;
        Perm arg(n);
        for (const Perm& w : all_perms(n)) {
          if (!(BinSeq::tau(n, k).permuted(w) == alpha)) continue;
          if (w.length() < best) {
            best = w.length();
            arg = w;
            count = 1;
          } else if (w.length() == best) {
            ++count;
          }
        }
        CHECK(count == 1);
        CHECK(sigma_of(alpha) == arg);
        const Partition lam = lambda_of(alpha);
        CHECK(lam.size() == best);
        CHECK(lam.length() <= n - k);
        CHECK(lam.part(1) <= k);
      }
  CHECK(sigma_of(BinSeq::tau(3, 1)).is_identity());
  CHECK(sigma_of(BinSeq::from_bits({1, 0, 1})) == Perm::simple(3, 1));
  CHECK(lambda_of(BinSeq::from_bits({1, 0, 1})) == Partition({1}));
}

TEST_CASE("covering moves shorten sigma by one and tau is maximal") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const BinSeq top = BinSeq::tau(n, k);
      for (const BinSeq& alpha : binseqs_of_weight(n, k)) {
        for (const BinSeq& beta : covers(alpha)) {
          CHECK(prec(alpha, beta));
          CHECK(sigma_of(beta).length() == sigma_of(alpha).length() - 1);
        }
        if (!(alpha == top)) CHECK(prec(alpha, top));
        CHECK_FALSE(prec(top, alpha));
        CHECK_FALSE(prec(alpha, alpha));
      }
    }
  CHECK(prec(BinSeq::from_bits({1, 0}), BinSeq::from_bits({0, 1})));
  CHECK(covers(BinSeq::tau(3, 2)).empty());
  CHECK_THROWS_AS(prec(BinSeq::tau(3, 1), BinSeq::tau(3, 2)), StructuralError);
}

TEST_CASE("Coxeter elements") {
  CHECK(coxeter(3, 1, 2) == Perm::simple(3, 1));
  CHECK(coxeter(3, 1, 3).one_line() == std::vector<int>{2, 3, 1});
  CHECK(coxeter(4, 2, 2).is_identity());
  CHECK(coxeter_tail(3, 1) == coxeter(3, 1, 3));
  CHECK(coxeter_k(3, 1) == coxeter(3, 1, 3));
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const Perm c = coxeter_k(n, k);
      CHECK(Perm::from_word(n, coxeter_k_word(n, k)) == c);
      CHECK(c.length() == k * (n - k));
      CHECK(sigma_of(BinSeq::lambda(n, k)) == c);
    }
}

}  // TEST_SUITE
