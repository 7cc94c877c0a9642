#include <random>

#include "doctest.h"
#include "linalg.hpp"

using namespace exnil;

TEST_SUITE("linalg") {

TEST_CASE("echelon basis tracks the span") {
  EchelonBasis b;
  CHECK(b.insert({{0, Rat(1)}, {2, Rat(2)}}));
  CHECK(b.insert({{1, Rat(1)}, {2, Rat(1)}}));
  CHECK_FALSE(b.insert({{0, Rat(2)}, {1, Rat(3)}, {2, Rat(7)}}));
  CHECK(b.rank() == 2);
  CHECK(b.contains({{0, Rat(1, 2)}, {2, Rat(1)}}));
  CHECK_FALSE(b.contains({{2, Rat(1)}}));
  CHECK(b.is_pivot(0));
  CHECK_FALSE(b.is_pivot(2));
}

TEST_CASE("fraction-free rank agrees with incremental elimination") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> entry(-2, 2), num(1, 4);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + t % 5, cols = 1 + (t / 5) % 5;
    DenseMatrix m(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
    EchelonBasis b;
    for (int i = 0; i < rows; ++i) {
      SparseVec v;
      for (int j = 0; j < cols; ++j) {
        Rat r(entry(rng), num(rng));
        r.canonicalize();
        if (t % 3 == 0 && i > 0) r = m[0][j] * (i + 1);
        m[i][j] = r;
        if (r != 0) v[j] = r;
      }
      b.insert(v);
    }
    CHECK(rank_fraction_free(m) == static_cast<long>(b.rank()));
  }
}

TEST_CASE("solve and matmul") {
  const DenseMatrix a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  const auto x = solve(a, {Rat(5), Rat(6)});
  REQUIRE(x.has_value());
  CHECK(matmul(a, {{(*x)[0]}, {(*x)[1]}}) == DenseMatrix{{Rat(5)}, {Rat(6)}});
  const DenseMatrix singular = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_FALSE(solve(singular, {Rat(1), Rat(1)}).has_value());
  CHECK(solve(singular, {Rat(1), Rat(2)}).has_value());
}

}  // TEST_SUITE
