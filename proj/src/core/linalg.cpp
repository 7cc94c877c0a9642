// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "linalg.hpp"

#include "errors.hpp"

namespace exnil {

SparseVec EchelonBasis::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int key = it->first;
    const Rat c = it->second;
    for (const auto& [j, a] : row->second) {
      Rat& slot = v[j];
      slot -= c * a;
      if (is_zero(slot)) v.erase(j);
    }
    it = v.upper_bound(key);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rat lead = v.begin()->second;
  for (auto& [j, a] : v) a /= lead;
  const int pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

long rank_fraction_free(const DenseMatrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m.front().size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw StructuralError("ragged matrix");
    mpz_class l = 1;
    for (const Rat& x : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (size_t c = 0; c < cols; ++c) a[r][c] = m[r][c].get_num() * (l / m[r][c].get_den());
  }
  mpz_class prev = 1;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<long>(rank);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.empty()) return {};
  const size_t inner = b.size();
  if (a.front().size() != inner) throw StructuralError("matrix product dimension mismatch");
  const size_t cols = inner == 0 ? 0 : b.front().size();
  DenseMatrix out(a.size(), std::vector<Rat>(cols, Rat(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (is_zero(a[i][k])) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::optional<std::vector<Rat>> solve(const DenseMatrix& a, const std::vector<Rat>& b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw StructuralError("right-hand side length differs from row count");
  const size_t cols = rows ? a.front().size() : 0;
  DenseMatrix m = a;
  for (size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw StructuralError("ragged matrix");
    m[r].push_back(b[r]);
  }
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Rat lead = m[rank][c];
    for (Rat& x : m[rank]) x /= lead;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m[r][c])) continue;
      const Rat f = m[r][c];
      for (size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!is_zero(m[r][cols])) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = m[r][cols];
  return x;
}

}  // namespace exnil
