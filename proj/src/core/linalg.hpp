// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace exnil {

/// Sparse rational vector keyed by coordinate index.
using SparseVec = std::map<int, Rat>;

/// Incrementally grown row-echelon basis over Q.
///
/// Each stored row has leading coordinate 1 at its pivot and no entries at smaller
/// indices; smaller indices are eliminated first.
class EchelonBasis {
 public:
  /// Adds v to the span; returns false when v was already in it.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Eliminates every pivot coordinate of v.
  SparseVec reduce(SparseVec v) const;
  size_t rank() const { return rows_.size(); }
  bool is_pivot(int index) const { return rows_.count(index) != 0; }

 private:
  std::map<int, SparseVec> rows_;
};

using DenseMatrix = std::vector<std::vector<Rat>>;

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
long rank_fraction_free(const DenseMatrix& m);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Some x with a x = b, free variables set to 0; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const DenseMatrix& a, const std::vector<Rat>& b);

}  // namespace exnil
