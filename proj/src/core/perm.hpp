// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace exnil {

/// Permutation of {1..n} in one-line notation.
///
/// Composition follows (uv)(i) = u(v(i)); a word s_{i1}...s_{im} denotes the
/// product with s_{im} applied first.
class Perm {
 public:
  Perm() = default;
  /// Identity of S_n.
  explicit Perm(int n);

  /// From 1-based images; throws StructuralError unless a bijection.
  static Perm from_one_line(const std::vector<int>& images);
  /// Product s_{i1}...s_{im}; every letter must satisfy 1 <= i < n.
  static Perm from_word(int n, const std::vector<int>& word);
  static Perm simple(int n, int i);
  static Perm longest(int n);

  int size() const { return static_cast<int>(img_.size()); }
  /// w(i) with 1-based argument and value.
  int operator()(int i) const { return img_[static_cast<size_t>(i - 1)] + 1; }

  Perm operator*(const Perm& v) const;
  Perm inverse() const;

  /// Number of inversions.
  int length() const;
  /// {i : w(i) > w(i+1)}, 1-based.
  std::vector<int> descents() const;
  bool is_grassmannian() const;
  bool is_identity() const;

  /// Lexicographically smallest reduced word: repeatedly strip the smallest left descent.
  std::vector<int> reduced_word() const;
  /// L_i = #{j > i : w(j) < w(i)}.
  std::vector<int> lehmer_code() const;
  std::vector<int> one_line() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<uint8_t> img_;  // 0-based images
};

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts nothing: throws PreconditionError unless weakly decreasing and non-negative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// i-th part, 1-based; 0 beyond the length.
  int part(int i) const;
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Binary sequence alpha in Z_2^n; bit i (1-based) is alpha_i.
class BinSeq {
 public:
  BinSeq() = default;
  BinSeq(int n, uint32_t mask);
  static BinSeq from_bits(const std::vector<int>& bits);
  /// tau^(k) = 0^{n-k} 1^k, the maximal element of weight k.
  static BinSeq tau(int n, int k);
  /// lambda^(k) = 1^k 0^{n-k}, the minimal element of weight k.
  static BinSeq lambda(int n, int k);

  int size() const { return n_; }
  uint32_t mask() const { return mask_; }
  int bit(int i) const { return static_cast<int>((mask_ >> (i - 1)) & 1U); }
  int weight() const;
  /// Positions of ones u_1 < ... < u_k, 1-based.
  std::vector<int> ones() const;
  /// Positions of zeros v_1 < ... < v_{n-k}, 1-based.
  std::vector<int> zeros() const;

  /// (w alpha)_{w(i)} = alpha_i.
  BinSeq permuted(const Perm& w) const;

  auto operator<=>(const BinSeq&) const = default;

 private:
  int n_ = 0;
  uint32_t mask_ = 0;
};

Partition partition_of(const Perm& w);

/// All of S_n, ordered by length then one-line notation.
std::vector<Perm> all_perms(int n);
/// All sequences of length n and weight k in increasing mask order.
std::vector<BinSeq> binseqs_of_weight(int n, int k);

/// sigma_alpha: minimal-length permutation with sigma_alpha(tau^(k)) = alpha.
Perm sigma_of(const BinSeq& alpha);
/// Partition of sigma_alpha; at most n-k parts, each at most k.
Partition lambda_of(const BinSeq& alpha);

/// alpha in I_k: alpha_k = 1, alpha_{k+1} = 0.
bool in_I(const BinSeq& alpha, int k);
/// alpha in J_k: alpha_k = 0, alpha_{k+1} = 1.
bool in_J(const BinSeq& alpha, int k);
/// D_alpha = {k : alpha in J_k}.
std::vector<int> descent_set(const BinSeq& alpha);
/// Sequences reached from alpha by one move (1,0) -> (0,1).
std::vector<BinSeq> covers(const BinSeq& alpha);
/// Strict order generated by covers; throws StructuralError on weight mismatch.
bool prec(const BinSeq& alpha, const BinSeq& beta);

/// c[j,k] = s_j ... s_{k-1}; identity when j = k.
Perm coxeter(int n, int j, int k);
/// c[j] = c[j,n].
Perm coxeter_tail(int n, int j);
/// c^(k) = c[k,n] ... c[2,n-k+2] c[1,n-k+1].
Perm coxeter_k(int n, int k);
/// Concatenated word of c^(k) in the factor order above.
std::vector<int> coxeter_k_word(int n, int k);

std::string to_string(const Perm& w);
std::string word_string(const std::vector<int>& word);
std::string to_string(const BinSeq& alpha);
std::string to_string(const Partition& lambda);

/// Accepts "[2,3,1]", "2 3 1", "s1 s2", "id" or "" (identity).
Perm parse_perm(int n, std::string_view text);
BinSeq parse_binseq(std::string_view text);
/// Accepts "2,1" or "2 1"; empty text is the empty partition.
Partition parse_partition(std::string_view text);

}  // namespace exnil
