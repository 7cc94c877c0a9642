// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "perm.hpp"
#include "rational.hpp"

namespace exnil {

inline constexpr int kMaxVars = 8;

/// Exponent vector x_1^{a_1} ... x_n^{a_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exps);
  static Monomial from_exponents(const std::vector<int>& exps);

  int nvars() const { return n_; }
  /// Exponent of x_i, 1-based.
  int operator[](int i) const { return e_[static_cast<size_t>(i - 1)]; }
  void set(int i, int e);
  int degree() const;
  std::vector<int> exponents() const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  uint8_t n_ = 0;
  std::array<uint16_t, kMaxVars> e_{};
};

/// Degree-lex order with x_1 > x_2 > ...; larger monomials compare first.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in x_1..x_n; never stores a zero coefficient.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat, DegLexGreater>;

  Poly() = default;
  explicit Poly(int nvars);
  static Poly constant(int nvars, const Rat& c);
  /// x_i, 1-based.
  static Poly variable(int nvars, int i);
  static Poly term(const Monomial& m, const Rat& c);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rat coeff(const Monomial& m) const;
  /// Constant term when the polynomial is a constant; nullopt otherwise.
  std::optional<Rat> as_constant() const;

  /// Highest total degree; -1 for zero.
  int degree() const;
  /// Lowest total degree; -1 for zero.
  int low_degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(int d) const;

  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly operator-() const;
  Poly pow(int e) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_same(const Poly& o) const;

  int n_ = 0;
  Terms terms_;
};

/// Inclusive 1-based window x_lo..x_hi; empty when hi < lo.
struct VarRange {
  int lo = 1;
  int hi = 0;
  int count() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// x_j -> x_{w(j)}.
Poly act_perm(const Perm& w, const Poly& f);
/// Exchange x_i and x_{i+1}.
Poly swap_adjacent(int i, const Poly& f);
Poly partial_derivative(const Poly& f, int i);

/// e_k, h_k, p_k in the window; throw PreconditionError for negative k.
Poly elementary(int nvars, int k, VarRange vars);
Poly complete(int nvars, int k, VarRange vars);
Poly power_sum(int nvars, int k, VarRange vars);
/// As above but zero for negative k.
Poly elementary_or_zero(int nvars, int k, VarRange vars);
Poly complete_or_zero(int nvars, int k, VarRange vars);

/// det(e_{lambda'_i + j - i}) in the window.
Poly schur(int nvars, const Partition& lambda, VarRange vars);
/// Monomial symmetric function m_mu in all n variables.
Poly monomial_symmetric(int nvars, const Partition& mu);
/// Partitions of d with at most n parts as length-n weakly decreasing vectors, lex descending.
std::vector<std::vector<int>> padded_partitions(int d, int n);

/// e_m(x_1..x_n) = e_m(x_1..x_{n-1}) + x_n e_{m-1}(x_1..x_{n-1}).
bool recursion_check_e(int m, int n);

/// x^delta = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Poly x_delta(int n);

/// Invariant under every adjacent transposition.
bool is_symmetric(const Poly& f);

/// Determinant by cofactor expansion with column-subset memoization.
Poly determinant(const std::vector<std::vector<Poly>>& m, int nvars);

std::string to_string(const Poly& f);
/// Monomial alone, e.g. "x1^2*x3"; "1" for the unit.
std::string to_string(const Monomial& m);
nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j, int nvars);

}  // namespace exnil
