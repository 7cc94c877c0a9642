// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

/// PBW basis label x^a w_S d_w.
struct NHKey {
  Monomial x;
  uint32_t mask = 0;
  Perm w;
};

/// Orders keys by d-part (length, then one-line), then wedge, then degree-lex monomial.
struct NHKeyLess {
  bool operator()(const NHKey& a, const NHKey& b) const;
};

/// Element of the extended nilHecke algebra in PBW normal form.
class NHElem {
 public:
  using Terms = std::map<NHKey, Rat, NHKeyLess>;

  NHElem() = default;
  explicit NHElem(int nvars);
  static NHElem one(int nvars);
  static NHElem x(int nvars, int i);
  static NHElem omega(int nvars, int i);
  /// The divided difference generator d_i.
  static NHElem dd(int nvars, int i);
  static NHElem dd_perm(const Perm& w);
  /// Multiplication operator by v (d-part trivial).
  static NHElem from_superpoly(const SuperPoly& v);
  static NHElem from_poly(const Poly& f) { return from_superpoly(SuperPoly::scalar(f)); }
  static NHElem term(const NHKey& key, const Rat& c);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const NHKey& key, const Rat& c);

  /// sum_w f_w d_w with f_w in the extended polynomial ring.
  std::map<Perm, SuperPoly> by_perm() const;
  /// Assembles sum_w f_w d_w.
  static NHElem from_perm_map(int nvars, const std::map<Perm, SuperPoly>& parts);

  NHElem& operator+=(const NHElem& o);
  NHElem& operator-=(const NHElem& o);
  NHElem operator-() const;
  friend NHElem operator+(NHElem a, const NHElem& b) { return a += b; }
  friend NHElem operator-(NHElem a, const NHElem& b) { return a -= b; }
  friend NHElem operator*(const Rat& c, const NHElem& e);

  bool operator==(const NHElem& o) const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// d_i g = A + B d_i for g in the extended polynomial ring: A = d_i(g), B = s_i(g).
/// Per generator this is the defining relation d_i y = d_i(y) + s_i(y) d_i; the
/// twisted Leibniz rule extends it to products.
std::pair<SuperPoly, SuperPoly> commute_past(int i, const SuperPoly& g);

/// Product in PBW normal form.
NHElem nh_mul(const NHElem& a, const NHElem& b);
inline NHElem operator*(const NHElem& a, const NHElem& b) { return nh_mul(a, b); }

/// Faithful action on the extended polynomial ring.
SuperPoly act(const NHElem& e, const SuperPoly& v);

/// Grading: deg x = 2, deg d = -2, deg w_k = -2k-2.
int paper_degree(const NHKey& key);
/// Sorted multiset of term degrees.
std::vector<int> degree(const NHElem& e);
/// Number of odd factors mod 2, when all terms agree; -1 otherwise.
int parity(const NHElem& e);

/// Finitely supported degree -> dimension map, read as a Laurent polynomial in q.
struct GradedDims {
  std::map<int, long> entries;

  void add(int degree, long dim);
  long total() const;
  bool operator==(const GradedDims& o) const;
  GradedDims operator*(const GradedDims& o) const;
};

/// "1 + q^2 + q^4"; "0" when empty.
std::string to_string(const GradedDims& g);
nlohmann::json to_json(const GradedDims& g);

/// Product of (1 + q^2 + ... + q^{2(k-1)}) over k = 1..n.
GradedDims quantum_factorial_sq(int n);
/// Column shifts q^{2(l(w0) - l(w))}; the column of x^delta d_{w0} sits at degree 0.
GradedDims column_shifts(int n);

/// Index set Sq(n): l = (l_1..l_{n-1}) with 0 <= l_v <= v.
std::vector<std::vector<int>> sq_index_set(int n);
/// l-hat = (0, 1 - l_1, ..., n-1 - l_{n-1}).
std::vector<int> l_hat(const std::vector<int>& l);
/// e_l = prod_v e_{l_v}(x_1..x_v).
Poly e_l(int n, const std::vector<int>& l);
/// sigma_l = e_l d_{w0}.
NHElem sigma_elem(int n, const std::vector<int>& l);
/// lambda_l = (-1)^{|l-hat|} x^delta d_{w0} x^{l-hat}.
NHElem lambda_elem(int n, const std::vector<int>& l);
/// sigma_l lambda_l over Sq(n); throws CapExceeded when n > bound.
std::vector<NHElem> idempotents(int n, int bound = 4);

/// Matrix over the extended symmetric polynomials, rows and columns indexed by all_perms(n).
using NHMatrix = std::vector<std::vector<SuperPoly>>;

/// gamma(e)_{u,w} = d_{w0}(dualS_u * e(S_w)): coordinates of e(S_w) in the Schubert basis.
NHMatrix matrix_iso(const NHElem& e);
/// sum_{u,w} S_u M_{uw} d_{w0} dualS_w.
NHElem matrix_iso_inv(const NHMatrix& m, int n);
NHMatrix matrix_product(const NHMatrix& a, const NHMatrix& b);
NHMatrix identity_matrix(int n);

/// z g = (-1)^{|z||g|} g z for every generator g; throws PreconditionError unless z is homogeneous.
bool center_check(const NHElem& z);

std::string to_string(const NHElem& e);
nlohmann::json to_json(const NHElem& e);
NHElem nh_from_json(const nlohmann::json& j, int nvars);

}  // namespace exnil
