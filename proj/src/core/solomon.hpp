// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

/// df = sum_i (d f / d x_i) dx_i.
DiffSuperPoly exterior_derivative(const Poly& f);

/// Index-permuting action: x_j -> x_{w(j)}, dx_j -> dx_{w(j)}, with the reordering sign.
DiffSuperPoly act_index_si(int i, const DiffSuperPoly& v);
DiffSuperPoly act_index(const Perm& w, const DiffSuperPoly& v);

bool solomon_invariant_check(const DiffSuperPoly& v);

/// f_i = e_{n+1-i} (Shifted, degree n+1-i) or f_i = e_{n-i} (AsPrinted, f_n constant).
enum class FDegreeConvention { Shifted, AsPrinted };
std::vector<Poly> default_f(int n, FDegreeConvention conv = FDegreeConvention::Shifted);

/// det[d f_i / d x_j]; nonzero iff f is algebraically independent.
Poly jacobian_determinant(const std::vector<Poly>& f);

/// Symmetric c_S with v = sum_S c_S df_S, by one linear solve per bidegree; nullopt if none.
std::optional<std::map<uint32_t, Poly>> solomon_coordinates(const DiffSuperPoly& v, const std::vector<Poly>& f);
/// v lies in Q[e, de].
bool solomon_membership(const DiffSuperPoly& v);

/// Square matrix with polynomial entries; entry (i,j) at [i-1][j-1].
using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_identity(int n);
PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);
/// Inverse of an upper triangular matrix with nonzero scalar diagonal.
PolyMatrix poly_inverse_upper(const PolyMatrix& m);

/// P_ij = d_{c[j]} p_i.
PolyMatrix matrix_P(const std::vector<Poly>& p);
/// Admissible with nonzero (not necessarily unit) scalars, P upper triangular invertible,
/// and d_k(P) = gamma_k(P) for every k.
bool admissible_check(const std::vector<Poly>& p);

/// gamma_k(A)_{ij} = delta_{j,k+1} A_{ik}.
PolyMatrix gamma_k(const PolyMatrix& a, int k);
/// rho_k(T)_i = delta_{ik} T_{k+1} on a column of odd elements.
std::vector<DiffSuperPoly> rho_k(const std::vector<DiffSuperPoly>& t, int k);

enum class SolomonFamily { H, E };
SolomonFamily parse_family(const std::string& text);
std::string to_string(SolomonFamily f);

/// h: p_j = (-1)^{n-j} h_{n-j}(x_n); e: p_j = e_{n-j}(x_1..x_{n-1}).
std::vector<Poly> family_p(int n, SolomonFamily f);
/// Closed forms: H_ij = (-1)^{j-i} h_{j-i}(x_j..x_n), E_ij = e_{j-i}(x_1..x_{j-1}).
PolyMatrix matrix_H(int n);
PolyMatrix matrix_E(int n);
/// Q_ij = e_{j-i}(x_{i+1}..x_n), Qtilde_ij = (-1)^{j-i} h_{j-i}(x_1..x_i).
PolyMatrix matrix_Q(int n);
PolyMatrix matrix_Qtilde(int n);

/// H Q = Id and E Qtilde = Id.
bool hq_inverse_check(int n);

/// J(w) = P^{-1} df; throws PreconditionError for inadmissible p or dependent f.
std::vector<DiffSuperPoly> j_images(const std::vector<Poly>& p, const std::vector<Poly>& f);
/// Q[x]-linear algebra extension of j_images to v.
DiffSuperPoly j_map(const std::vector<Poly>& p, const std::vector<Poly>& f, const SuperPoly& v);

/// s_i J(w_j) = J(w_j) + delta_ij (x_i - x_{i+1}) J(w_{i+1}) for all i, j.
bool j_equivariance_check(const std::vector<Poly>& p, const std::vector<Poly>& f);

/// Coordinates of v over the p-basis wedges equal its coordinates over the df wedges after J.
bool coordinate_check(const std::vector<Poly>& p, const std::vector<Poly>& f, const SuperPoly& v);

/// Per-k truth values of (a) d_k P = gamma_k P, (b) d_k Xi = 0, (c) d_k Theta = -rho_k Theta,
/// each checked in multiplied-out form (v - s_k v = (x_k - x_{k+1}) rhs).
struct TripleResult {
  std::vector<bool> a;
  std::vector<bool> b;
  std::vector<bool> c;
  /// Any two of (a), (b), (c) imply the third for every k.
  bool implications_hold = true;
};

/// Requires Xi = P Theta with the components of Theta independent; throws PreconditionError otherwise.
TripleResult lemma_triple_check(const PolyMatrix& P, const std::vector<DiffSuperPoly>& theta,
                                const std::vector<DiffSuperPoly>& xi);

/// df_j is fixed by every s_i, so d_i(df_j) = 0 and Q[x, df] is closed under d_i.
bool df_stability_check(const std::vector<Poly>& f);

/// Bigraded dimensions of invariants of Q[x,w] (twisted action) and Q[x,dx] (index action),
/// with bidegree (x-degree + sum (n-i) over odd factors, odd count) for w and (x-degree, odd count) for dx.
struct InvariantDims {
  int n = 0;
  int max_degree = 0;
  /// [degree][odd count]
  std::vector<std::vector<long>> omega;
  std::vector<std::vector<long>> dx;
  /// Free Lambda_n-module on generators of bidegree (n-i, 1).
  std::vector<std::vector<long>> expected;
  bool matches = false;
};
InvariantDims invariant_dims(int n, int max_degree);

struct SolomonReport {
  int n = 0;
  SolomonFamily family = SolomonFamily::H;
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};
/// Runs every check above on one family with generators default_f(n, conv).
SolomonReport solomon_report(int n, SolomonFamily family, FDegreeConvention conv = FDegreeConvention::Shifted);
nlohmann::json to_json(const SolomonReport& r);

}  // namespace exnil
