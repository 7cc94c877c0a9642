// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perm.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

/// d_i v = 0 for every i.
bool kernel_test(const SuperPoly& v);
/// Coefficient system: d_i f_alpha = f_{s_i alpha} for i in D_alpha, 0 otherwise.
bool system_test(const SuperPoly& v);
/// Runs both tests; throws InvariantViolation if they disagree.
bool is_extended_symmetric(const SuperPoly& v);

/// sum over weight-k alpha of d_{sigma_alpha}(F) w_alpha; F must be S_{n-k} x S_k invariant.
SuperPoly phi_k(int n, int k, const Poly& F);
/// sum_k phi_k(coefficient of w_{tau^(k)}).
SuperPoly phi_reconstruct(const SuperPoly& v);

/// First violated admissibility condition of p_1..p_n, or nullopt.
///
/// Conditions: p_j invariant under S_{n-1} x S_1, homogeneous of degree n-j, and
/// d_{c[j]} p_j a nonzero scalar (equal to 1 when require_unit).
std::optional<std::string> admissibility_failure(const std::vector<Poly>& p, bool require_unit);

/// w^s_j = sum_{k >= j} d_{c[k]}(p_j) w_k; throws PreconditionError naming the failed condition.
std::vector<SuperPoly> exterior_gen(const std::vector<Poly>& p);

enum class BasisFamily { Schubert, Dual, Interp };

struct BasisSpec {
  BasisFamily family = BasisFamily::Dual;
  int r = 0;
};

/// "schubert", "dual", or "interp:r".
BasisSpec parse_basis_spec(std::string_view text);
std::string to_string(const BasisSpec& spec);

/// p_j = S_{c[j]}.
std::vector<Poly> schubert_p(int n);
/// p_j = dual Schubert polynomial of w0 c[j].
std::vector<Poly> dual_p(int n);
/// (-1)^r x_n^r e_{n-j-r}(x_1..x_{n-1}), 0 <= r <= n-j.
Poly interp_p(int n, int j, int r);
/// p_j = interp_p(j, min(r, n-j)).
std::vector<Poly> interp_family(int n, int r);
std::vector<Poly> basis_p(int n, const BasisSpec& spec);

std::vector<SuperPoly> schubert_exterior_basis(int n);
std::vector<SuperPoly> dual_exterior_basis(int n);
std::vector<SuperPoly> exterior_basis(int n, const BasisSpec& spec);

/// sum_{k<j} (-1)^k h_k(x_{n+1-j+k}..x_n) w_{n+1-j+k}.
SuperPoly hw(int n, int j);
/// sum_{k<j} e_k(x_1..x_{n-j+k}) w_{n+1-j+k}.
SuperPoly ew(int n, int j);

/// Ascending product of gens[i-1] over the indices i in mask.
SuperPoly wedge(const std::vector<SuperPoly>& gens, uint32_t mask);

/// Coordinates over Lambda_n keyed by wedge mask of the chosen generators.
using Coordinates = std::map<uint32_t, Poly>;

/// Unique symmetric coordinates of v in the wedge basis of gens.
Coordinates decompose(const SuperPoly& v, const std::vector<SuperPoly>& gens);
SuperPoly reconstruct(const Coordinates& coords, const std::vector<SuperPoly>& gens);

/// Checks the Schubert-basis wedge of alpha against its minor and Schubert expansions.
bool wedge_alpha_check(const BinSeq& alpha);

/// ew(j) = sum_{k<j} e_k(x_1..x_n) hw(j-k) for every j.
bool e_and_h_check(int n);
/// e_k(x_1..x_{n-j+k}) = sum_t (-1)^{k+t} h_{k-t}(x_{n-j+k+1}..x_n) e_t(x_1..x_n).
bool eh_lemma_check(int n, int j, int k);

}  // namespace exnil
