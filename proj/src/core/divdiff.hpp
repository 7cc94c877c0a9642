// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <vector>

#include "perm.hpp"
#include "poly.hpp"

namespace exnil {

/// Quotient of f by (x_i - x_{i+1}); throws InvariantViolation on a nonzero remainder.
Poly divide_by_root(const Poly& f, int i);

/// (f - s_i f) / (x_i - x_{i+1}).
Poly dd(int i, const Poly& f);
/// d_{i1} ... d_{im} f, rightmost letter applied first.
Poly dd_word(const std::vector<int>& word, const Poly& f);
/// Composite along the reduced word of w.
Poly dd_perm(const Perm& w, const Poly& f);

/// S_w = d_{w^{-1} w0}(x^delta).
Poly schubert(const Perm& w);
/// Dual Schubert polynomial (-1)^{l(w w0)} w0(S_{w w0}).
Poly dual_schubert(const Perm& w);

/// Checks d_i x_i^{a+1} - x_{i+1}^{a+1} d_i = h_a(x_i, x_{i+1}) and its mirror
/// x_i^{a+1} d_i - d_i x_{i+1}^{a+1} = h_a as operators on all monomials of degree <= cap.
bool dotslide_check(int n, int i, int a, int degree_cap);

/// det(e_{n-k+i-u_j}(x_1..x_{n-k+i-1})) for the ones u of alpha.
Poly schur_det_mixed(const BinSeq& alpha);

/// All monomials in n variables with total degree <= cap, as polynomials.
std::vector<Poly> monomials_up_to(int n, int cap);

}  // namespace exnil
