// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <cstdint>
#include <random>

#include "extsym.hpp"
#include "nilhecke.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

/// Seeded generator shared by the harness and tests; streams are reproducible per seed.
using Rng = std::mt19937_64;

/// Nonzero small rational p/q with |p| <= 5, 1 <= q <= 3.
Rat random_rat(Rng& rng);
/// Sum of up to `terms` monomials of degree <= max_degree with small coefficients.
Poly random_poly(Rng& rng, int n, int max_degree, int terms);
/// Small combination of products of elementary symmetric polynomials, degree <= max_degree.
Poly random_symmetric(Rng& rng, int n, int max_degree);
SuperPoly random_superpoly(Rng& rng, int n, int max_degree, int terms);
/// Random symmetric coordinates on a random subset of the 2^n wedge masks.
Coordinates random_coordinates(Rng& rng, int n, int max_degree);
/// Sum of up to `terms` PBW monomials x^a w_S d_w with |a| <= max_degree.
NHElem random_nh(Rng& rng, int n, int max_degree, int terms, bool with_omega = true);

}  // namespace exnil
