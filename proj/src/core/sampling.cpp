// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "sampling.hpp"

#include "perm.hpp"

namespace exnil {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_monomial(Rng& rng, int n, int max_degree) {
  Monomial m(n);
  int budget = uniform(rng, 0, max_degree);
  while (budget > 0) {
    const int i = uniform(rng, 1, n);
    m.set(i, m[i] + 1);
    --budget;
  }
  return m;
}

}  // namespace

Rat random_rat(Rng& rng) {
  int p = 0;
  while (p == 0) p = uniform(rng, -5, 5);
  Rat r(p, uniform(rng, 1, 3));
  r.canonicalize();
  return r;
}

Poly random_poly(Rng& rng, int n, int max_degree, int terms) {
  Poly f(n);
  for (int t = 0; t < terms; ++t) f += Poly::term(random_monomial(rng, n, max_degree), random_rat(rng));
  return f;
}

Poly random_symmetric(Rng& rng, int n, int max_degree) {
  Poly f(n);
  const int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    Poly prod = Poly::constant(n, random_rat(rng));
    int budget = uniform(rng, 0, max_degree);
    while (budget > 0) {
      const int k = uniform(rng, 1, std::min(n, budget));
      prod = prod * elementary(n, k, {1, n});
      budget -= k;
    }
    f += prod;
  }
  return f;
}

SuperPoly random_superpoly(Rng& rng, int n, int max_degree, int terms) {
  SuperPoly v(n);
  const uint32_t top = 1U << n;
  for (int t = 0; t < terms; ++t) {
    const uint32_t mask = static_cast<uint32_t>(uniform(rng, 0, static_cast<int>(top) - 1));
    v.add(mask, Poly::term(random_monomial(rng, n, max_degree), random_rat(rng)));
  }
  return v;
}

Coordinates random_coordinates(Rng& rng, int n, int max_degree) {
  Coordinates c;
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (uniform(rng, 0, 2) == 0) continue;
    const Poly f = random_symmetric(rng, n, max_degree);
    if (!f.is_zero()) c.emplace(mask, f);
  }
  return c;
}

NHElem random_nh(Rng& rng, int n, int max_degree, int terms, bool with_omega) {
  const std::vector<Perm> perms = all_perms(n);
  NHElem e(n);
  for (int t = 0; t < terms; ++t) {
    NHKey key;
    key.x = random_monomial(rng, n, max_degree);
    key.mask = with_omega ? static_cast<uint32_t>(uniform(rng, 0, (1 << n) - 1)) : 0U;
    key.w = perms[static_cast<size_t>(uniform(rng, 0, static_cast<int>(perms.size()) - 1))];
    e.add_term(key, random_rat(rng));
  }
  return e;
}

}  // namespace exnil
