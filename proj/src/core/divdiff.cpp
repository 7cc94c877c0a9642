// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "divdiff.hpp"

#include <map>

#include "errors.hpp"

namespace exnil {

namespace {

// Multiply by x_j^e without touching coefficients.
Monomial shifted(Monomial m, int j, int e) {
  m.set(j, m[j] + e);
  return m;
}

}  // namespace

Poly divide_by_root(const Poly& f, int i) {
  const int n = f.nvars();
  if (i < 1 || i >= n) throw StructuralError("divided difference index out of range");
  // f = sum_a c_a x_i^a with c_a free of x_i; quotient coefficients satisfy
  // q_{a-1} = c_a + x_{i+1} q_a, remainder c_0 + x_{i+1} q_0.
  std::map<int, Poly> by_power;
  int top = -1;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest.set(i, 0);
    auto it = by_power.try_emplace(m[i], Poly(n)).first;
    it->second.add_term(rest, c);
    top = std::max(top, m[i]);
  }
  Poly quotient(n);
  Poly q(n);
  for (int a = top; a >= 1; --a) {
    Poly next(n);
    for (const auto& [m, c] : q.terms()) next.add_term(shifted(m, i + 1, 1), c);
    if (auto it = by_power.find(a); it != by_power.end()) next += it->second;
    q = std::move(next);
    for (const auto& [m, c] : q.terms()) quotient.add_term(shifted(m, i, a - 1), c);
  }
  Poly remainder(n);
  for (const auto& [m, c] : q.terms()) remainder.add_term(shifted(m, i + 1, 1), c);
  if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
  if (!remainder.is_zero()) {
    throw InvariantViolation("division by x" + std::to_string(i) + " - x" + std::to_string(i + 1) +
                             " left remainder " + to_string(remainder));
  }
  return quotient;
}

Poly dd(int i, const Poly& f) { return divide_by_root(f - swap_adjacent(i, f), i); }

Poly dd_word(const std::vector<int>& word, const Poly& f) {
  Poly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (out.is_zero()) break;
    out = dd(*it, out);
  }
  return out;
}

Poly dd_perm(const Perm& w, const Poly& f) {
  if (w.size() != f.nvars()) throw StructuralError("permutation and polynomial sizes differ");
  return dd_word(w.reduced_word(), f);
}

Poly schubert(const Perm& w) {
  const int n = w.size();
  return dd_perm(w.inverse() * Perm::longest(n), x_delta(n));
}

Poly dual_schubert(const Perm& w) {
  const int n = w.size();
  const Perm w0 = Perm::longest(n);
  const Perm ww0 = w * w0;
  Poly out = act_perm(w0, schubert(ww0));
  if (ww0.length() % 2 == 1) out = -out;
  return out;
}

std::vector<Poly> monomials_up_to(int n, int cap) {
  std::vector<Poly> out;
  for (int d = 0; d <= cap; ++d) {
    Poly h = complete(n, d, {1, n});
    for (const auto& [m, c] : h.terms()) out.push_back(Poly::term(m, 1));
  }
  return out;
}

bool dotslide_check(int n, int i, int a, int degree_cap) {
  if (a < 0) throw PreconditionError("dotslide exponent must be non-negative");
  if (i < 1 || i >= n) throw StructuralError("dotslide index out of range");
  const Poly xi = Poly::variable(n, i).pow(a + 1);
  const Poly xj = Poly::variable(n, i + 1).pow(a + 1);
  const Poly h = complete(n, a, {i, i + 1});
  for (const Poly& f : monomials_up_to(n, degree_cap)) {
    const Poly lhs = dd(i, xi * f) - xj * dd(i, f);
    if (!(lhs == h * f)) return false;
    const Poly mirror = xi * dd(i, f) - dd(i, xj * f);
    if (!(mirror == h * f)) return false;
  }
  return true;
}

Poly schur_det_mixed(const BinSeq& alpha) {
  const int n = alpha.size();
  const std::vector<int> u = alpha.ones();
  const int k = static_cast<int>(u.size());
  std::vector<std::vector<Poly>> m(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      m[static_cast<size_t>(i - 1)].push_back(
          elementary_or_zero(n, n - k + i - u[static_cast<size_t>(j - 1)], {1, n - k + i - 1}));
  return determinant(m, n);
}

}  // namespace exnil
