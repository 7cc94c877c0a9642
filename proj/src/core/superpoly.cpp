// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "superpoly.hpp"

#include "divdiff.hpp"

namespace exnil {

int wedge_sign(uint32_t a, uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    // Factors of a with index above j must move past w_j.
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps % 2) ? -1 : 1;
}

bool wedge_mask_less(uint32_t a, uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return mask_indices(a) < mask_indices(b);
}

std::string wedge_string(uint32_t mask, const char* symbol) {
  std::string out;
  for (int i : mask_indices(mask)) {
    if (!out.empty()) out += '*';
    out += symbol + std::to_string(i);
  }
  return out;
}

std::vector<int> mask_indices(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1U << i)) out.push_back(i + 1);
  return out;
}

uint32_t mask_of(const std::vector<int>& indices) {
  uint32_t m = 0;
  for (int i : indices) {
    if (i < 1 || i > 31) throw StructuralError("wedge index out of range");
    if (m & (1U << (i - 1))) throw StructuralError("repeated wedge index");
    m |= 1U << (i - 1);
  }
  return m;
}

SuperPoly act_si(int i, const SuperPoly& v) {
  const int n = v.nvars();
  if (i < 1 || i >= n) throw StructuralError("s" + std::to_string(i) + " outside S_n");
  const uint32_t bi = 1U << (i - 1);
  const uint32_t bj = 1U << i;
  const Poly root = Poly::variable(n, i) - Poly::variable(n, i + 1);
  SuperPoly out(n);
  for (const auto& [m, f] : v.components()) {
    const Poly sf = swap_adjacent(i, f);
    out.add(m, sf);
    // w_i -> w_i + (x_i - x_{i+1}) w_{i+1}; the new factor takes w_i's slot, so no sign.
    if ((m & bi) && !(m & bj)) out.add((m & ~bi) | bj, root * sf);
  }
  return out;
}

SuperPoly act_perm(const Perm& w, const SuperPoly& v) {
  if (w.size() != v.nvars()) throw StructuralError("permutation and super polynomial sizes differ");
  const std::vector<int> word = w.reduced_word();
  SuperPoly out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_si(*it, out);
  return out;
}

SuperPoly ext_dd(int i, const SuperPoly& v) {
  const SuperPoly num = v - act_si(i, v);
  SuperPoly out(v.nvars());
  for (const auto& [m, f] : num.components()) out.add(m, divide_by_root(f, i));
  return out;
}

SuperPoly ext_dd_word(const std::vector<int>& word, const SuperPoly& v) {
  SuperPoly out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (out.is_zero()) break;
    out = ext_dd(*it, out);
  }
  return out;
}

SuperPoly ext_dd_perm(const Perm& w, const SuperPoly& v) {
  if (w.size() != v.nvars()) throw StructuralError("permutation and super polynomial sizes differ");
  return ext_dd_word(w.reduced_word(), v);
}

bool leibniz_check(int i, const SuperPoly& f, const SuperPoly& g) {
  const int n = f.nvars();
  const Poly root = Poly::variable(n, i) - Poly::variable(n, i + 1);
  const SuperPoly lhs = ext_dd(i, f * g);
  const SuperPoly df = ext_dd(i, f);
  const SuperPoly dg = ext_dd(i, g);
  const SuperPoly modified = df * g + f * dg - root * (df * dg);
  const SuperPoly standard = df * g + act_si(i, f) * dg;
  return lhs == modified && lhs == standard;
}

std::set<std::pair<int, int>> bidegree(const SuperPoly& v) {
  std::set<std::pair<int, int>> out;
  for (const auto& [m, f] : v.components())
    for (const auto& [mono, c] : f.terms()) out.emplace(mono.degree(), std::popcount(m));
  return out;
}

}  // namespace exnil
