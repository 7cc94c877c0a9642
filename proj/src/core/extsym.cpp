// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "extsym.hpp"

#include <algorithm>
#include <bit>

#include "divdiff.hpp"
#include "errors.hpp"

namespace exnil {

namespace {

uint32_t swap_bits(uint32_t m, int i) {
  const uint32_t bi = 1U << (i - 1);
  const uint32_t bj = 1U << i;
  const bool a = m & bi;
  const bool b = m & bj;
  m &= ~(bi | bj);
  if (a) m |= bj;
  if (b) m |= bi;
  return m;
}

int position_sum(uint32_t m) {
  int s = 0;
  for (int i : mask_indices(m)) s += i;
  return s;
}

}  // namespace

bool kernel_test(const SuperPoly& v) {
  for (int i = 1; i < v.nvars(); ++i)
    if (!ext_dd(i, v).is_zero()) return false;
  return true;
}

bool system_test(const SuperPoly& v) {
  const int n = v.nvars();
  for (uint32_t m = 0; m < (1U << n); ++m) {
    const BinSeq alpha(n, m);
    const Poly f = v.component(m);
    for (int i = 1; i < n; ++i) {
      const Poly d = dd(i, f);
      if (in_J(alpha, i)) {
        if (!(d == v.component(swap_bits(m, i)))) return false;
      } else if (!d.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_extended_symmetric(const SuperPoly& v) {
  const bool k = kernel_test(v);
  const bool s = system_test(v);
  if (k != s) throw InvariantViolation("kernel and coefficient-system membership tests disagree");
  return k;
}

SuperPoly phi_k(int n, int k, const Poly& F) {
  if (F.nvars() != n) throw StructuralError("phi_k input has the wrong variable count");
  if (k < 0 || k > n) throw StructuralError("phi_k weight out of range");
  for (int i = 1; i < n; ++i) {
    if (i == n - k) continue;
    if (!dd(i, F).is_zero()) {
      throw PreconditionError("phi_k input is not invariant under s" + std::to_string(i));
    }
  }
  SuperPoly out(n);
  for (const BinSeq& alpha : binseqs_of_weight(n, k)) out.add(alpha.mask(), dd_perm(sigma_of(alpha), F));
  return out;
}

SuperPoly phi_reconstruct(const SuperPoly& v) {
  const int n = v.nvars();
  SuperPoly out(n);
  for (int k = 0; k <= n; ++k) {
    const Poly F = v.component(BinSeq::tau(n, k).mask());
    if (!F.is_zero()) out += phi_k(n, k, F);
  }
  return out;
}

std::optional<std::string> admissibility_failure(const std::vector<Poly>& p, bool require_unit) {
  const int n = static_cast<int>(p.size());
  if (n < 1) return "empty tuple";
  for (int j = 1; j <= n; ++j) {
    const Poly& pj = p[static_cast<size_t>(j - 1)];
    const std::string tag = "p_" + std::to_string(j);
    if (pj.nvars() != n) return tag + " has the wrong variable count";
    for (int i = 1; i + 1 < n; ++i)
      if (!dd(i, pj).is_zero()) return tag + " is not invariant under s" + std::to_string(i);
    if (pj.is_zero()) return tag + " is zero";
    if (!pj.is_homogeneous() || pj.degree() != n - j) {
      return tag + " is not homogeneous of degree " + std::to_string(n - j);
    }
    const auto lead = dd_perm(coxeter_tail(n, j), pj).as_constant();
    if (!lead || is_zero(*lead)) return tag + " has non-scalar or zero image under d_c[j]";
    if (require_unit && *lead != 1) return tag + " has d_c[j] image " + lead->get_str() + " instead of 1";
  }
  return std::nullopt;
}

std::vector<SuperPoly> exterior_gen(const std::vector<Poly>& p) {
  if (auto why = admissibility_failure(p, true)) throw PreconditionError("inadmissible tuple: " + *why);
  const int n = static_cast<int>(p.size());
  std::vector<SuperPoly> out;
  for (int j = 1; j <= n; ++j) {
    SuperPoly g(n);
    for (int k = j; k <= n; ++k)
      g.add(1U << (k - 1), dd_perm(coxeter_tail(n, k), p[static_cast<size_t>(j - 1)]));
    out.push_back(std::move(g));
  }
  return out;
}

BasisSpec parse_basis_spec(std::string_view text) {
  if (text == "schubert" || text == "e") return {BasisFamily::Schubert, 0};
  if (text == "dual" || text == "h") return {BasisFamily::Dual, 0};
  if (text.substr(0, 7) == "interp:") {
    const std::string num(text.substr(7));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("interp family needs a non-negative integer r");
    }
    return {BasisFamily::Interp, std::stoi(num)};
  }
  throw ParseError("unknown basis family '" + std::string(text) + "'");
}

std::string to_string(const BasisSpec& spec) {
  switch (spec.family) {
    case BasisFamily::Schubert:
      return "schubert";
    case BasisFamily::Dual:
      return "dual";
    case BasisFamily::Interp:
      return "interp:" + std::to_string(spec.r);
  }
  return "";
}

std::vector<Poly> schubert_p(int n) {
  std::vector<Poly> p;
  for (int j = 1; j <= n; ++j) p.push_back(schubert(coxeter_tail(n, j)));
  return p;
}

std::vector<Poly> dual_p(int n) {
  std::vector<Poly> p;
  const Perm w0 = Perm::longest(n);
  for (int j = 1; j <= n; ++j) p.push_back(dual_schubert(w0 * coxeter_tail(n, j)));
  return p;
}

Poly interp_p(int n, int j, int r) {
  if (j < 1 || j > n) throw StructuralError("interp_p index j out of range");
  if (r < 0 || r > n - j) throw StructuralError("interp_p needs 0 <= r <= n - j");
  Poly out = Poly::variable(n, n).pow(r) * elementary(n, n - j - r, {1, n - 1});
  if (r % 2) out = -out;
  return out;
}

std::vector<Poly> interp_family(int n, int r) {
  if (r < 0) throw StructuralError("interp family needs r >= 0");
  std::vector<Poly> p;
  for (int j = 1; j <= n; ++j) p.push_back(interp_p(n, j, std::min(r, n - j)));
  return p;
}

std::vector<Poly> basis_p(int n, const BasisSpec& spec) {
  switch (spec.family) {
    case BasisFamily::Schubert:
      return schubert_p(n);
    case BasisFamily::Dual:
      return dual_p(n);
    case BasisFamily::Interp:
      return interp_family(n, spec.r);
  }
  return {};
}

std::vector<SuperPoly> schubert_exterior_basis(int n) { return exterior_gen(schubert_p(n)); }

std::vector<SuperPoly> dual_exterior_basis(int n) { return exterior_gen(dual_p(n)); }

std::vector<SuperPoly> exterior_basis(int n, const BasisSpec& spec) { return exterior_gen(basis_p(n, spec)); }

SuperPoly hw(int n, int j) {
  if (j < 1 || j > n) throw StructuralError("hw index out of range");
  SuperPoly out(n);
  for (int k = 0; k < j; ++k) {
    Poly c = complete(n, k, {n + 1 - j + k, n});
    if (k % 2) c = -c;
    out.add(1U << (n - j + k), c);
  }
  return out;
}

SuperPoly ew(int n, int j) {
  if (j < 1 || j > n) throw StructuralError("ew index out of range");
  SuperPoly out(n);
  for (int k = 0; k < j; ++k) out.add(1U << (n - j + k), elementary(n, k, {1, n - j + k}));
  return out;
}

SuperPoly wedge(const std::vector<SuperPoly>& gens, uint32_t mask) {
  const int n = gens.empty() ? 0 : gens.front().nvars();
  SuperPoly out = SuperPoly::scalar(Poly::constant(n, 1));
  for (int i : mask_indices(mask)) {
    if (i > static_cast<int>(gens.size())) throw StructuralError("wedge index beyond generators");
    out = out * gens[static_cast<size_t>(i - 1)];
  }
  return out;
}

Coordinates decompose(const SuperPoly& v, const std::vector<SuperPoly>& gens) {
  const int n = v.nvars();
  if (static_cast<int>(gens.size()) != n) throw StructuralError("basis has the wrong number of generators");
  if (!kernel_test(v)) throw PreconditionError("input is not an extended symmetric polynomial");
  Coordinates coords;
  SuperPoly residual = v;
  // Each wedge is w_alpha plus terms at beta > alpha, and > raises the position sum of the
  // ones; eliminating the support element with the smallest position sum is triangular.
  while (!residual.is_zero()) {
    uint32_t best = 0;
    bool found = false;
    for (const auto& [m, f] : residual.components()) {
      if (!found || position_sum(m) < position_sum(best) ||
          (position_sum(m) == position_sum(best) && m < best)) {
        best = m;
        found = true;
      }
    }
    const Poly c = residual.component(best);
    if (!is_symmetric(c)) {
      throw InvariantViolation("non-symmetric residue at wedge " + wedge_string(best, "w"));
    }
    residual -= c * wedge(gens, best);
    if (!residual.component(best).is_zero()) {
      throw InvariantViolation("basis wedge is not unitriangular at " + wedge_string(best, "w"));
    }
    coords.try_emplace(best, Poly(n)).first->second += c;
  }
  for (auto it = coords.begin(); it != coords.end();) it = it->second.is_zero() ? coords.erase(it) : std::next(it);
  return coords;
}

SuperPoly reconstruct(const Coordinates& coords, const std::vector<SuperPoly>& gens) {
  const int n = gens.empty() ? 0 : gens.front().nvars();
  SuperPoly out(n);
  for (const auto& [m, c] : coords) out += c * wedge(gens, m);
  return out;
}

bool wedge_alpha_check(const BinSeq& alpha) {
  const int n = alpha.size();
  const int k = alpha.weight();
  const std::vector<SuperPoly> gens = schubert_exterior_basis(n);
  const SuperPoly w = wedge(gens, alpha.mask());
  // Column j of the generator matrix holds the w-coefficients of w^s_j: S_{c[j,i]} = e_{i-j}(x_1..x_{i-1}).
  std::vector<std::vector<Poly>> gen_matrix(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n), Poly(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      gen_matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = elementary(n, i - j, {1, i - 1});
  auto minor = [&](const BinSeq& rows, const BinSeq& cols) {
    std::vector<std::vector<Poly>> m;
    for (int r : rows.ones()) {
      std::vector<Poly> row;
      for (int c : cols.ones()) row.push_back(gen_matrix[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]);
      m.push_back(std::move(row));
    }
    return determinant(m, n);
  };
  const Perm sa = sigma_of(alpha);
  const BinSeq top = BinSeq::tau(n, k);
  const Poly top_minor = minor(top, alpha);
  for (const BinSeq& beta : binseqs_of_weight(n, k)) {
    const Poly actual = w.component(beta.mask());
    Poly expected(n);
    if (beta == alpha) {
      expected = Poly::constant(n, 1);
    } else if (prec(alpha, beta)) {
      const Perm sb = sigma_of(beta);
      const Perm q = sa * sb.inverse();
      if (q.length() == sa.length() - sb.length()) expected = schubert(q);
    }
    if (!(actual == expected)) return false;
    if (!(minor(beta, alpha) == actual)) return false;
    if (!(dd_perm(sigma_of(beta), top_minor) == actual)) return false;
  }
  return true;
}

bool e_and_h_check(int n) {
  for (int j = 1; j <= n; ++j) {
    SuperPoly rhs(n);
    for (int k = 0; k < j; ++k) rhs += elementary(n, k, {1, n}) * hw(n, j - k);
    if (!(rhs == ew(n, j))) return false;
  }
  return true;
}

bool eh_lemma_check(int n, int j, int k) {
  if (j < 1 || j > n) throw PreconditionError("eh_lemma_check needs 1 <= j <= n");
  if (k < 0 || k > j) throw PreconditionError("eh_lemma_check needs 0 <= k <= j");
  const int m = n - j + k;
  const Poly lhs = elementary(n, k, {1, m});
  Poly rhs(n);
  for (int t = 0; t <= k; ++t) {
    Poly term = complete(n, k - t, {m + 1, n}) * elementary(n, t, {1, n});
    if ((k + t) % 2) term = -term;
    rhs += term;
  }
  return lhs == rhs;
}

}  // namespace exnil
