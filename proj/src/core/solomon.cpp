// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "solomon.hpp"

#include <bit>
#include <tuple>

#include "divdiff.hpp"
#include "errors.hpp"
#include "extsym.hpp"
#include "linalg.hpp"

namespace exnil {

namespace {

using RowKey = std::tuple<int, uint32_t, std::vector<int>>;

int size_of(const PolyMatrix& m) { return static_cast<int>(m.size()); }

const Poly& at(const PolyMatrix& m, int i, int j) { return m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

Poly& at(PolyMatrix& m, int i, int j) { return m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

PolyMatrix zero_matrix(int n) { return PolyMatrix(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n), Poly(n))); }

Poly root(int n, int k) { return Poly::variable(n, k) - Poly::variable(n, k + 1); }

/// All degree-d monomials in n variables.
std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  const Poly h = complete(n, d, {1, n});
  for (const auto& [m, c] : h.terms()) out.push_back(m);
  return out;
}

DiffSuperPoly wedge_of(const std::vector<DiffSuperPoly>& gens, uint32_t mask, int n) {
  DiffSuperPoly out = DiffSuperPoly::scalar(Poly::constant(n, 1));
  for (int i : mask_indices(mask)) out = out * gens[static_cast<size_t>(i - 1)];
  return out;
}

/// dim of the common fixed space of all s_i on the given basis, via rank of the stacked (s_i - 1).
template <class Elem, class Act>
long fixed_dim(int n, const std::vector<Elem>& basis, Act act) {
  std::map<RowKey, int> rows;
  EchelonBasis image;
  for (const Elem& b : basis) {
    SparseVec v;
    for (int i = 1; i < n; ++i) {
      const Elem diff = act(i, b) - b;
      for (const auto& [m, f] : diff.components())
        for (const auto& [mono, c] : f.terms()) {
          const int idx = rows.try_emplace({i, m, mono.exponents()}, static_cast<int>(rows.size())).first->second;
          v[idx] = c;
        }
    }
    image.insert(std::move(v));
  }
  return static_cast<long>(basis.size()) - static_cast<long>(image.rank());
}

}  // namespace

DiffSuperPoly exterior_derivative(const Poly& f) {
  const int n = f.nvars();
  DiffSuperPoly out(n);
  for (int i = 1; i <= n; ++i) out.add(1U << (i - 1), partial_derivative(f, i));
  return out;
}

DiffSuperPoly act_index_si(int i, const DiffSuperPoly& v) {
  const int n = v.nvars();
  if (i < 1 || i >= n) throw StructuralError("s" + std::to_string(i) + " outside S_n");
  const uint32_t bi = 1U << (i - 1);
  const uint32_t bj = 1U << i;
  DiffSuperPoly out(n);
  for (const auto& [m, f] : v.components()) {
    uint32_t r = m & ~(bi | bj);
    if (m & bi) r |= bj;
    if (m & bj) r |= bi;
    // dx_i dx_{i+1} -> dx_{i+1} dx_i = -dx_i dx_{i+1}.
    const bool flip = (m & bi) && (m & bj);
    const Poly g = swap_adjacent(i, f);
    out.add(r, flip ? -g : g);
  }
  return out;
}

DiffSuperPoly act_index(const Perm& w, const DiffSuperPoly& v) {
  if (w.size() != v.nvars()) throw StructuralError("permutation and super polynomial sizes differ");
  const std::vector<int> word = w.reduced_word();
  DiffSuperPoly out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_index_si(*it, out);
  return out;
}

bool solomon_invariant_check(const DiffSuperPoly& v) {
  for (int i = 1; i < v.nvars(); ++i)
    if (!(act_index_si(i, v) == v)) return false;
  return true;
}

std::vector<Poly> default_f(int n, FDegreeConvention conv) {
  std::vector<Poly> f;
  for (int i = 1; i <= n; ++i) f.push_back(elementary(n, conv == FDegreeConvention::Shifted ? n + 1 - i : n - i, {1, n}));
  return f;
}

Poly jacobian_determinant(const std::vector<Poly>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<std::vector<Poly>> m;
  for (const Poly& fi : f) {
    if (fi.nvars() != n) throw StructuralError("generator count differs from variable count");
    std::vector<Poly> row;
    for (int j = 1; j <= n; ++j) row.push_back(partial_derivative(fi, j));
    m.push_back(std::move(row));
  }
  return determinant(m, n);
}

std::optional<std::map<uint32_t, Poly>> solomon_coordinates(const DiffSuperPoly& v, const std::vector<Poly>& f) {
  const int n = v.nvars();
  if (static_cast<int>(f.size()) != n) throw StructuralError("generator count differs from variable count");
  std::vector<DiffSuperPoly> df;
  std::vector<int> shift;
  for (const Poly& fi : f) {
    if (!fi.is_homogeneous() || fi.is_zero()) throw PreconditionError("generators must be homogeneous and nonzero");
    df.push_back(exterior_derivative(fi));
    shift.push_back(fi.degree() - 1);
  }
  // Bidegree (x-degree, odd count) -> component.
  std::map<std::pair<int, int>, DiffSuperPoly> parts;
  for (const auto& [m, p] : v.components())
    for (const auto& [mono, c] : p.terms())
      parts.try_emplace({mono.degree(), std::popcount(m)}, DiffSuperPoly(n)).first->second.add(m, Poly::term(mono, c));

  std::map<uint32_t, Poly> coords;
  for (const auto& [bideg, part] : parts) {
    const auto [d, k] = bideg;
    struct Unknown {
      uint32_t mask;
      std::vector<int> mu;
      DiffSuperPoly value;
    };
    std::vector<Unknown> unknowns;
    for (uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      int rest = d;
      for (int i : mask_indices(mask)) rest -= shift[static_cast<size_t>(i - 1)];
      if (rest < 0) continue;
      const DiffSuperPoly w = wedge_of(df, mask, n);
      if (w.is_zero()) continue;
      for (const auto& mu : padded_partitions(rest, n))
        unknowns.push_back({mask, mu, monomial_symmetric(n, Partition(mu)) * w});
    }
    std::map<std::pair<uint32_t, std::vector<int>>, size_t> row_of;
    auto row = [&](uint32_t m, const Monomial& mono) {
      return row_of.try_emplace({m, mono.exponents()}, row_of.size()).first->second;
    };
    for (const auto& u : unknowns)
      for (const auto& [m, p] : u.value.components())
        for (const auto& [mono, c] : p.terms()) row(m, mono);
    for (const auto& [m, p] : part.components())
      for (const auto& [mono, c] : p.terms()) row(m, mono);
    DenseMatrix a(row_of.size(), std::vector<Rat>(unknowns.size(), Rat(0)));
    std::vector<Rat> b(row_of.size(), Rat(0));
    for (size_t col = 0; col < unknowns.size(); ++col)
      for (const auto& [m, p] : unknowns[col].value.components())
        for (const auto& [mono, c] : p.terms()) a[row(m, mono)][col] = c;
    for (const auto& [m, p] : part.components())
      for (const auto& [mono, c] : p.terms()) b[row(m, mono)] = c;
    const auto x = solve(a, b);
    if (!x) return std::nullopt;
    for (size_t col = 0; col < unknowns.size(); ++col) {
      if (exnil::is_zero((*x)[col])) continue;
      coords.try_emplace(unknowns[col].mask, Poly(n)).first->second +=
          (*x)[col] * monomial_symmetric(n, Partition(unknowns[col].mu));
    }
  }
  for (auto it = coords.begin(); it != coords.end();) it = it->second.is_zero() ? coords.erase(it) : std::next(it);
  return coords;
}

bool solomon_membership(const DiffSuperPoly& v) { return solomon_coordinates(v, default_f(v.nvars())).has_value(); }

PolyMatrix poly_identity(int n) {
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i) at(m, i, i) = Poly::constant(n, 1);
  return m;
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = size_of(a);
  if (size_of(b) != n) throw StructuralError("matrix sizes differ");
  PolyMatrix out = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (at(a, i, k).is_zero()) continue;
      for (int j = 1; j <= n; ++j) at(out, i, j) += at(a, i, k) * at(b, k, j);
    }
  return out;
}

PolyMatrix poly_inverse_upper(const PolyMatrix& m) {
  const int n = size_of(m);
  std::vector<Rat> inv_diag;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j)
      if (!at(m, i, j).is_zero()) throw PreconditionError("matrix is not upper triangular");
    const auto d = at(m, i, i).as_constant();
    if (!d || exnil::is_zero(*d)) throw PreconditionError("diagonal entry is not an invertible scalar");
    inv_diag.push_back(1 / *d);
  }
  PolyMatrix x = zero_matrix(n);
  for (int j = 1; j <= n; ++j) {
    at(x, j, j) = Poly::constant(n, inv_diag[static_cast<size_t>(j - 1)]);
    for (int i = j - 1; i >= 1; --i) {
      Poly acc(n);
      for (int k = i + 1; k <= j; ++k) acc += at(m, i, k) * at(x, k, j);
      at(x, i, j) = -inv_diag[static_cast<size_t>(i - 1)] * acc;
    }
  }
  return x;
}

PolyMatrix matrix_P(const std::vector<Poly>& p) {
  const int n = static_cast<int>(p.size());
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) at(m, i, j) = dd_perm(coxeter_tail(n, j), p[static_cast<size_t>(i - 1)]);
  return m;
}

PolyMatrix gamma_k(const PolyMatrix& a, int k) {
  const int n = size_of(a);
  if (k < 1 || k >= n) throw StructuralError("gamma_k index out of range");
  PolyMatrix out = zero_matrix(n);
  for (int i = 1; i <= n; ++i) at(out, i, k + 1) = at(a, i, k);
  return out;
}

std::vector<DiffSuperPoly> rho_k(const std::vector<DiffSuperPoly>& t, int k) {
  const int n = static_cast<int>(t.size());
  if (k < 1 || k >= n) throw StructuralError("rho_k index out of range");
  std::vector<DiffSuperPoly> out(t.size(), DiffSuperPoly(t.front().nvars()));
  out[static_cast<size_t>(k - 1)] = t[static_cast<size_t>(k)];
  return out;
}

bool admissible_check(const std::vector<Poly>& p) {
  if (admissibility_failure(p, false)) return false;
  const int n = static_cast<int>(p.size());
  const PolyMatrix P = matrix_P(p);
  try {
    poly_inverse_upper(P);
  } catch (const PreconditionError&) {
    return false;
  }
  for (int k = 1; k < n; ++k) {
    const PolyMatrix g = gamma_k(P, k);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (!(dd(k, at(P, i, j)) == at(g, i, j))) return false;
  }
  return true;
}

SolomonFamily parse_family(const std::string& text) {
  if (text == "h") return SolomonFamily::H;
  if (text == "e") return SolomonFamily::E;
  throw ParseError("family must be h or e, got '" + text + "'");
}

std::string to_string(SolomonFamily f) { return f == SolomonFamily::H ? "h" : "e"; }

std::vector<Poly> family_p(int n, SolomonFamily f) {
  std::vector<Poly> p;
  for (int j = 1; j <= n; ++j) {
    if (f == SolomonFamily::H) {
      Poly h = complete(n, n - j, {n, n});
      p.push_back((n - j) % 2 ? -h : h);
    } else {
      p.push_back(elementary(n, n - j, {1, n - 1}));
    }
  }
  return p;
}

PolyMatrix matrix_H(int n) {
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Poly h = complete(n, j - i, {j, n});
      at(m, i, j) = (j - i) % 2 ? -h : h;
    }
  return m;
}

PolyMatrix matrix_E(int n) {
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) at(m, i, j) = elementary_or_zero(n, j - i, {1, j - 1});
  return m;
}

PolyMatrix matrix_Q(int n) {
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) at(m, i, j) = elementary_or_zero(n, j - i, {i + 1, n});
  return m;
}

PolyMatrix matrix_Qtilde(int n) {
  PolyMatrix m = zero_matrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Poly h = complete(n, j - i, {1, i});
      at(m, i, j) = (j - i) % 2 ? -h : h;
    }
  return m;
}

bool hq_inverse_check(int n) {
  const PolyMatrix id = poly_identity(n);
  return poly_matmul(matrix_H(n), matrix_Q(n)) == id && poly_matmul(matrix_E(n), matrix_Qtilde(n)) == id;
}

std::vector<DiffSuperPoly> j_images(const std::vector<Poly>& p, const std::vector<Poly>& f) {
  const int n = static_cast<int>(p.size());
  if (!admissible_check(p)) {
    const auto why = admissibility_failure(p, false);
    throw PreconditionError("inadmissible tuple" + (why ? ": " + *why : std::string()));
  }
  if (static_cast<int>(f.size()) != n) throw StructuralError("need n generators f");
  for (const Poly& fi : f)
    if (!is_symmetric(fi)) throw PreconditionError("generators f must be symmetric");
  if (jacobian_determinant(f).is_zero()) throw PreconditionError("generators f are algebraically dependent");
  const PolyMatrix inv = poly_inverse_upper(matrix_P(p));
  std::vector<DiffSuperPoly> df;
  for (const Poly& fi : f) df.push_back(exterior_derivative(fi));
  std::vector<DiffSuperPoly> out;
  for (int i = 1; i <= n; ++i) {
    DiffSuperPoly acc(n);
    for (int j = 1; j <= n; ++j) acc += at(inv, i, j) * df[static_cast<size_t>(j - 1)];
    out.push_back(std::move(acc));
  }
  return out;
}

DiffSuperPoly j_map(const std::vector<Poly>& p, const std::vector<Poly>& f, const SuperPoly& v) {
  const int n = v.nvars();
  const std::vector<DiffSuperPoly> images = j_images(p, f);
  DiffSuperPoly out(n);
  for (const auto& [m, g] : v.components()) out += g * wedge_of(images, m, n);
  return out;
}

bool j_equivariance_check(const std::vector<Poly>& p, const std::vector<Poly>& f) {
  const int n = static_cast<int>(p.size());
  const std::vector<DiffSuperPoly> J = j_images(p, f);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      DiffSuperPoly expected = J[static_cast<size_t>(j - 1)];
      if (i == j) expected += root(n, i) * J[static_cast<size_t>(i)];
      if (!(act_index_si(i, J[static_cast<size_t>(j - 1)]) == expected)) return false;
    }
  return true;
}

bool coordinate_check(const std::vector<Poly>& p, const std::vector<Poly>& f, const SuperPoly& v) {
  const Coordinates coords = decompose(v, exterior_gen(p));
  const auto sol = solomon_coordinates(j_map(p, f, v), f);
  return sol && *sol == coords;
}

TripleResult lemma_triple_check(const PolyMatrix& P, const std::vector<DiffSuperPoly>& theta,
                                const std::vector<DiffSuperPoly>& xi) {
  const int n = size_of(P);
  if (static_cast<int>(theta.size()) != n || static_cast<int>(xi.size()) != n) {
    throw StructuralError("Theta and Xi must have n components");
  }
  for (int i = 1; i <= n; ++i) {
    DiffSuperPoly acc(n);
    for (int j = 1; j <= n; ++j) acc += at(P, i, j) * theta[static_cast<size_t>(j - 1)];
    if (!(acc == xi[static_cast<size_t>(i - 1)])) throw PreconditionError("Xi is not P Theta");
  }
  if (wedge_of(theta, (1U << n) - 1U, n).is_zero()) throw PreconditionError("components of Theta are dependent");
  TripleResult r;
  for (int k = 1; k < n; ++k) {
    const Poly a_k = root(n, k);
    bool a = true;
    const PolyMatrix g = gamma_k(P, k);
    for (int i = 1; i <= n && a; ++i)
      for (int j = 1; j <= n && a; ++j)
        a = at(P, i, j) - swap_adjacent(k, at(P, i, j)) == a_k * at(g, i, j);
    bool b = true;
    for (const DiffSuperPoly& x : xi) b = b && act_index_si(k, x) == x;
    bool c = true;
    const std::vector<DiffSuperPoly> rho = rho_k(theta, k);
    for (int i = 1; i <= n && c; ++i) {
      const DiffSuperPoly& t = theta[static_cast<size_t>(i - 1)];
      c = t - act_index_si(k, t) == -(a_k * rho[static_cast<size_t>(i - 1)]);
    }
    r.a.push_back(a);
    r.b.push_back(b);
    r.c.push_back(c);
    const int count = int(a) + int(b) + int(c);
    r.implications_hold = r.implications_hold && count != 2;
  }
  return r;
}

bool df_stability_check(const std::vector<Poly>& f) {
  for (const Poly& fi : f) {
    const DiffSuperPoly d = exterior_derivative(fi);
    if (!solomon_invariant_check(d)) return false;
  }
  return true;
}

InvariantDims invariant_dims(int n, int max_degree) {
  InvariantDims r;
  r.n = n;
  r.max_degree = max_degree;
  const auto table = [&] {
    return std::vector<std::vector<long>>(static_cast<size_t>(max_degree + 1), std::vector<long>(static_cast<size_t>(n + 1), 0));
  };
  r.omega = table();
  r.dx = table();
  r.expected = table();
  for (int d = 0; d <= max_degree; ++d) {
    for (int k = 0; k <= n; ++k) {
      std::vector<SuperPoly> wbasis;
      std::vector<DiffSuperPoly> xbasis;
      long expected = 0;
      for (uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        int shift = 0;
        for (int i : mask_indices(mask)) shift += n - i;
        if (d - shift >= 0) {
          for (const Monomial& m : monomials_of_degree(n, d - shift)) wbasis.push_back(SuperPoly::wedge(mask, Poly::term(m, 1)));
          expected += static_cast<long>(padded_partitions(d - shift, n).size());
        }
        for (const Monomial& m : monomials_of_degree(n, d)) xbasis.push_back(DiffSuperPoly::wedge(mask, Poly::term(m, 1)));
      }
      r.omega[static_cast<size_t>(d)][static_cast<size_t>(k)] =
          fixed_dim(n, wbasis, [](int i, const SuperPoly& v) { return act_si(i, v); });
      r.dx[static_cast<size_t>(d)][static_cast<size_t>(k)] =
          fixed_dim(n, xbasis, [](int i, const DiffSuperPoly& v) { return act_index_si(i, v); });
      r.expected[static_cast<size_t>(d)][static_cast<size_t>(k)] = expected;
    }
  }
  r.matches = r.omega == r.expected && r.dx == r.expected;
  return r;
}

bool SolomonReport::ok() const {
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return true;
}

SolomonReport solomon_report(int n, SolomonFamily family, FDegreeConvention conv) {
  SolomonReport r;
  r.n = n;
  r.family = family;
  const std::vector<Poly> p = family_p(n, family);
  const std::vector<Poly> f = default_f(n, conv);
  const bool is_h = family == SolomonFamily::H;
  r.checks.emplace_back("admissible", admissible_check(p));
  const PolyMatrix P = matrix_P(p);
  r.checks.emplace_back(is_h ? "P equals H" : "P equals E", P == (is_h ? matrix_H(n) : matrix_E(n)));
  r.checks.emplace_back(is_h ? "H Q = Id" : "E Qtilde = Id",
                        poly_matmul(P, is_h ? matrix_Q(n) : matrix_Qtilde(n)) == poly_identity(n));
  const std::vector<DiffSuperPoly> J = j_images(p, f);
  const PolyMatrix closed = is_h ? matrix_Q(n) : matrix_Qtilde(n);
  bool closed_ok = true;
  std::vector<DiffSuperPoly> df;
  for (const Poly& fi : f) df.push_back(exterior_derivative(fi));
  for (int i = 1; i <= n; ++i) {
    DiffSuperPoly acc(n);
    for (int j = 1; j <= n; ++j) acc += at(closed, i, j) * df[static_cast<size_t>(j - 1)];
    closed_ok = closed_ok && acc == J[static_cast<size_t>(i - 1)];
  }
  r.checks.emplace_back(is_h ? "J(w) = Q df" : "J(w) = Qtilde de", closed_ok);
  r.checks.emplace_back("J equivariant", j_equivariance_check(p, f));
  const TripleResult t = lemma_triple_check(P, J, df);
  bool all = true;
  for (int k = 0; k + 1 < n; ++k) all = all && t.a[static_cast<size_t>(k)] && t.b[static_cast<size_t>(k)] && t.c[static_cast<size_t>(k)];
  r.checks.emplace_back("triple (a) (b) (c) hold", all);
  r.checks.emplace_back("triple implications", t.implications_hold);
  const std::vector<SuperPoly> gens = exterior_gen(p);
  SuperPoly v(n);
  for (uint32_t mask = 0; mask < (1U << n); ++mask)
    v += elementary(n, 1, {1, n}).pow(std::popcount(mask)) * wedge(gens, mask);
  r.checks.emplace_back("coordinates preserved", coordinate_check(p, f, v));
  r.checks.emplace_back("df stable", df_stability_check(f));
  r.checks.emplace_back("invariant dimensions agree", invariant_dims(n, n * (n - 1) / 2 + 1).matches);
  return r;
}

nlohmann::json to_json(const SolomonReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, pass] : r.checks) checks.push_back({{"name", name}, {"pass", pass}});
  return {{"n", r.n}, {"family", to_string(r.family)}, {"checks", checks}, {"ok", r.ok()}};
}

}  // namespace exnil
