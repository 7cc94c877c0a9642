// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "differential.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "divdiff.hpp"
#include "errors.hpp"
#include "extsym.hpp"
#include "linalg.hpp"

namespace exnil {

namespace {

Rat parse_rat(const std::string& text) {
  static const std::regex kRat(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kRat)) throw ParseError("expected a rational number, got '" + text + "'");
  const mpz_class num(m[1].str());
  const mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

bool weakly_decreasing(const std::vector<int>& e) {
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

/// Coordinates of symmetric polynomials in the monomial symmetric basis.
class SymIndex {
 public:
  explicit SymIndex(int n) : n_(n) {}

  /// Registers partitions of degree top down to 0 so that higher degrees get smaller indices.
  void register_window(int top) {
    for (int d = top; d >= 0; --d)
      for (const auto& p : padded_partitions(d, n_)) index_of(p);
  }

  int index_of(const std::vector<int>& mu) {
    auto [it, inserted] = idx_.try_emplace(mu, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(mu);
    return it->second;
  }

  const std::vector<int>& label(int index) const { return labels_[static_cast<size_t>(index)]; }

  SparseVec coords(const Poly& f) {
    SparseVec v;
    for (const auto& [m, c] : f.terms()) {
      const std::vector<int> e = m.exponents();
      if (weakly_decreasing(e)) v[index_of(e)] = c;
    }
    return v;
  }

  const Poly& m_poly(const std::vector<int>& mu) {
    auto it = mpoly_.find(mu);
    if (it == mpoly_.end()) it = mpoly_.emplace(mu, monomial_symmetric(n_, Partition(mu))).first;
    return it->second;
  }

 private:
  int n_;
  std::map<std::vector<int>, int> idx_;
  std::vector<std::vector<int>> labels_;
  std::map<std::vector<int>, Poly> mpoly_;
};

struct ChainElem {
  std::vector<int> mu;
  uint32_t mask;
};

/// Rank of d restricted to the given chain basis of one exterior degree.
long koszul_rank(const std::vector<ChainElem>& basis, const std::vector<Poly>& a, SymIndex& sym) {
  std::map<std::pair<int, uint32_t>, int> target;
  EchelonBasis echelon;
  for (const ChainElem& c : basis) {
    SparseVec col;
    int p = 0;
    for (int s : mask_indices(c.mask)) {
      const Rat sign = (p % 2) ? -1 : 1;
      ++p;
      const uint32_t rest = c.mask & ~(1U << (s - 1));
      const Poly prod = sym.m_poly(c.mu) * a[static_cast<size_t>(s - 1)];
      for (const auto& [idx, v] : sym.coords(prod)) {
        auto [it, inserted] = target.try_emplace({idx, rest}, static_cast<int>(target.size()));
        col[it->second] += sign * v;
      }
    }
    for (auto it = col.begin(); it != col.end();) it = exnil::is_zero(it->second) ? col.erase(it) : std::next(it);
    echelon.insert(std::move(col));
  }
  return static_cast<long>(echelon.rank());
}

std::vector<int> weights(int n, int N) {
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) w.push_back(N - i + 1);
  return w;
}

int mask_weight(uint32_t mask, const std::vector<int>& wt) {
  int s = 0;
  for (int i : mask_indices(mask)) s += wt[static_cast<size_t>(i - 1)];
  return s;
}

ComplexSlice make_slice(int n, int degree, const std::vector<std::vector<ChainElem>>& basis, const std::vector<Poly>& a,
                        SymIndex& sym) {
  ComplexSlice s;
  s.degree = degree;
  s.chain_dims.assign(static_cast<size_t>(n + 1), 0);
  s.ranks.assign(static_cast<size_t>(n + 2), 0);
  s.cohomology.assign(static_cast<size_t>(n + 1), 0);
  for (int k = 0; k <= n; ++k) s.chain_dims[static_cast<size_t>(k)] = static_cast<long>(basis[static_cast<size_t>(k)].size());
  for (int k = 1; k <= n; ++k) s.ranks[static_cast<size_t>(k)] = koszul_rank(basis[static_cast<size_t>(k)], a, sym);
  for (int k = 0; k <= n; ++k) {
    s.cohomology[static_cast<size_t>(k)] =
        s.chain_dims[static_cast<size_t>(k)] - s.ranks[static_cast<size_t>(k)] - s.ranks[static_cast<size_t>(k + 1)];
  }
  s.ranks.pop_back();
  return s;
}

bool euler_consistent(const ComplexSlice& s) {
  long chain = 0;
  long hom = 0;
  for (size_t k = 0; k < s.chain_dims.size(); ++k) {
    const long sign = (k % 2) ? -1 : 1;
    chain += sign * s.chain_dims[k];
    hom += sign * s.cohomology[k];
  }
  return chain == hom;
}

NHElem poly_elem(const Poly& f) { return NHElem::from_poly(f); }

}  // namespace

RootMultiset::RootMultiset(std::vector<Rat> kappas) : kappas_(std::move(kappas)) {
  if (kappas_.empty()) throw PreconditionError("root multiset needs N >= 1");
}

RootMultiset RootMultiset::from_roots(const std::vector<std::pair<Rat, int>>& roots) {
  if (roots.empty()) throw PreconditionError("root multiset needs at least one root");
  std::set<Rat> seen;
  for (const auto& [r, m] : roots) {
    if (m < 1) throw PreconditionError("root multiplicities must be positive");
    if (!seen.insert(r).second) throw PreconditionError("roots must be pairwise distinct; got " + r.get_str() + " twice");
  }
  // coeffs[k] = coefficient of x^k of the product so far.
  std::vector<Rat> coeffs{1};
  for (const auto& [r, m] : roots) {
    for (int t = 0; t < m; ++t) {
      std::vector<Rat> next(coeffs.size() + 1, Rat(0));
      for (size_t k = 0; k < coeffs.size(); ++k) {
        next[k + 1] += coeffs[k];
        next[k] -= r * coeffs[k];
      }
      coeffs = std::move(next);
    }
  }
  const int N = static_cast<int>(coeffs.size()) - 1;
  std::vector<Rat> kappas;
  for (int j = 1; j <= N; ++j) kappas.push_back(coeffs[static_cast<size_t>(N - j)]);
  RootMultiset out(std::move(kappas));
  out.roots_ = roots;
  return out;
}

Rat RootMultiset::kappa(int j) const {
  if (j == 0) return 1;
  if (j < 0 || j > N()) throw StructuralError("kappa index out of range");
  return kappas_[static_cast<size_t>(j - 1)];
}

bool RootMultiset::is_undeformed() const {
  return std::all_of(kappas_.begin(), kappas_.end(), [](const Rat& k) { return exnil::is_zero(k); });
}

Poly RootMultiset::P(int nvars, int var) const {
  Poly out(nvars);
  for (int j = 0; j <= N(); ++j) {
    Monomial m(nvars);
    m.set(var, N() - j);
    out.add_term(m, kappa(j));
  }
  return out;
}

RootMultiset parse_kappas(const std::string& text) {
  std::vector<Rat> k;
  for (const std::string& item : split(text, ',')) k.push_back(parse_rat(item));
  if (k.empty()) throw ParseError("kappa list is empty");
  return RootMultiset(std::move(k));
}

RootMultiset parse_roots(const std::string& text) {
  std::vector<std::pair<Rat, int>> roots;
  for (const std::string& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("root entries look like value:multiplicity");
    const std::string mult = item.substr(colon + 1);
    if (mult.empty() || mult.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("multiplicity must be a positive integer in '" + item + "'");
    }
    roots.emplace_back(parse_rat(item.substr(0, colon)), std::stoi(mult));
  }
  return RootMultiset::from_roots(roots);
}

DifferentialSpec DifferentialSpec::undeformed(int N) {
  if (N < 1) throw PreconditionError("d_N needs N >= 1");
  return DifferentialSpec{N, std::nullopt, SigmaSign::AsPrinted};
}

DifferentialSpec DifferentialSpec::deformed(const RootMultiset& s, SigmaSign sign) {
  return DifferentialSpec{s.N(), s, sign};
}

Poly d_omega(const DifferentialSpec& d, int n, int i) {
  if (i < 1 || i > n) throw StructuralError("odd generator index out of range");
  const int top = d.N - i + 1;
  if (!d.sigma) {
    Poly h = complete_or_zero(n, top, {1, i});
    return i % 2 ? -h : h;
  }
  Poly out(n);
  for (int j = 0; j <= top && j <= d.N; ++j) out += d.sigma->kappa(j) * complete_or_zero(n, top - j, {1, i});
  const bool negate = (i % 2 == 0) != (d.sign == SigmaSign::MatchUndeformed);
  return negate ? -out : out;
}

SuperPoly apply_d(const DifferentialSpec& d, const SuperPoly& v) {
  const int n = v.nvars();
  std::vector<Poly> images;
  for (int i = 1; i <= n; ++i) images.push_back(d_omega(d, n, i));
  SuperPoly out(n);
  for (const auto& [m, f] : v.components()) {
    int p = 0;
    for (int s : mask_indices(m)) {
      Poly t = f * images[static_cast<size_t>(s - 1)];
      if (p % 2) t = -t;
      ++p;
      out.add(m & ~(1U << (s - 1)), t);
    }
  }
  return out;
}

NHElem apply_d(const DifferentialSpec& d, const NHElem& e) {
  const int n = e.nvars();
  std::map<Perm, SuperPoly> parts;
  for (const auto& [w, f] : e.by_perm()) {
    const SuperPoly image = apply_d(d, f);
    if (!image.is_zero()) parts.emplace(w, image);
  }
  return NHElem::from_perm_map(n, parts);
}

bool relations_killed_check(const DifferentialSpec& d, int n) {
  std::vector<NHElem> D;
  for (int j = 1; j <= n; ++j) D.push_back(poly_elem(d_omega(d, n, j)));
  for (int i = 1; i < n; ++i) {
    const NHElem di = NHElem::dd(n, i);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const NHElem& Dj = D[static_cast<size_t>(j - 1)];
      if (!(di * Dj == Dj * di)) return false;
    }
    const NHElem& Di = D[static_cast<size_t>(i - 1)];
    const NHElem& Dn = D[static_cast<size_t>(i)];
    const NHElem x = NHElem::x(n, i + 1);
    if (!(di * Di + Dn * x * di == Di * di + di * x * Dn)) return false;
  }
  return true;
}

bool restrict_check(int n, int N) {
  if (N < n - 1) throw PreconditionError("restrict_check needs N >= n - 1");
  const DifferentialSpec d = DifferentialSpec::undeformed(N);
  for (int i = 1; i <= n; ++i) {
    Poly expected = complete(n, N - i + 1, {1, n});
    if (i % 2) expected = -expected;
    if (!(apply_d(d, hw(n, n + 1 - i)) == SuperPoly::scalar(expected))) return false;
  }
  return true;
}

bool sym_ident_check(int n, int N, int i) {
  if (i < 1 || i > n) throw PreconditionError("sym_ident_check needs 1 <= i <= n");
  const Poly lhs = complete_or_zero(n, N - i + 1, {1, n});
  Poly rhs(n);
  for (int j = 0; j <= n - i; ++j)
    rhs += complete_or_zero(n, N - i - j + 1, {1, i + j}) * complete_or_zero(n, j, {i + j, n});
  return lhs == rhs;
}

std::vector<Poly> koszul_sequence(const DifferentialSpec& d, int n) {
  std::vector<Poly> a;
  for (int i = 1; i <= n; ++i) {
    const SuperPoly image = apply_d(d, hw(n, n + 1 - i));
    const Poly f = image.component(0);
    if (!(image == SuperPoly::scalar(f)) || !is_symmetric(f)) {
      throw InvariantViolation("d(w-hat_" + std::to_string(i) + ") is not a symmetric polynomial");
    }
    a.push_back(f);
  }
  return a;
}

long binomial(int N, int n) {
  if (n < 0 || N < 0 || n > N) return 0;
  long r = 1;
  for (int k = 1; k <= n; ++k) r = r * (N - n + k) / k;
  return r;
}

GradedDims gaussian_binomial_sq(int N, int n) {
  GradedDims out;
  if (n < 0 || N < 0 || n > N) return out;
  if (n == 0 || n == N) {
    out.add(0, 1);
    return out;
  }
  // [N, n] = [N-1, n-1] + q^{2n} [N-1, n]
  out = gaussian_binomial_sq(N - 1, n - 1);
  for (const auto& [d, v] : gaussian_binomial_sq(N - 1, n).entries) out.add(d + 2 * n, v);
  return out;
}

int certified_cap(int n, int N) { return N >= n ? n * (N - n) : 0; }

int default_cap(int n, int N) { return certified_cap(n, N) + N; }

CohomologyResult cohomology_dims(int n, const DifferentialSpec& d, std::optional<int> cap) {
  if (n < 1 || n > kMaxVars) throw StructuralError("n out of range");
  const int N = d.N;
  if (N < n - 1) throw PreconditionError("Koszul sequence needs N >= n - 1");
  CohomologyResult r;
  r.n = n;
  r.N = N;
  r.cap = cap.value_or(default_cap(n, N));
  r.deformed = d.sigma && !d.sigma->is_undeformed();
  if (r.cap < certified_cap(n, N)) {
    throw CapExceeded("cap " + std::to_string(r.cap) + " is below the certified bound n(N-n) = " +
                      std::to_string(certified_cap(n, N)));
  }
  const std::vector<Poly> a = koszul_sequence(d, n);
  const std::vector<int> wt = weights(n, N);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].degree() > wt[i]) throw InvariantViolation("Koszul generator exceeds its filtration weight");
  }
  SymIndex sym(n);
  r.reference = gaussian_binomial_sq(N, n);
  r.expected_total = binomial(N, n);
  r.totals.assign(static_cast<size_t>(n + 1), 0);
  r.by_ext_degree.assign(static_cast<size_t>(n + 1), GradedDims{});
  auto chains = [&](auto keep) {
    std::vector<std::vector<ChainElem>> basis(static_cast<size_t>(n + 1));
    for (uint32_t mask = 0; mask < (1U << n); ++mask) {
      const int base = mask_weight(mask, wt);
      for (int rest = 0; base + rest <= r.cap; ++rest) {
        if (!keep(base + rest)) continue;
        for (auto& mu : padded_partitions(rest, n))
          basis[static_cast<size_t>(std::popcount(mask))].push_back({std::move(mu), mask});
      }
    }
    return basis;
  };
  if (!r.deformed) {
    for (int D = 0; D <= r.cap; ++D) {
      const ComplexSlice s = make_slice(n, D, chains([&](int deg) { return deg == D; }), a, sym);
      r.euler_ok = r.euler_ok && euler_consistent(s);
      for (int k = 0; k <= n; ++k) {
        r.by_ext_degree[static_cast<size_t>(k)].add(2 * D, s.cohomology[static_cast<size_t>(k)]);
        r.totals[static_cast<size_t>(k)] += s.cohomology[static_cast<size_t>(k)];
      }
      r.slices.push_back(s);
    }
    r.matches = r.by_ext_degree[0] == r.reference;
  } else {
    const ComplexSlice s = make_slice(n, r.cap, chains([](int) { return true; }), a, sym);
    r.euler_ok = euler_consistent(s);
    r.totals = s.cohomology;
    r.slices.push_back(s);
    r.matches = r.totals[0] == r.expected_total;
  }
  for (int k = 1; k <= n; ++k) r.matches = r.matches && r.totals[static_cast<size_t>(k)] == 0;
  return r;
}

DeformedResult deformed_total_dim(int n, const RootMultiset& sigma, std::optional<int> cap) {
  if (sigma.roots().empty()) throw PreconditionError("deformed_total_dim needs roots with multiplicities");
  const int N = sigma.N();
  if (N < n) throw PreconditionError("deformed_total_dim needs N >= n");
  DeformedResult r;
  r.n = n;
  r.N = N;
  r.cap = cap.value_or(default_cap(n, N));
  if (r.cap < certified_cap(n, N) + n) {
    throw CapExceeded("cap " + std::to_string(r.cap) + " is below n(N-n) + n = " +
                      std::to_string(certified_cap(n, N) + n));
  }
  const std::vector<Poly> a = koszul_sequence(DifferentialSpec::deformed(sigma), n);
  const std::vector<int> wt = weights(n, N);
  SymIndex sym(n);
  sym.register_window(r.cap);
  EchelonBasis ideal;
  for (int i = 1; i <= n; ++i) {
    for (int d = 0; d + wt[static_cast<size_t>(i - 1)] <= r.cap; ++d)
      for (const auto& nu : padded_partitions(d, n)) ideal.insert(sym.coords(sym.m_poly(nu) * a[static_cast<size_t>(i - 1)]));
  }
  // Quotient basis: non-pivot partitions, which carry the lowest degrees.
  std::vector<int> basis;
  for (int d = 0; d <= r.cap; ++d)
    for (const auto& mu : padded_partitions(d, n)) {
      const int idx = sym.index_of(mu);
      if (!ideal.is_pivot(idx)) basis.push_back(idx);
    }
  r.total = static_cast<long>(basis.size());
  r.expected_total = binomial(N, n);

  // Per-root splittings n = sum n_j with 0 <= n_j <= N_j.
  const auto& roots = sigma.roots();
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t j, int rest) -> void {
    if (j == roots.size()) {
      if (rest == 0) comps.push_back(cur);
      return;
    }
    for (int t = 0; t <= std::min(rest, roots[j].second); ++t) {
      cur.push_back(t);
      self(self, j + 1, rest - t);
      cur.pop_back();
    }
  };
  rec(rec, 0, n);

  // f = sum_k c^{k-1} e_k takes the value sum_k c^{k-1} e_k(point) on the block of each point.
  auto value_at = [&](const std::vector<int>& comp, const Rat& c) {
    std::vector<Rat> pt;
    for (size_t j = 0; j < comp.size(); ++j)
      for (int t = 0; t < comp[j]; ++t) pt.push_back(roots[j].first);
    std::vector<Rat> e(static_cast<size_t>(n + 1), Rat(0));
    e[0] = 1;
    for (const Rat& x : pt)
      for (int k = n; k >= 1; --k) e[static_cast<size_t>(k)] += x * e[static_cast<size_t>(k - 1)];
    Rat v = 0;
    Rat cp = 1;
    for (int k = 1; k <= n; ++k) {
      v += cp * e[static_cast<size_t>(k)];
      cp *= c;
    }
    return v;
  };
  Rat c = 1;
  for (;; c += 1) {
    std::set<Rat> vals;
    for (const auto& comp : comps) vals.insert(value_at(comp, c));
    if (vals.size() == comps.size()) break;
  }
  Poly f(n);
  {
    Rat cp = 1;
    for (int k = 1; k <= n; ++k) {
      f += cp * elementary(n, k, {1, n});
      cp *= c;
    }
  }
  const size_t dim = basis.size();
  std::map<int, size_t> pos;
  for (size_t t = 0; t < dim; ++t) pos[basis[t]] = t;
  DenseMatrix M(dim, std::vector<Rat>(dim, Rat(0)));
  for (size_t col = 0; col < dim; ++col) {
    const Poly prod = f * sym.m_poly(sym.label(basis[col]));
    if (prod.degree() > r.cap) throw CapExceeded("multiplication leaves the filtration window");
    for (const auto& [idx, v] : ideal.reduce(sym.coords(prod))) {
      auto it = pos.find(idx);
      if (it == pos.end()) throw InvariantViolation("normal form left the quotient basis");
      M[it->second][col] = v;
    }
  }
  long sum = 0;
  for (const auto& comp : comps) {
    BlockDim b;
    b.parts = comp;
    b.expected = 1;
    for (size_t j = 0; j < comp.size(); ++j) b.expected *= binomial(roots[j].second, comp[j]);
    const Rat v = value_at(comp, c);
    DenseMatrix A = M;
    for (size_t t = 0; t < dim; ++t) A[t][t] -= v;
    DenseMatrix P = A;
    for (size_t t = 1; t < dim; ++t) P = matmul(P, A);
    b.dim = static_cast<long>(dim) - (dim ? rank_fraction_free(P) : 0);
    sum += b.dim;
    r.blocks.push_back(b);
  }
  r.matches = r.total == r.expected_total && sum == r.total;
  for (const auto& b : r.blocks) r.matches = r.matches && b.dim == b.expected;
  return r;
}

MembershipResult ideal_membership(const NHElem& e, const RootMultiset& sigma, std::optional<int> cap) {
  const int n = e.nvars();
  for (const auto& [k, c] : e.terms())
    if (k.mask) throw PreconditionError("the deformed cyclotomic ideal lives in the ordinary nilHecke algebra");
  MembershipResult r;
  const NHMatrix target = matrix_iso(e);
  std::vector<Poly> entries;
  int top = 0;
  for (const auto& row : target)
    for (const SuperPoly& v : row) {
      if (v.is_zero()) continue;
      entries.push_back(v.component(0));
      top = std::max(top, entries.back().degree());
    }
  r.cap = cap.value_or(top + sigma.N());
  if (entries.empty()) {
    r.status = Membership::Member;
    r.detail = "zero element";
    return r;
  }
  if (top > r.cap) {
    r.detail = "element degree " + std::to_string(top) + " exceeds the window";
    return r;
  }
  std::vector<Poly> gens;
  for (const auto& row : matrix_iso(NHElem::from_poly(sigma.P(n, 1))))
    for (const SuperPoly& v : row)
      if (!v.is_zero() && std::find(gens.begin(), gens.end(), v.component(0)) == gens.end()) gens.push_back(v.component(0));
  SymIndex sym(n);
  EchelonBasis ideal;
  for (const Poly& g : gens)
    for (int d = 0; d + g.degree() <= r.cap; ++d)
      for (const auto& nu : padded_partitions(d, n)) ideal.insert(sym.coords(sym.m_poly(nu) * g));
  for (const Poly& f : entries) {
    if (!ideal.contains(sym.coords(f))) {
      r.detail = "a matrix entry is not reached inside the window";
      return r;
    }
  }
  r.status = Membership::Member;
  r.detail = "all " + std::to_string(entries.size()) + " matrix entries lie in the window span";
  return r;
}

MembershipResult ideal_membership_spanning(const NHElem& e, const RootMultiset& sigma, int xcap) {
  const int n = e.nvars();
  MembershipResult r;
  r.cap = xcap;
  std::vector<NHElem> pbw;
  for (const Poly& m : monomials_up_to(n, xcap))
    for (const Perm& w : all_perms(n)) pbw.push_back(NHElem::from_poly(m) * NHElem::dd_perm(w));
  std::map<NHKey, int, NHKeyLess> index;
  auto vec = [&](const NHElem& x) {
    SparseVec v;
    for (const auto& [k, c] : x.terms()) v[index.try_emplace(k, static_cast<int>(index.size())).first->second] = c;
    return v;
  };
  const NHElem P = NHElem::from_poly(sigma.P(n, 1));
  EchelonBasis span;
  for (const NHElem& b2 : pbw) {
    const NHElem right = P * b2;
    for (const NHElem& b1 : pbw) span.insert(vec(b1 * right));
  }
  if (span.contains(vec(e))) {
    r.status = Membership::Member;
    r.detail = "in the span of " + std::to_string(span.rank()) + " independent products";
  } else {
    r.detail = "not in the bounded span";
  }
  return r;
}

std::vector<std::pair<std::string, NHElem>> deformed_ideal_identities(int n, const RootMultiset& sigma, int max_y) {
  const int N = sigma.N();
  std::vector<std::pair<std::string, NHElem>> out;
  for (int i = 1; i < n; ++i) {
    const NHElem di = NHElem::dd(n, i);
    for (int y = 0; y <= max_y; ++y) {
      NHElem left(n);
      NHElem right(n);
      for (int j = 0; j <= N; ++j) {
        const NHElem xp = NHElem::from_poly(sigma.kappa(j) * Poly::variable(n, i + 1).pow(y + N - j));
        left += xp * di;
        right += di * xp;
      }
      const std::string tag = " i=" + std::to_string(i) + " y=" + std::to_string(y);
      out.emplace_back("(1)" + tag, left - right);
      out.emplace_back("(2)" + tag, left);
    }
  }
  for (int i = 1; i <= n; ++i) out.emplace_back("(3) i=" + std::to_string(i), NHElem::from_poly(sigma.P(n, i)));
  for (int m = 1; m <= std::min(n, N); ++m) {
    Poly f(n);
    for (int j = 0; j <= N - m + 1; ++j) f += sigma.kappa(j) * complete(n, N - m + 1 - j, {1, m});
    out.emplace_back("(4) m=" + std::to_string(m), NHElem::from_poly(f));
  }
  return out;
}

std::string to_string(Membership m) { return m == Membership::Member ? "member" : "indeterminate"; }

nlohmann::json to_json(const CohomologyResult& r) {
  nlohmann::json slices = nlohmann::json::array();
  for (const auto& s : r.slices)
    slices.push_back({{"degree", s.degree}, {"chain_dims", s.chain_dims}, {"ranks", s.ranks}, {"cohomology", s.cohomology}});
  nlohmann::json graded = nlohmann::json::array();
  for (const auto& g : r.by_ext_degree) graded.push_back(to_json(g));
  return {{"n", r.n},
          {"N", r.N},
          {"cap", r.cap},
          {"deformed", r.deformed},
          {"slices", slices},
          {"graded", graded},
          {"totals", r.totals},
          {"reference", to_json(r.reference)},
          {"reference_text", to_string(r.reference)},
          {"expected_total", r.expected_total},
          {"euler_ok", r.euler_ok},
          {"matches", r.matches}};
}

nlohmann::json to_json(const DeformedResult& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"parts", b.parts}, {"dim", b.dim}, {"expected", b.expected}});
  return {{"n", r.n},
          {"N", r.N},
          {"cap", r.cap},
          {"total", r.total},
          {"expected_total", r.expected_total},
          {"blocks", blocks},
          {"matches", r.matches}};
}

}  // namespace exnil
