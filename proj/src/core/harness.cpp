// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "differential.hpp"
#include "divdiff.hpp"
#include "errors.hpp"
#include "extsym.hpp"
#include "nilhecke.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "sampling.hpp"
#include "solomon.hpp"
#include "superpoly.hpp"

namespace exnil {

namespace {

std::string tag(int n) { return "n=" + std::to_string(n); }
std::string tag(int n, int N) { return tag(n) + " N=" + std::to_string(N); }

Outcome verdict(bool pass, std::string detail = {}) { return {pass, std::move(detail)}; }

/// First failing label among (label, lhs, rhs) triples, as an outcome.
template <class T>
Outcome all_equal(const std::vector<std::tuple<std::string, T, T>>& cases) {
  for (const auto& [label, lhs, rhs] : cases)
    if (!(lhs == rhs)) return verdict(false, "fails at " + label);
  return verdict(true, std::to_string(cases.size()) + " cases");
}

Rng rng_for(uint64_t seed, std::initializer_list<int> salt) {
  std::seed_seq seq(salt.begin(), salt.end());
  std::vector<uint64_t> mix(1);
  seq.generate(mix.begin(), mix.end());
  return Rng(seed ^ mix[0]);
}

// ---------------------------------------------------------------- schubert-table

/// Rows w of S_3 with S_w and dual(w0 w); the last dual entry carries the sign forced by
/// the pairing with S_{w0}.
struct TableRow {
  const char* word;
  const char* schubert;
  const char* dual;
};
constexpr TableRow kTable3[] = {
    {"id", "1", "1"},
    {"s1", "x1", "-x2 - x3"},
    {"s2", "x1 + x2", "-x3"},
    {"s1 s2", "x1*x2", "x3^2"},
    {"s2 s1", "x1^2", "x2*x3"},
    {"s1 s2 s1", "x1^2*x2", "-x2*x3^2"},
};

std::vector<Check> schubert_table_checks() {
  std::vector<Check> out;
  const Perm w0 = Perm::longest(3);
  for (const TableRow& row : kTable3) {
    out.push_back({std::string("S_") + row.word, [row] {
                     const Poly got = schubert(parse_perm(3, row.word));
                     return verdict(got == parse_poly(3, row.schubert), to_string(got));
                   }});
    out.push_back({std::string("dual S_{w0 ") + row.word + "}", [row, w0] {
                     const Poly got = dual_schubert(w0 * parse_perm(3, row.word));
                     return verdict(got == parse_poly(3, row.dual), to_string(got));
                   }});
  }
  out.push_back({"sign-flipped dual S_id breaks the pairing", [] {
                   const Poly flipped = parse_poly(3, "x2*x3^2");
                   const Poly paired = dd_perm(Perm::longest(3), schubert(Perm::longest(3)) * flipped);
                   return verdict(!(paired == Poly::constant(3, 1)), "pairing = " + to_string(paired));
                 }});
  return out;
}

// ---------------------------------------------------------------- relations

using NHCases = std::vector<std::tuple<std::string, NHElem, NHElem>>;

NHElem X(int n, int i) { return NHElem::x(n, i); }
NHElem W(int n, int i) { return NHElem::omega(n, i); }
NHElem D(int n, int i) { return NHElem::dd(n, i); }

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<std::pair<std::string, std::function<NHCases(int)>>> relation_families() {
  return {
      {"x_i x_j = x_j x_i",
       [](int n) {
         NHCases c;
         for (int i = 1; i <= n; ++i)
           for (int j = 1; j <= n; ++j) c.emplace_back(idx(i, j), X(n, i) * X(n, j), X(n, j) * X(n, i));
         return c;
       }},
      {"d_i x_j = x_j d_i for |i-j| > 1",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i)
           for (int j = 1; j <= n; ++j)
             if (std::abs(i - j) > 1) c.emplace_back(idx(i, j), D(n, i) * X(n, j), X(n, j) * D(n, i));
         return c;
       }},
      {"d_i d_j = d_j d_i for |i-j| > 1",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i)
           for (int j = 1; j < n; ++j)
             if (std::abs(i - j) > 1) c.emplace_back(idx(i, j), D(n, i) * D(n, j), D(n, j) * D(n, i));
         return c;
       }},
      {"d_i^2 = 0",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i) c.emplace_back(std::to_string(i), D(n, i) * D(n, i), NHElem(n));
         return c;
       }},
      {"d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}",
       [](int n) {
         NHCases c;
         for (int i = 1; i + 1 < n; ++i)
           c.emplace_back(std::to_string(i), D(n, i) * D(n, i + 1) * D(n, i), D(n, i + 1) * D(n, i) * D(n, i + 1));
         return c;
       }},
      {"x_i d_i - d_i x_{i+1} = 1 and d_i x_i - x_{i+1} d_i = 1",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i) {
           c.emplace_back("first " + std::to_string(i), X(n, i) * D(n, i) - D(n, i) * X(n, i + 1), NHElem::one(n));
           c.emplace_back("second " + std::to_string(i), D(n, i) * X(n, i) - X(n, i + 1) * D(n, i), NHElem::one(n));
         }
         return c;
       }},
      {"x_i w_j = w_j x_i",
       [](int n) {
         NHCases c;
         for (int i = 1; i <= n; ++i)
           for (int j = 1; j <= n; ++j) c.emplace_back(idx(i, j), X(n, i) * W(n, j), W(n, j) * X(n, i));
         return c;
       }},
      {"w_i w_j = -w_j w_i",
       [](int n) {
         NHCases c;
         for (int i = 1; i <= n; ++i)
           for (int j = 1; j <= n; ++j) c.emplace_back(idx(i, j), W(n, i) * W(n, j), -(W(n, j) * W(n, i)));
         return c;
       }},
      {"d_i w_j = w_j d_i - delta_ij w_{i+1} (x_{i+1} d_i - d_i x_{i+1})",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i)
           for (int j = 1; j <= n; ++j) {
             NHElem rhs = W(n, j) * D(n, i);
             if (i == j) rhs -= W(n, i + 1) * (X(n, i + 1) * D(n, i) - D(n, i) * X(n, i + 1));
             c.emplace_back(idx(i, j), D(n, i) * W(n, j), rhs);
           }
         return c;
       }},
      {"d_i x_i^{a+1} - x_{i+1}^{a+1} d_i = h_a(x_i, x_{i+1}) = x_i^{a+1} d_i - d_i x_{i+1}^{a+1}, a <= 4",
       [](int n) {
         NHCases c;
         for (int i = 1; i < n; ++i)
           for (int a = 0; a <= 4; ++a) {
             NHElem xi = NHElem::one(n), xj = NHElem::one(n);
             for (int t = 0; t <= a; ++t) {
               xi = xi * X(n, i);
               xj = xj * X(n, i + 1);
             }
             const NHElem h = NHElem::from_poly(complete(n, a, {i, i + 1}));
             c.emplace_back("left " + idx(i, a), D(n, i) * xi - xj * D(n, i), h);
             c.emplace_back("right " + idx(i, a), xi * D(n, i) - D(n, i) * xj, h);
           }
         return c;
       }},
  };
}

std::vector<Check> relation_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    for (const auto& [name, build] : relation_families())
      out.push_back({tag(n) + " " + name, [n, build] { return all_equal(build(n)); }});
    out.push_back({tag(n) + " associativity on random triples", [n, seed = p.seed] {
                     Rng rng = rng_for(seed, {1, n});
                     for (int t = 0; t < 10; ++t) {
                       const NHElem a = random_nh(rng, n, 2, 2), b = random_nh(rng, n, 2, 2), c = random_nh(rng, n, 1, 2);
                       if (!((a * b) * c == a * (b * c))) return verdict(false, "triple " + std::to_string(t));
                     }
                     return verdict(true, "10 triples");
                   }});
    out.push_back({tag(n) + " act(ab, v) = act(a, act(b, v))", [n, seed = p.seed] {
                     Rng rng = rng_for(seed, {2, n});
                     for (int t = 0; t < 10; ++t) {
                       const NHElem a = random_nh(rng, n, 2, 2), b = random_nh(rng, n, 2, 2);
                       const SuperPoly v = random_superpoly(rng, n, 3, 3);
                       if (!(act(a * b, v) == act(a, act(b, v)))) return verdict(false, "triple " + std::to_string(t));
                     }
                     return verdict(true, "10 triples");
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- rank

int index_sum(uint32_t mask) {
  int s = 0;
  for (int i : mask_indices(mask)) s += i;
  return s;
}

/// Each wedge is extended symmetric, has coefficient 1 on its own mask and otherwise only
/// masks of the same size with strictly larger index sum: a unitriangular, hence free, family.
Outcome unitriangular(int n, const std::vector<SuperPoly>& gens) {
  for (uint32_t mask = 0; mask < (1U << n); ++mask) {
    const SuperPoly v = wedge(gens, mask);
    if (!kernel_test(v)) return verdict(false, "wedge " + wedge_string(mask, "w") + " not extended symmetric");
    if (!(v.component(mask) == Poly::constant(n, 1))) return verdict(false, "leading coefficient of " + wedge_string(mask, "w"));
    for (const auto& [m, f] : v.components())
      if (m != mask && (std::popcount(m) != std::popcount(mask) || index_sum(m) <= index_sum(mask)))
        return verdict(false, "wedge " + wedge_string(mask, "w") + " not triangular");
  }
  return verdict(true, std::to_string(1U << n) + " wedges");
}

std::vector<BasisSpec> basis_specs(int n) {
  std::vector<BasisSpec> specs{{BasisFamily::Schubert, 0}, {BasisFamily::Dual, 0}};
  for (int r = 0; r < n; ++r) specs.push_back({BasisFamily::Interp, r});
  return specs;
}

std::vector<Check> rank_checks(const SuiteParams& p, int samples) {
  std::vector<Check> out;
  for (int n = 2; n <= p.max_n; ++n) {
    for (const BasisSpec& spec : basis_specs(n)) {
      out.push_back({tag(n) + " " + to_string(spec) + " wedges independent", [n, spec] {
                       return unitriangular(n, exterior_basis(n, spec));
                     }});
    }
    for (const BasisSpec& spec : basis_specs(n)) {
      out.push_back({tag(n) + " " + to_string(spec) + " decompose(reconstruct(c)) = c", [n, spec, samples, seed = p.seed] {
                       Rng rng = rng_for(seed, {3, n, static_cast<int>(spec.family), spec.r});
                       const std::vector<SuperPoly> gens = exterior_basis(n, spec);
                       for (int t = 0; t < samples; ++t) {
                         const Coordinates c = random_coordinates(rng, n, 2);
                         if (!(decompose(reconstruct(c, gens), gens) == c)) return verdict(false, "sample " + std::to_string(t));
                       }
                       return verdict(true, std::to_string(samples) + " samples");
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- membership

std::vector<Check> membership_checks(const SuiteParams& p, int samples) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " kernel test agrees with coefficient system", [n, samples, seed = p.seed] {
                     Rng rng = rng_for(seed, {4, n});
                     const std::vector<SuperPoly> gens = dual_exterior_basis(n);
                     int rejected = 0;
                     for (int t = 0; t < samples; ++t) {
                       SuperPoly v = reconstruct(random_coordinates(rng, n, 2), gens);
                       const bool perturb = t % 2 == 1;
                       if (perturb) v += random_superpoly(rng, n, 2, 2);
                       const bool k = kernel_test(v);
                       if (k != system_test(v)) return verdict(false, "disagreement at sample " + std::to_string(t));
                       if (!perturb && !k) return verdict(false, "invariant sample " + std::to_string(t) + " rejected");
                       rejected += k ? 0 : 1;
                     }
                     return verdict(true, std::to_string(samples) + " samples, " + std::to_string(rejected) + " non-invariant");
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- restrict

std::vector<Check> restrict_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n)
    for (int N = std::max(1, n - 1); N <= p.max_N; ++N)
      out.push_back({tag(n, N) + " d_N(w-hat_i) = (-1)^i h_{N-i+1}(x_1..x_n)", [n, N] { return verdict(restrict_check(n, N)); }});
  if (p.max_n >= 3) {
    out.push_back({"n=3 worked example", [max_N = p.max_N] {
                     if (!(hw(3, 1) == parse_superpoly(3, "w3"))) return verdict(false, "hw(1)");
                     if (!(hw(3, 2) == parse_superpoly(3, "w2 - x3*w3"))) return verdict(false, "hw(2)");
                     if (!(hw(3, 3) == parse_superpoly(3, "w1 - (x2 + x3)*w2 + x3^2*w3"))) return verdict(false, "hw(3)");
                     for (int N = 2; N <= std::max(2, max_N); ++N) {
                       const DifferentialSpec d = DifferentialSpec::undeformed(N);
                       if (!(apply_d(d, hw(3, 2)) == SuperPoly::scalar(complete(3, N - 1, {1, 3}))))
                         return verdict(false, "d_N(hw(2)) at N=" + std::to_string(N));
                       if (!(apply_d(d, hw(3, 3)) == SuperPoly::scalar(-complete(3, N, {1, 3}))))
                         return verdict(false, "d_N(hw(3)) at N=" + std::to_string(N));
                     }
                     return verdict(true);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- cohomology / deformed

std::vector<Check> cohomology_checks(const SuiteParams& p) {
  std::vector<Check> out;
  const std::pair<int, int> cases[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}};
  for (const auto& [n, N] : cases) {
    if (n > p.max_n || N > p.max_N) continue;
    out.push_back({tag(n, N) + " matches [N choose n]_{q^2}", [n, N] {
                     const CohomologyResult r = cohomology_dims(n, DifferentialSpec::undeformed(N));
                     bool vanish = true;
                     for (size_t k = 1; k < r.totals.size(); ++k) vanish = vanish && r.totals[k] == 0;
                     return verdict(r.matches && vanish && r.euler_ok, "H^0 = " + to_string(r.by_ext_degree.front()));
                   }});
  }
  return out;
}

std::vector<Check> deformed_checks() {
  std::vector<Check> out;
  const auto block_text = [](const DeformedResult& r) {
    std::ostringstream os;
    os << "total " << r.total << ", blocks";
    for (const BlockDim& b : r.blocks) os << ' ' << b.dim;
    return os.str();
  };
  out.push_back({"n=2 N=4 roots {0,1} multiplicities {2,2}", [block_text] {
                   const DeformedResult r = deformed_total_dim(2, parse_roots("0:2,1:2"));
                   std::vector<long> dims;
                   for (const BlockDim& b : r.blocks) dims.push_back(b.dim);
                   return verdict(r.total == 6 && dims == std::vector<long>{1, 4, 1} && r.matches, block_text(r));
                 }});
  out.push_back({"n=1 N=4 roots {0,2} multiplicities {1,3}", [block_text] {
                   const DeformedResult r = deformed_total_dim(1, parse_roots("0:1,2:3"));
                   return verdict(r.total == 4 && r.matches, block_text(r));
                 }});
  out.push_back({"n=2 N=4 single root 3 of multiplicity 4", [block_text] {
                   const DeformedResult r = deformed_total_dim(2, parse_roots("3:4"));
                   return verdict(r.total == 6 && r.matches, block_text(r));
                 }});
  out.push_back({"n=2 N=3 roots {-1,0,1}", [block_text] {
                   const DeformedResult r = deformed_total_dim(2, parse_roots("-1:1,0:1,1:1"));
                   return verdict(r.total == 3 && r.matches, block_text(r));
                 }});
  return out;
}

// ---------------------------------------------------------------- idempotents

std::vector<Check> idempotent_checks(const SuiteParams& p, int pairs) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " n! orthogonal idempotents summing to 1", [n] {
                     const std::vector<NHElem> e = idempotents(n);
                     long fact = 1;
                     for (int k = 2; k <= n; ++k) fact *= k;
                     if (static_cast<long>(e.size()) != fact) return verdict(false, "count " + std::to_string(e.size()));
                     NHElem sum(n);
                     for (size_t a = 0; a < e.size(); ++a) {
                       sum += e[a];
                       for (size_t b = 0; b < e.size(); ++b) {
                         const NHElem prod = e[a] * e[b];
                         if (!(a == b ? prod == e[a] : prod.is_zero())) return verdict(false, "product " + idx(int(a), int(b)));
                       }
                     }
                     return verdict(sum == NHElem::one(n), std::to_string(e.size()) + " idempotents");
                   }});
    out.push_back({tag(n) + " lambda_l' sigma_l = delta x^delta d_{w0}", [n] {
                     const auto sq = sq_index_set(n);
                     const NHElem top = NHElem::from_poly(x_delta(n)) * NHElem::dd_perm(Perm::longest(n));
                     for (const auto& l : sq)
                       for (const auto& l2 : sq) {
                         const NHElem prod = lambda_elem(n, l2) * sigma_elem(n, l);
                         if (!(l == l2 ? prod == top : prod.is_zero())) return verdict(false, "pair failed");
                       }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " matrix_iso multiplicative on random pairs", [n, pairs, seed = p.seed] {
                     Rng rng = rng_for(seed, {5, n});
                     if (!(matrix_iso(NHElem::one(n)) == identity_matrix(n))) return verdict(false, "gamma(1) != I");
                     for (int t = 0; t < pairs; ++t) {
                       const NHElem a = random_nh(rng, n, 2, 2), b = random_nh(rng, n, 2, 2);
                       const NHMatrix ga = matrix_iso(a);
                       if (!(matrix_iso(a * b) == matrix_product(ga, matrix_iso(b)))) return verdict(false, "pair " + std::to_string(t));
                       if (t < 5 && !(matrix_iso_inv(ga, n) == a)) return verdict(false, "inverse at pair " + std::to_string(t));
                     }
                     return verdict(true, std::to_string(pairs) + " pairs");
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- identities

std::vector<Check> identity_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " e^w_j = sum_k e_k h^w_{j-k}", [n] { return verdict(e_and_h_check(n)); }});
    out.push_back({tag(n) + " e_k(x_1..x_{n-j+k}) in h and e, all j, k", [n] {
                     for (int j = 1; j <= n; ++j)
                       for (int k = 0; k <= j; ++k)
                         if (!eh_lemma_check(n, j, k)) return verdict(false, "fails at " + idx(j, k));
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " h_{N-i+1} splitting, all N <= " + std::to_string(p.max_N) + ", all i", [n, max_N = p.max_N] {
                     for (int N = 1; N <= max_N; ++N)
                       for (int i = 1; i <= n; ++i)
                         if (!sym_ident_check(n, N, i)) return verdict(false, "fails at N=" + std::to_string(N) + " i=" + std::to_string(i));
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " mixed determinant = Schur, all alpha", [n] {
                     int count = 0;
                     for (int k = 0; k <= n; ++k)
                       for (const BinSeq& a : binseqs_of_weight(n, k)) {
                         ++count;
                         if (!(schur_det_mixed(a) == schur(n, lambda_of(a), {1, n - k})))
                           return verdict(false, "fails at " + to_string(a));
                       }
                     return verdict(true, std::to_string(count) + " sequences");
                   }});
    out.push_back({tag(n) + " e_m recursion", [n] {
                     for (int m = 0; m <= n + 1; ++m)
                       if (!recursion_check_e(m, n)) return verdict(false, "m=" + std::to_string(m));
                     return verdict(true);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- solomon

std::vector<Check> solomon_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " H Q = Id and E Qtilde = Id", [n] { return verdict(hq_inverse_check(n)); }});
    for (SolomonFamily f : {SolomonFamily::H, SolomonFamily::E}) {
      out.push_back({tag(n) + " family " + to_string(f), [n, f] {
                       const SolomonReport r = solomon_report(n, f);
                       std::string failed;
                       for (const auto& [name, pass] : r.checks)
                         if (!pass) failed += (failed.empty() ? "" : ", ") + name;
                       return verdict(r.ok(), failed.empty() ? std::to_string(r.checks.size()) + " checks" : "failed: " + failed);
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- ideal

std::vector<Rat> kappa_choice(int kind, int N, Rng& rng) {
  std::vector<Rat> k(static_cast<size_t>(N), Rat(0));
  if (kind == 1) {
    const Rat fixed[] = {Rat(1), Rat(-1, 2), Rat(2), Rat(-3)};
    for (int j = 0; j < N; ++j) k[static_cast<size_t>(j)] = fixed[j % 4];
  } else if (kind == 2) {
    for (auto& c : k) c = random_rat(rng);
  }
  return k;
}

std::vector<Check> ideal_checks(const SuiteParams& p, int max_y) {
  std::vector<Check> out;
  const char* kinds[] = {"kappa = 0", "fixed kappa", "random rational kappa"};
  for (int n = 1; n <= p.max_n; ++n)
    for (int N = 1; N <= p.max_N; ++N)
      for (int kind = 0; kind < 3; ++kind) {
        out.push_back({tag(n, N) + " " + kinds[kind], [n, N, kind, max_y, seed = p.seed] {
                         Rng rng = rng_for(seed, {6, n, N});
                         const RootMultiset sigma(kappa_choice(kind, N, rng));
                         const auto ids = deformed_ideal_identities(n, sigma, max_y);
                         for (const auto& [label, e] : ids) {
                           const MembershipResult m = ideal_membership(e, sigma);
                           if (m.status != Membership::Member) return verdict(false, label + ": " + m.detail);
                         }
                         return verdict(true, std::to_string(ids.size()) + " identities");
                       }});
      }
  return out;
}

// ---------------------------------------------------------------- center

std::vector<Check> center_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " extended symmetric elements are central", [n] {
                     const std::vector<SuperPoly> gens = dual_exterior_basis(n);
                     int count = 0;
                     for (uint32_t mask = 0; mask < (1U << n); ++mask)
                       for (int k = 0; k <= std::min(n, 2); ++k) {
                         const SuperPoly z = elementary(n, k, {1, n}) * wedge(gens, mask);
                         ++count;
                         if (!center_check(NHElem::from_superpoly(z))) return verdict(false, "e_" + std::to_string(k) + " * " + to_string(z));
                       }
                     return verdict(true, std::to_string(count) + " elements");
                   }});
    if (n >= 2) {
      out.push_back({tag(n) + " x_1 and w_1 are not central", [n] {
                       return verdict(!center_check(NHElem::x(n, 1)) && !center_check(NHElem::omega(n, 1)));
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- permcomb

std::vector<Check> permcomb_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= std::max(p.max_n, 5); ++n) {
    out.push_back({tag(n) + " sigma_alpha length, descent, conjugate", [n] {
                     for (int k = 0; k <= n; ++k)
                       for (const BinSeq& a : binseqs_of_weight(n, k)) {
                         const Perm s = sigma_of(a);
                         const Partition lam = lambda_of(a);
                         if (s.length() != lam.size()) return verdict(false, "length at " + to_string(a));
                         if (a != BinSeq::tau(n, k) && s.descents() != std::vector<int>{n - k})
                           return verdict(false, "descent at " + to_string(a));
                         const Partition conj = lam.conjugate();
                         const std::vector<int> u = a.ones();
                         for (int j = 1; j <= k; ++j)
                           if (conj.part(j) != n - k - u[static_cast<size_t>(j - 1)] + j) return verdict(false, "conjugate at " + to_string(a));
                       }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " prec is a strict partial order", [n] {
                     for (int k = 0; k <= n; ++k) {
                       const auto seqs = binseqs_of_weight(n, k);
                       for (const auto& a : seqs) {
                         if (prec(a, a)) return verdict(false, "reflexive at " + to_string(a));
                         if (a != BinSeq::tau(n, k) && !prec(a, BinSeq::tau(n, k))) return verdict(false, "tau not maximal");
                         for (const auto& b : seqs)
                           for (const auto& c : seqs)
                             if (prec(a, b) && prec(b, c) && !prec(a, c)) return verdict(false, "not transitive");
                       }
                     }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " sigma_alpha is a subword of c^(k)", [n] {
                     for (int k = 0; k <= n; ++k) {
                       const std::vector<int> word = coxeter_k_word(n, k);
                       const size_t len = word.size();
                       for (const BinSeq& a : binseqs_of_weight(n, k)) {
                         const Perm s = sigma_of(a);
                         bool found = false;
                         for (uint32_t sub = 0; sub < (1U << len) && !found; ++sub) {
                           if (std::popcount(sub) != s.length()) continue;
                           std::vector<int> w;
                           for (size_t t = 0; t < len; ++t)
                             if (sub >> t & 1U) w.push_back(word[t]);
                           found = Perm::from_word(n, w) == s;
                         }
                         if (!found) return verdict(false, "at " + to_string(a));
                       }
                     }
                     return verdict(true);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- divdiff

/// Reduced word built by peeling the largest right descent; differs from reduced_word in general.
std::vector<int> right_descent_word(Perm w) {
  std::vector<int> word;
  while (!w.is_identity()) {
    const std::vector<int> d = w.descents();
    const int i = d.back();
    word.insert(word.begin(), i);
    w = w * Perm::simple(w.size(), i);
  }
  return word;
}

std::vector<Check> divdiff_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " d_i^2 = 0 and braid on random polynomials", [n, seed = p.seed] {
                     Rng rng = rng_for(seed, {7, n});
                     for (int t = 0; t < 10; ++t) {
                       const Poly f = random_poly(rng, n, 5, 4);
                       for (int i = 1; i < n; ++i) {
                         if (!dd(i, dd(i, f)).is_zero()) return verdict(false, "square");
                         if (i + 1 < n && !(dd(i, dd(i + 1, dd(i, f))) == dd(i + 1, dd(i, dd(i + 1, f)))))
                           return verdict(false, "braid");
                       }
                     }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " d_w independent of reduced word through degree 6", [n] {
                     const std::vector<Poly> basis = monomials_up_to(n, 6);
                     for (const Perm& w : all_perms(n)) {
                       const std::vector<int> a = w.reduced_word(), b = right_descent_word(w);
                       if (Perm::from_word(n, b) != w || static_cast<int>(b.size()) != w.length()) return verdict(false, "bad word");
                       for (const Poly& m : basis)
                         if (!(dd_word(a, m) == dd_word(b, m))) return verdict(false, "at " + to_string(w));
                     }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " d_u S_w characterization", [n] {
                     const auto perms = all_perms(n);
                     for (const Perm& w : perms)
                       for (const Perm& u : perms) {
                         const Perm wu = w * u.inverse();
                         const Poly expected = wu.length() == w.length() - u.length() ? schubert(wu) : Poly(n);
                         if (!(dd_perm(u, schubert(w)) == expected)) return verdict(false, "at " + to_string(w) + ", " + to_string(u));
                       }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " Grassmannian Schubert = Schur", [n] {
                     for (int k = 0; k <= n; ++k)
                       for (const BinSeq& a : binseqs_of_weight(n, k))
                         if (!(schubert(sigma_of(a)) == schur(n, lambda_of(a), {1, n - k}))) return verdict(false, "at " + to_string(a));
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " d_{w0}(S_u dual_v) = delta", [n] {
                     const auto perms = all_perms(n);
                     const Perm w0 = Perm::longest(n);
                     for (const Perm& u : perms)
                       for (const Perm& v : perms) {
                         const Poly pr = dd_perm(w0, schubert(u) * dual_schubert(v));
                         if (!(pr == Poly::constant(n, u == v ? 1 : 0))) return verdict(false, "at " + to_string(u) + ", " + to_string(v));
                       }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " d_{w0}(f x^delta) is symmetric", [n, seed = p.seed] {
                     Rng rng = rng_for(seed, {8, n});
                     for (int t = 0; t < 5; ++t)
                       if (!is_symmetric(dd_perm(Perm::longest(n), random_poly(rng, n, 3, 3) * x_delta(n)))) return verdict(false);
                     return verdict(true);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- superpoly

std::vector<Check> superpoly_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n) {
    out.push_back({tag(n) + " ext_dd square, braid, involution, morphism, Leibniz", [n, seed = p.seed] {
                     Rng rng = rng_for(seed, {9, n});
                     for (int t = 0; t < 10; ++t) {
                       const SuperPoly f = random_superpoly(rng, n, 3, 3), g = random_superpoly(rng, n, 3, 3);
                       for (int i = 1; i < n; ++i) {
                         if (!ext_dd(i, ext_dd(i, f)).is_zero()) return verdict(false, "square");
                         if (i + 1 < n && !(ext_dd(i, ext_dd(i + 1, ext_dd(i, f))) == ext_dd(i + 1, ext_dd(i, ext_dd(i + 1, f)))))
                           return verdict(false, "braid");
                         if (!(act_si(i, act_si(i, f)) == f)) return verdict(false, "involution");
                         if (!(act_si(i, f * g) == act_si(i, f) * act_si(i, g))) return verdict(false, "morphism");
                         if (!leibniz_check(i, f, g)) return verdict(false, "Leibniz");
                       }
                     }
                     return verdict(true);
                   }});
    out.push_back({tag(n) + " ext_dd on generators", [n] {
                     for (int i = 1; i < n; ++i)
                       for (int j = 1; j <= n; ++j) {
                         SuperPoly wexp(n);
                         if (i == j) wexp = -SuperPoly::generator(n, i + 1);
                         if (!(ext_dd(i, SuperPoly::generator(n, j)) == wexp)) return verdict(false, "w at " + idx(i, j));
                         Poly xexp(n);
                         if (j == i) xexp = Poly::constant(n, 1);
                         if (j == i + 1) xexp = Poly::constant(n, -1);
                         if (!(ext_dd(i, SuperPoly::scalar(Poly::variable(n, j))) == SuperPoly::scalar(xexp)))
                           return verdict(false, "x at " + idx(i, j));
                       }
                     return verdict(true);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- differential

std::vector<Check> differential_checks(const SuiteParams& p) {
  std::vector<Check> out;
  for (int n = 1; n <= p.max_n; ++n)
    for (int N = std::max(1, n - 1); N <= p.max_N; ++N) {
      out.push_back({tag(n, N) + " d^2 = 0, NH in kernel, invariants preserved, relations killed", [n, N, seed = p.seed] {
                       Rng rng = rng_for(seed, {10, n, N});
                       const DifferentialSpec specs[] = {DifferentialSpec::undeformed(N),
                                                         DifferentialSpec::deformed(RootMultiset(kappa_choice(2, N, rng)))};
                       const std::vector<SuperPoly> gens = dual_exterior_basis(n);
                       for (const DifferentialSpec& d : specs) {
                         for (int t = 0; t < 5; ++t) {
                           const SuperPoly v = random_superpoly(rng, n, 2, 4);
                           if (!apply_d(d, apply_d(d, v)).is_zero()) return verdict(false, "d^2 on random input");
                           const SuperPoly inv = reconstruct(random_coordinates(rng, n, 2), gens);
                           if (!kernel_test(apply_d(d, inv))) return verdict(false, "invariance not preserved");
                         }
                         for (int i = 1; i <= n; ++i)
                           if (!apply_d(d, NHElem::x(n, i)).is_zero()) return verdict(false, "x_i not killed");
                         for (int i = 1; i < n; ++i)
                           if (!apply_d(d, NHElem::dd(n, i)).is_zero()) return verdict(false, "d_i not killed");
                         if (!relations_killed_check(d, n)) return verdict(false, "relations");
                       }
                       return verdict(true);
                     }});
    }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"schubert-table", "relations", "rank",       "membership",
                                                 "restrict",       "cohomology", "deformed",   "idempotents",
                                                 "identities",     "solomon",    "ideal",      "center",
                                                 "permcomb",       "divdiff",    "superpoly",  "differential"};
  return names;
}

std::vector<Check> suite_checks(const std::string& suite, const SuiteParams& p) {
  if (p.max_n < 1 || p.max_n > kMaxVars) throw PreconditionError("max-n must lie in 1.." + std::to_string(kMaxVars));
  if (p.max_N < 1) throw PreconditionError("max-N must be positive");
  if (suite == "schubert-table") return schubert_table_checks();
  if (suite == "relations") return relation_checks(p);
  if (suite == "rank") return rank_checks(p, 100);
  if (suite == "membership") return membership_checks(p, 200);
  if (suite == "restrict") return restrict_checks(p);
  if (suite == "cohomology") return cohomology_checks(p);
  if (suite == "deformed") return deformed_checks();
  if (suite == "idempotents") return idempotent_checks(p, 50);
  if (suite == "identities") return identity_checks(p);
  if (suite == "solomon") return solomon_checks(p);
  if (suite == "ideal") return ideal_checks(p, 2);
  if (suite == "center") return center_checks(p);
  if (suite == "permcomb") return permcomb_checks(p);
  if (suite == "divdiff") return divdiff_checks(p);
  if (suite == "superpoly") return superpoly_checks(p);
  if (suite == "differential") return differential_checks(p);
  throw PreconditionError("unknown suite '" + suite + "'");
}

int thread_count() {
  if (const char* env = std::getenv("EXNIL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<Check>& checks, int threads) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next++; i < checks.size(); i = next++) {
      CheckResult& r = results[i];
      r.suite = suite;
      r.name = checks[i].name;
      try {
        const Outcome o = checks[i].run();
        r.pass = o.pass;
        r.detail = o.detail;
      } catch (const CapExceeded& e) {
        r.cap_exceeded = true;
        r.detail = std::string("cap exceeded: ") + e.what();
      } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
      }
    }
  };
  const size_t workers = std::min<size_t>(static_cast<size_t>(std::max(threads, 1)), checks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return results;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteParams& p, int threads) {
  return run_checks(suite, suite_checks(suite, p), threads);
}

}  // namespace exnil
