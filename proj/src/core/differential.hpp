// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nilhecke.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

/// Parameters of P(x) = x^N + sum_{j=1..N} kappa_j x^{N-j}; kappa_0 = 1 is implicit.
class RootMultiset {
 public:
  explicit RootMultiset(std::vector<Rat> kappas);
  /// P(x) = prod (x - root)^mult; roots must be pairwise distinct, multiplicities >= 1.
  static RootMultiset from_roots(const std::vector<std::pair<Rat, int>>& roots);

  int N() const { return static_cast<int>(kappas_.size()); }
  /// kappa_j for 0 <= j <= N.
  Rat kappa(int j) const;
  const std::vector<Rat>& kappas() const { return kappas_; }
  bool is_undeformed() const;
  /// Roots with multiplicities when built by from_roots.
  const std::vector<std::pair<Rat, int>>& roots() const { return roots_; }
  /// sum_j kappa_j x_var^{N-j} in nvars variables.
  Poly P(int nvars, int var) const;

 private:
  std::vector<Rat> kappas_;
  std::vector<std::pair<Rat, int>> roots_;
};

/// "1,0,-1/2" -> kappa_1..kappa_N.
RootMultiset parse_kappas(const std::string& text);
/// "0:2,1:2" -> roots with multiplicities.
RootMultiset parse_roots(const std::string& text);

/// AsPrinted keeps the deformed generator sign (-1)^{i+1}; MatchUndeformed negates it so
/// that kappa = 0 reproduces d_N.
enum class SigmaSign { AsPrinted, MatchUndeformed };

struct DifferentialSpec {
  int N = 1;
  std::optional<RootMultiset> sigma;
  SigmaSign sign = SigmaSign::AsPrinted;

  static DifferentialSpec undeformed(int N);
  static DifferentialSpec deformed(const RootMultiset& s, SigmaSign sign = SigmaSign::AsPrinted);
};

/// Image of w_i: (-1)^i h_{N-i+1}(x_1..x_i), or the kappa-weighted sum when deformed.
Poly d_omega(const DifferentialSpec& d, int n, int i);

/// Odd derivation killing x_i and d_i; the p-th wedge factor carries (-1)^{p-1}.
SuperPoly apply_d(const DifferentialSpec& d, const SuperPoly& v);
NHElem apply_d(const DifferentialSpec& d, const NHElem& e);

/// Images of the defining relations d_i w_j = w_j d_i (j != i) and the mixed d_i w_i
/// relation vanish in normal form, for every 1 <= i < n.
bool relations_killed_check(const DifferentialSpec& d, int n);

/// d_N(w-hat_i) = (-1)^i h_{N-i+1}(x_1..x_n) for all i, where w-hat_i = hw(n + 1 - i).
bool restrict_check(int n, int N);

/// h_{N-i+1}(x_1..x_n) = sum_{j=0}^{n-i} h_{N-i-j+1}(x_1..x_{i+j}) h_j(x_{i+j}..x_n).
bool sym_ident_check(int n, int N, int i);

/// Koszul sequence a_i = d(w-hat_i), computed by applying d; each must be a symmetric scalar.
std::vector<Poly> koszul_sequence(const DifferentialSpec& d, int n);

/// [N choose n] in q^2 by the q-Pascal rule.
GradedDims gaussian_binomial_sq(int N, int n);
long binomial(int N, int n);

/// One internal degree (or the whole filtration window when deformed), indexed by exterior degree.
struct ComplexSlice {
  int degree = 0;
  std::vector<long> chain_dims;
  /// ranks[k] = rank of d: C_k -> C_{k-1}; ranks[0] = 0.
  std::vector<long> ranks;
  std::vector<long> cohomology;
};

struct CohomologyResult {
  int n = 0;
  int N = 0;
  int cap = 0;
  bool deformed = false;
  std::vector<ComplexSlice> slices;
  /// Graded cohomology per exterior degree, keyed by degree with deg x = 2 (undeformed only).
  std::vector<GradedDims> by_ext_degree;
  /// Total cohomology per exterior degree through the window.
  std::vector<long> totals;
  GradedDims reference;
  long expected_total = 0;
  bool euler_ok = true;
  bool matches = false;
};

/// Smallest window certified to contain all cohomology: n(N-n) when N >= n, else 0.
int certified_cap(int n, int N);
/// Default window n(N-n) + N.
int default_cap(int n, int N);

/// Exact ranks of the Koszul complex on the symmetric-function coordinates.
/// Throws CapExceeded when cap is below certified_cap.
CohomologyResult cohomology_dims(int n, const DifferentialSpec& d, std::optional<int> cap = std::nullopt);

struct BlockDim {
  /// n_j per root, summing to n.
  std::vector<int> parts;
  long dim = 0;
  long expected = 0;
};

struct DeformedResult {
  int n = 0;
  int N = 0;
  int cap = 0;
  long total = 0;
  long expected_total = 0;
  std::vector<BlockDim> blocks;
  bool matches = false;
};

/// dim of Lambda_n modulo the deformed Koszul sequence, split into generalized eigenspaces of
/// a generic symmetric multiplication operator, compared with products of binomials per root.
DeformedResult deformed_total_dim(int n, const RootMultiset& sigma, std::optional<int> cap = std::nullopt);

enum class Membership { Member, Indeterminate };

struct MembershipResult {
  Membership status = Membership::Indeterminate;
  int cap = 0;
  std::string detail;
};

/// Two-sided ideal of NH_n generated by P(x_1): e lies in it iff every matrix entry of e lies in
/// the ideal of Lambda_n generated by the entries of P(x_1); that membership is decided inside
/// the degree window [0, cap], so a miss is reported as indeterminate.
MembershipResult ideal_membership(const NHElem& e, const RootMultiset& sigma, std::optional<int> cap = std::nullopt);

/// Literal span of b1 P(x_1) b2 over PBW monomials b of x-degree <= xcap.
MembershipResult ideal_membership_spanning(const NHElem& e, const RootMultiset& sigma, int xcap);

/// The four identities of the deformed cyclotomic quotient as ideal elements.
std::vector<std::pair<std::string, NHElem>> deformed_ideal_identities(int n, const RootMultiset& sigma, int max_y);

std::string to_string(Membership m);
nlohmann::json to_json(const CohomologyResult& r);
nlohmann::json to_json(const DeformedResult& r);

}  // namespace exnil
