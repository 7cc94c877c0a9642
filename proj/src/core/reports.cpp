// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "reports.hpp"

#include <iomanip>
#include <sstream>

#include "differential.hpp"
#include "divdiff.hpp"
#include "errors.hpp"
#include "extsym.hpp"
#include "harness.hpp"
#include "nilhecke.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "solomon.hpp"
#include "superpoly.hpp"

namespace exnil {

namespace {

using nlohmann::json;

int get_int(const json& args, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!args.contains(key) || args.at(key).is_null()) {
    if (fallback) return *fallback;
    throw PreconditionError(std::string("missing required argument --") + key);
  }
  const json& v = args.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("argument --") + key + " must be an integer");
  return v.get<int>();
}

std::optional<std::string> get_opt_str(const json& args, const char* key) {
  if (!args.contains(key) || args.at(key).is_null()) return std::nullopt;
  if (!args.at(key).is_string()) throw ParseError(std::string("argument --") + key + " must be a string");
  return args.at(key).get<std::string>();
}

std::string get_str(const json& args, const char* key, std::optional<std::string> fallback = std::nullopt) {
  if (auto v = get_opt_str(args, key)) return *v;
  if (fallback) return *fallback;
  throw PreconditionError(std::string("missing required argument --") + key);
}

int get_n(const json& args) {
  const int n = get_int(args, "n");
  if (n < 1 || n > kMaxVars) throw PreconditionError("--n must lie in 1.." + std::to_string(kMaxVars));
  return n;
}

std::string coords_key(uint32_t mask) {
  std::string s = "[";
  bool first = true;
  for (int i : mask_indices(mask)) {
    s += (first ? "" : " ") + std::to_string(i);
    first = false;
  }
  return s + "]";
}

json coords_json(const Coordinates& c) {
  std::vector<uint32_t> masks;
  for (const auto& [m, f] : c) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), wedge_mask_less);
  json arr = json::array();
  for (uint32_t m : masks) arr.push_back({{"wedge", mask_indices(m)}, {"coeff", to_json(c.at(m))}});
  return arr;
}

std::string coords_text(const Coordinates& c) {
  std::vector<uint32_t> masks;
  for (const auto& [m, f] : c) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), wedge_mask_less);
  std::ostringstream os;
  for (uint32_t m : masks) os << coords_key(m) << ": " << to_string(c.at(m)) << '\n';
  if (masks.empty()) os << "0\n";
  return os.str();
}

/// Deformation parameters from --kappa or --roots, if any.
std::optional<RootMultiset> sigma_from(const json& args) {
  const auto kappa = get_opt_str(args, "kappa");
  const auto roots = get_opt_str(args, "roots");
  if (kappa && roots) throw PreconditionError("give at most one of --kappa and --roots");
  if (kappa) return parse_kappas(*kappa);
  if (roots) return parse_roots(*roots);
  return std::nullopt;
}

SigmaSign sign_from(const json& args) {
  const std::string s = get_str(args, "sign", "printed");
  if (s == "printed") return SigmaSign::AsPrinted;
  if (s == "match") return SigmaSign::MatchUndeformed;
  throw ParseError("--sign must be printed or match");
}

DifferentialSpec spec_from(const json& args, int& N) {
  if (auto sigma = sigma_from(args)) {
    if (args.contains("N") && !args.at("N").is_null() && get_int(args, "N") != sigma->N())
      throw PreconditionError("--N disagrees with the number of kappa parameters");
    N = sigma->N();
    return DifferentialSpec::deformed(*sigma, sign_from(args));
  }
  N = get_int(args, "N");
  if (N < 1) throw PreconditionError("--N must be positive");
  return DifferentialSpec::undeformed(N);
}

// ---------------------------------------------------------------- commands

Report cmd_schubert(const json& args, bool dual) {
  const int n = get_n(args);
  std::vector<Perm> perms;
  if (auto p = get_opt_str(args, "perm")) perms.push_back(parse_perm(n, *p));
  else perms = all_perms(n);
  Report r;
  json rows = json::array();
  std::ostringstream os;
  for (const Perm& w : perms) {
    const Poly f = dual ? dual_schubert(w) : schubert(w);
    rows.push_back({{"perm", w.one_line()}, {"word", w.reduced_word()}, {"poly", to_json(f)}, {"text", to_string(f)}});
    if (perms.size() == 1) os << to_string(f) << '\n';
    else os << std::left << std::setw(12) << to_string(w) << std::setw(14) << word_string(w.reduced_word()) << to_string(f) << '\n';
  }
  r.text = os.str();
  r.json = {{"n", n}, {"kind", dual ? "dual-schubert" : "schubert"}, {"rows", rows}};
  return r;
}

Report cmd_schur(const json& args) {
  const int n = get_n(args);
  const Partition lam = parse_partition(get_str(args, "partition"));
  const int from = get_int(args, "from", 1), to = get_int(args, "to", n);
  const Poly f = schur(n, lam, {from, to});
  Report r;
  r.text = to_string(f) + "\n";
  r.json = {{"n", n}, {"partition", lam.parts()}, {"from", from}, {"to", to}, {"poly", to_json(f)}, {"text", to_string(f)}};
  return r;
}

Report cmd_basis(const json& args) {
  const int n = get_n(args);
  const BasisSpec spec = parse_basis_spec(get_str(args, "family", "dual"));
  const std::vector<Poly> p = basis_p(n, spec);
  const std::vector<SuperPoly> gens = exterior_basis(n, spec);
  Report r;
  json arr = json::array();
  std::ostringstream os;
  for (int j = 1; j <= n; ++j) {
    const SuperPoly& g = gens[static_cast<size_t>(j - 1)];
    const Poly& pj = p[static_cast<size_t>(j - 1)];
    os << "g" << j << " = " << to_string(g) << "    (p" << j << " = " << to_string(pj) << ")\n";
    arr.push_back({{"j", j}, {"p", to_json(pj)}, {"generator", to_json(g)}, {"text", to_string(g)}});
  }
  r.text = os.str();
  r.json = {{"n", n}, {"family", to_string(spec)}, {"generators", arr}};
  return r;
}

Report cmd_member(const json& args) {
  const int n = get_n(args);
  const std::string input = get_str(args, "input");
  Report r;
  if (auto sigma = sigma_from(args)) {
    const NHElem e = parse_nh(n, input);
    std::optional<int> cap;
    if (args.contains("cap") && !args.at("cap").is_null()) cap = get_int(args, "cap");
    const MembershipResult m = ideal_membership(e, *sigma, cap);
    r.text = "ideal membership: " + to_string(m.status) + " (cap " + std::to_string(m.cap) + ")\n" +
             (m.detail.empty() ? "" : m.detail + "\n");
    r.json = {{"n", n}, {"N", sigma->N()}, {"status", to_string(m.status)}, {"cap", m.cap}, {"detail", m.detail}};
    return r;
  }
  const SuperPoly v = parse_superpoly(n, input);
  const bool kernel = kernel_test(v);
  const bool system = system_test(v);
  if (kernel != system) throw InvariantViolation("kernel and coefficient tests disagree");
  std::ostringstream os;
  os << "extended symmetric: " << (kernel ? "yes" : "no") << '\n';
  r.json = {{"n", n}, {"input", to_json(v)}, {"extended_symmetric", kernel}};
  if (kernel) {
    const Coordinates c = decompose(v, dual_exterior_basis(n));
    os << "coordinates over the dual basis:\n" << coords_text(c);
    r.json["coordinates"] = coords_json(c);
  }
  r.text = os.str();
  return r;
}

Report cmd_decompose(const json& args) {
  const int n = get_n(args);
  const BasisSpec spec = parse_basis_spec(get_str(args, "family", "dual"));
  const SuperPoly v = parse_superpoly(n, get_str(args, "input"));
  const std::vector<SuperPoly> gens = exterior_basis(n, spec);
  const Coordinates c = decompose(v, gens);
  if (!(reconstruct(c, gens) == v)) throw InvariantViolation("reconstruction differs from input");
  Report r;
  r.text = coords_text(c);
  r.json = {{"n", n}, {"family", to_string(spec)}, {"coordinates", coords_json(c)}};
  return r;
}

Report cmd_nh_mul(const json& args) {
  const int n = get_n(args);
  const NHElem a = parse_nh(n, get_str(args, "a"));
  const NHElem b = parse_nh(n, get_str(args, "b"));
  const NHElem c = a * b;
  Report r;
  r.text = to_string(c) + "\n";
  r.json = {{"n", n}, {"product", to_json(c)}, {"text", to_string(c)}};
  return r;
}

Report cmd_idempotents(const json& args) {
  const int n = get_n(args);
  const int bound = get_int(args, "bound", 4);
  const std::vector<NHElem> e = idempotents(n, bound);
  const auto sq = sq_index_set(n);
  bool orthogonal = true;
  NHElem sum(n);
  for (size_t a = 0; a < e.size(); ++a) {
    sum += e[a];
    for (size_t b = 0; b < e.size() && orthogonal; ++b) {
      const NHElem prod = e[a] * e[b];
      orthogonal = a == b ? prod == e[a] : prod.is_zero();
    }
  }
  const bool complete = sum == NHElem::one(n);
  Report r;
  std::ostringstream os;
  json arr = json::array();
  for (size_t a = 0; a < e.size(); ++a) {
    std::string label;
    for (int v : sq[a]) label += std::to_string(v);
    os << "e[" << label << "] = " << to_string(e[a]) << '\n';
    arr.push_back({{"l", sq[a]}, {"element", to_json(e[a])}, {"text", to_string(e[a])}});
  }
  os << "orthogonal: " << (orthogonal ? "yes" : "no") << "\nsum is 1: " << (complete ? "yes" : "no") << '\n';
  r.text = os.str();
  r.ok = orthogonal && complete;
  r.json = {{"n", n}, {"idempotents", arr}, {"orthogonal", orthogonal}, {"sum_is_one", complete}};
  return r;
}

Report cmd_diff(const json& args) {
  const int n = get_n(args);
  int N = 0;
  const DifferentialSpec d = spec_from(args, N);
  const NHElem e = parse_nh(n, get_str(args, "input"));
  const NHElem img = apply_d(d, e);
  Report r;
  r.text = to_string(img) + "\n";
  r.json = {{"n", n}, {"N", N}, {"deformed", d.sigma.has_value()}, {"image", to_json(img)}, {"text", to_string(img)}};
  return r;
}

Report cmd_cohomology(const json& args) {
  const int n = get_n(args);
  int N = 0;
  const DifferentialSpec d = spec_from(args, N);
  std::optional<int> cap;
  if (args.contains("cap") && !args.at("cap").is_null()) cap = get_int(args, "cap");
  const CohomologyResult c = cohomology_dims(n, d, cap);
  Report r;
  std::ostringstream os;
  os << "n=" << n << " N=" << N << " cap=" << c.cap << (c.deformed ? " deformed" : " undeformed") << '\n';
  if (!c.deformed) {
    for (size_t k = 0; k < c.by_ext_degree.size(); ++k)
      os << "exterior degree " << k << ": " << to_string(c.by_ext_degree[k]) << '\n';
    os << "poincare: " << to_string(c.by_ext_degree.front()) << '\n';
    os << "reference [" << N << " choose " << n << "]_{q^2}: " << to_string(c.reference) << '\n';
  } else {
    for (size_t k = 0; k < c.totals.size(); ++k) os << "exterior degree " << k << ": total " << c.totals[k] << '\n';
  }
  os << "total " << (c.totals.empty() ? 0 : c.totals.front()) << " (expected " << c.expected_total << ")\n";
  os << "euler characteristic: " << (c.euler_ok ? "ok" : "mismatch") << '\n';
  r.json = to_json(c);
  bool ok = c.matches && c.euler_ok;
  if (d.sigma && !d.sigma->roots().empty()) {
    const DeformedResult b = deformed_total_dim(n, *d.sigma, cap);
    os << "blocks:";
    for (const BlockDim& blk : b.blocks) {
      os << " (";
      for (size_t t = 0; t < blk.parts.size(); ++t) os << (t ? "," : "") << blk.parts[t];
      os << ")=" << blk.dim;
    }
    os << "\nblock total " << b.total << " (expected " << b.expected_total << ")\n";
    r.json["blocks"] = to_json(b);
    ok = ok && b.matches;
  }
  os << "match: " << (ok ? "yes" : "no") << '\n';
  r.text = os.str();
  r.ok = ok;
  return r;
}

Report cmd_solomon(const json& args) {
  const int n = get_n(args);
  const SolomonFamily family = parse_family(get_str(args, "family", "h"));
  const std::string conv = get_str(args, "f_degree", "shifted");
  if (conv != "shifted" && conv != "printed") throw ParseError("--f-degree must be shifted or printed");
  const std::string check = get_str(args, "check", "all");
  const SolomonReport rep =
      solomon_report(n, family, conv == "shifted" ? FDegreeConvention::Shifted : FDegreeConvention::AsPrinted);
  Report r;
  std::ostringstream os;
  json checks = json::array();
  bool matched = false;
  for (const auto& [name, pass] : rep.checks) {
    if (check != "all" && check != name) continue;
    matched = true;
    os << (pass ? "PASS  " : "FAIL  ") << name << '\n';
    checks.push_back({{"name", name}, {"pass", pass}});
    r.ok = r.ok && pass;
  }
  if (!matched) {
    std::string names;
    for (const auto& [name, pass] : rep.checks) names += "\n  " + name;
    throw PreconditionError("unknown check '" + check + "'; available:" + names);
  }
  r.text = os.str();
  r.json = {{"n", n}, {"family", to_string(family)}, {"checks", checks}, {"ok", r.ok}};
  return r;
}

Report cmd_verify(const json& args) {
  SuiteParams p;
  p.max_n = get_int(args, "max_n", 3);
  p.max_N = get_int(args, "max_N", 4);
  if (args.contains("seed") && !args.at("seed").is_null()) p.seed = args.at("seed").get<uint64_t>();
  const int threads = get_int(args, "threads", thread_count());
  const std::string which = get_str(args, "suite", "all");
  std::vector<std::string> suites;
  if (which == "all") suites = suite_names();
  else suites.push_back(which);

  std::vector<CheckResult> all;
  for (const std::string& s : suites) {
    const auto rs = run_suite(s, p, threads);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  Report r;
  size_t width = 5;
  for (const auto& c : all) width = std::max(width, c.name.size());
  std::ostringstream os;
  size_t passed = 0;
  json rows = json::array();
  for (const auto& c : all) {
    const char* status = c.pass ? "PASS" : (c.cap_exceeded ? "CAP" : "FAIL");
    os << std::left << std::setw(16) << c.suite << std::setw(static_cast<int>(width) + 2) << c.name << std::setw(6) << status
       << c.detail << '\n';
    rows.push_back({{"suite", c.suite}, {"check", c.name}, {"status", status}, {"detail", c.detail}});
    passed += c.pass ? 1 : 0;
    r.cap_exceeded = r.cap_exceeded || c.cap_exceeded;
  }
  os << "summary: " << passed << "/" << all.size() << " passed\n";
  r.ok = passed == all.size();
  r.text = os.str();
  r.json = {{"max_n", p.max_n}, {"max_N", p.max_N}, {"seed", p.seed}, {"results", rows},
            {"passed", passed}, {"total", all.size()}, {"ok", r.ok}};
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"schubert", "dual-schubert", "schur",       "basis",
                                                 "member",   "decompose",     "nh-mul",      "idempotents",
                                                 "diff",     "cohomology",    "solomon",     "verify"};
  return names;
}

Report run_command(const std::string& command, const json& args) {
  if (!args.is_object()) throw ParseError("arguments must be a JSON object");
  if (command == "schubert") return cmd_schubert(args, false);
  if (command == "dual-schubert") return cmd_schubert(args, true);
  if (command == "schur") return cmd_schur(args);
  if (command == "basis") return cmd_basis(args);
  if (command == "member") return cmd_member(args);
  if (command == "decompose") return cmd_decompose(args);
  if (command == "nh-mul") return cmd_nh_mul(args);
  if (command == "idempotents") return cmd_idempotents(args);
  if (command == "diff") return cmd_diff(args);
  if (command == "cohomology") return cmd_cohomology(args);
  if (command == "solomon") return cmd_solomon(args);
  if (command == "verify") return cmd_verify(args);
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace exnil
