// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "perm.hpp"
#include "poly.hpp"

namespace exnil {

/// Sign of w_a * w_b relative to the ascending wedge w_{a|b}; 0 when a and b overlap.
///
/// The sign is (-1)^{#(i in a, j in b, i > j)}. Every odd-variable product in the
/// library goes through this routine.
int wedge_sign(uint32_t a, uint32_t b);

/// Odd generators w_1..w_n.
struct OmegaTag {
  static constexpr const char* symbol = "w";
};
/// Odd generators dx_1..dx_n.
struct DxTag {
  static constexpr const char* symbol = "dx";
};

/// Poly tensor an exterior algebra on n odd generators, keyed by bitmask.
///
/// Bit i set means generator i+1 is present; the coefficient multiplies the
/// ascending wedge. Zero components are never stored.
template <class Tag>
class ExtPoly {
 public:
  using Components = std::map<uint32_t, Poly>;

  ExtPoly() = default;
  explicit ExtPoly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw StructuralError("variable count out of range");
  }
  /// f * (empty wedge).
  static ExtPoly scalar(const Poly& f) {
    ExtPoly v(f.nvars());
    v.add(0, f);
    return v;
  }
  /// The odd generator with 1-based index i.
  static ExtPoly generator(int nvars, int i) {
    if (i < 1 || i > nvars) throw StructuralError("odd generator index out of range");
    ExtPoly v(nvars);
    v.add(1U << (i - 1), Poly::constant(nvars, 1));
    return v;
  }
  /// f times the ascending wedge of mask.
  static ExtPoly wedge(uint32_t mask, const Poly& f) {
    ExtPoly v(f.nvars());
    v.add(mask, f);
    return v;
  }

  int nvars() const { return n_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  Poly component(uint32_t mask) const {
    auto it = comps_.find(mask);
    return it == comps_.end() ? Poly(n_) : it->second;
  }

  void add(uint32_t mask, const Poly& f) {
    if (f.nvars() != n_) throw StructuralError("component variable count differs");
    if (n_ < 32 && (mask >> n_) != 0) throw StructuralError("wedge mask beyond n generators");
    if (f.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(mask, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  ExtPoly& operator+=(const ExtPoly& o) {
    check_same(o);
    for (const auto& [m, f] : o.comps_) add(m, f);
    return *this;
  }
  ExtPoly& operator-=(const ExtPoly& o) {
    check_same(o);
    for (const auto& [m, f] : o.comps_) add(m, -f);
    return *this;
  }
  ExtPoly operator-() const {
    ExtPoly out(n_);
    for (const auto& [m, f] : comps_) out.comps_.emplace(m, -f);
    return out;
  }
  friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
  friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
  friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
    a.check_same(b);
    ExtPoly out(a.n_);
    for (const auto& [ma, fa] : a.comps_) {
      for (const auto& [mb, fb] : b.comps_) {
        const int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        Poly t = fa * fb;
        if (s < 0) t = -t;
        out.add(ma | mb, t);
      }
    }
    return out;
  }
  /// Coefficient-wise multiplication by an even polynomial.
  friend ExtPoly operator*(const Poly& f, const ExtPoly& v) {
    ExtPoly out(v.n_);
    if (f.nvars() != v.n_) throw StructuralError("polynomial and super polynomial sizes differ");
    for (const auto& [m, g] : v.comps_) out.add(m, f * g);
    return out;
  }
  friend ExtPoly operator*(const Rat& c, const ExtPoly& v) {
    ExtPoly out(v.n_);
    for (const auto& [m, g] : v.comps_) out.add(m, c * g);
    return out;
  }

  bool operator==(const ExtPoly& o) const { return n_ == o.n_ && comps_ == o.comps_; }

  /// Components with exactly k odd factors.
  ExtPoly exterior_part(int k) const {
    ExtPoly out(n_);
    for (const auto& [m, f] : comps_)
      if (std::popcount(m) == k) out.comps_.emplace(m, f);
    return out;
  }

 private:
  void check_same(const ExtPoly& o) const {
    if (n_ != o.n_) throw StructuralError("super polynomials over different variable counts");
  }

  int n_ = 0;
  Components comps_;
};

using SuperPoly = ExtPoly<OmegaTag>;
using DiffSuperPoly = ExtPoly<DxTag>;

/// Print order of wedge masks: by number of factors, then by ascending index list.
bool wedge_mask_less(uint32_t a, uint32_t b);

/// "w1*w3" for mask 0b101 with the given symbol; "" for the empty wedge.
std::string wedge_string(uint32_t mask, const char* symbol);

template <class Tag>
std::string to_string(const ExtPoly<Tag>& v) {
  if (v.is_zero()) return "0";
  std::vector<uint32_t> masks;
  for (const auto& [m, f] : v.components()) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), wedge_mask_less);
  std::ostringstream os;
  bool first = true;
  for (uint32_t m : masks) {
    const Poly f = v.component(m);
    const std::string w = wedge_string(m, Tag::symbol);
    std::string body;
    bool neg = false;
    if (m == 0) {
      body = to_string(f);
      if (f.size() == 1 && body[0] == '-') {
        neg = true;
        body = body.substr(1);
      } else if (f.size() > 1 && !first) {
        body = "(" + body + ")";
      }
    } else if (f.size() == 1) {
      const auto& [mono, c] = *f.terms().begin();
      neg = sgn(c) < 0;
      const Rat mag = abs(c);
      std::string coeff;
      if (mono.degree() == 0) {
        coeff = mag == 1 ? "" : mag.get_str() + "*";
      } else {
        coeff = (mag == 1 ? "" : mag.get_str() + "*") + to_string(mono) + "*";
      }
      body = coeff + w;
    } else {
      body = "(" + to_string(f) + ")*" + w;
    }
    if (first) {
      os << (neg ? "-" : "") << body;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

std::vector<int> mask_indices(uint32_t mask);
uint32_t mask_of(const std::vector<int>& indices);

template <class Tag>
nlohmann::json to_json(const ExtPoly<Tag>& v) {
  nlohmann::json arr = nlohmann::json::array();
  std::vector<uint32_t> masks;
  for (const auto& [m, f] : v.components()) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), wedge_mask_less);
  for (uint32_t m : masks) arr.push_back({{"wedge", mask_indices(m)}, {"coeff", to_json(v.component(m))}});
  return arr;
}

template <class Tag>
ExtPoly<Tag> ext_from_json(const nlohmann::json& j, int nvars) {
  if (!j.is_array()) throw ParseError("super polynomial JSON must be an array");
  ExtPoly<Tag> out(nvars);
  for (const auto& t : j) {
    if (!t.contains("wedge") || !t.contains("coeff")) throw ParseError("component needs wedge and coeff");
    out.add(mask_of(t.at("wedge").get<std::vector<int>>()), poly_from_json(t.at("coeff"), nvars));
  }
  return out;
}

/// s_i as the ring automorphism with s_i(w_j) = w_j + delta_ij (x_j - x_{j+1}) w_{j+1}.
SuperPoly act_si(int i, const SuperPoly& v);
/// Composite of act_si along the reduced word of w, rightmost letter first.
SuperPoly act_perm(const Perm& w, const SuperPoly& v);

/// (v - s_i v) / (x_i - x_{i+1}), componentwise exact division.
SuperPoly ext_dd(int i, const SuperPoly& v);
SuperPoly ext_dd_word(const std::vector<int>& word, const SuperPoly& v);
SuperPoly ext_dd_perm(const Perm& w, const SuperPoly& v);

/// Checks both forms of the twisted Leibniz rule for d_i on f*g.
bool leibniz_check(int i, const SuperPoly& f, const SuperPoly& g);

/// Occupied (polynomial degree, exterior degree) pairs.
std::set<std::pair<int, int>> bidegree(const SuperPoly& v);

}  // namespace exnil
