// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "parse.hpp"

#include <cctype>
#include <string>

#include "errors.hpp"

namespace exnil {

namespace {

class Parser {
 public:
  Parser(int n, std::string_view text) : n_(n), s_(text) {
    if (n < 1 || n > kMaxVars) throw StructuralError("n must lie in 1.." + std::to_string(kMaxVars));
  }

  NHElem run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression");
    NHElem e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(size_t at, const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(at) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int index(int hi) {
    const std::string d = digits();
    const size_t at = pos_ - d.size();
    if (d.size() > 3) fail_at(at, "index too large");
    const int i = std::stoi(d);
    if (i < 1 || i > hi) fail_at(at, "index " + d + " outside 1.." + std::to_string(hi));
    return i;
  }

  NHElem expr() {
    NHElem acc(n_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    NHElem t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  NHElem term() {
    NHElem acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NHElem factor() {
    NHElem base = atom();
    if (!accept('^')) return base;
    const std::string d = digits();
    if (d.size() > 4) fail("exponent too large");
    const int e = std::stoi(d);
    NHElem out = NHElem::one(n_);
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  NHElem atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NHElem e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (accept('/')) {
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      Rat r(num, den);
      r.canonicalize();
      return r * NHElem::one(n_);
    }
    ++pos_;
    switch (c) {
      case 'x':
        return NHElem::x(n_, index(n_));
      case 'w':
        return NHElem::omega(n_, index(n_));
      case 'd': {
        if (n_ < 2) fail("no divided differences when n = 1");
        if (!accept('[')) return NHElem::dd(n_, index(n_ - 1));
        NHElem out = NHElem::one(n_);
        while (!accept(']')) {
          if (pos_ >= s_.size()) fail("expected ']'");
          out = out * NHElem::dd(n_, index(n_ - 1));
          accept(',');
        }
        return out;
      }
      default:
        --pos_;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  int n_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

NHElem parse_nh(int n, std::string_view text) { return Parser(n, text).run(); }

SuperPoly to_superpoly(const NHElem& e) {
  const auto parts = e.by_perm();
  SuperPoly out(e.nvars());
  for (const auto& [w, v] : parts) {
    if (!w.is_identity()) throw ParseError("expression contains divided differences");
    out += v;
  }
  return out;
}

SuperPoly parse_superpoly(int n, std::string_view text) { return to_superpoly(parse_nh(n, text)); }

Poly parse_poly(int n, std::string_view text) {
  const SuperPoly v = parse_superpoly(n, text);
  for (const auto& [m, f] : v.components())
    if (m != 0) throw ParseError("expression contains odd generators w");
  return v.component(0);
}

}  // namespace exnil
