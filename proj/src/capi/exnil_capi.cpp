// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "exnil/exnil.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "divdiff.hpp"
#include "errors.hpp"
#include "nilhecke.hpp"
#include "parse.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "reports.hpp"

struct exnil_result {
  std::string text;
  std::string json;
  bool ok = true;
  bool cap = false;
};

struct exnil_poly {
  exnil::Poly value;
};

struct exnil_nh {
  exnil::NHElem value;
};

namespace {

thread_local std::string last_error;

exnil_status fail(exnil_status s, const std::string& what) {
  last_error = what;
  return s;
}

/// Runs body, translating library exceptions into status codes.
template <class F>
exnil_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const exnil::ParseError& e) {
    return fail(EXNIL_E_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(EXNIL_E_PARSE, e.what());
  } catch (const exnil::StructuralError& e) {
    return fail(EXNIL_E_STRUCTURAL, e.what());
  } catch (const exnil::PreconditionError& e) {
    return fail(EXNIL_E_PRECONDITION, e.what());
  } catch (const exnil::CapExceeded& e) {
    return fail(EXNIL_E_CAP, e.what());
  } catch (const exnil::InvariantViolation& e) {
    return fail(EXNIL_E_INVARIANT, e.what());
  } catch (const std::exception& e) {
    return fail(EXNIL_E_INTERNAL, e.what());
  } catch (...) {
    return fail(EXNIL_E_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

}  // namespace

extern "C" {

const char* exnil_last_error(void) { return last_error.c_str(); }

const char* exnil_version(void) { return "0.1.0"; }

const char* exnil_status_name(exnil_status s) {
  switch (s) {
    case EXNIL_OK: return "ok";
    case EXNIL_E_NULL: return "null argument";
    case EXNIL_E_PARSE: return "parse error";
    case EXNIL_E_STRUCTURAL: return "structural error";
    case EXNIL_E_PRECONDITION: return "precondition error";
    case EXNIL_E_CAP: return "cap exceeded";
    case EXNIL_E_INVARIANT: return "invariant violation";
    case EXNIL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void exnil_string_free(char* s) { std::free(s); }

exnil_status exnil_run(const char* command, const char* args_json, exnil_result** out) {
  if (any_null(command, args_json, out)) return fail(EXNIL_E_NULL, "null argument to exnil_run");
  *out = nullptr;
  return guarded([&] {
    const exnil::Report rep = exnil::run_command(command, nlohmann::json::parse(args_json));
    auto r = std::make_unique<exnil_result>();
    r->text = rep.text;
    r->json = rep.json.dump(2) + "\n";
    r->ok = rep.ok;
    r->cap = rep.cap_exceeded;
    *out = r.release();
    return EXNIL_OK;
  });
}

const char* exnil_result_text(const exnil_result* r) { return r ? r->text.c_str() : ""; }
const char* exnil_result_json(const exnil_result* r) { return r ? r->json.c_str() : ""; }
int exnil_result_ok(const exnil_result* r) { return r && r->ok ? 1 : 0; }
int exnil_result_cap_exceeded(const exnil_result* r) { return r && r->cap ? 1 : 0; }
void exnil_result_free(exnil_result* r) { delete r; }

size_t exnil_command_count(void) { return exnil::command_names().size(); }

const char* exnil_command_name(size_t i) {
  const auto& names = exnil::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

exnil_status exnil_poly_parse(int n, const char* text, exnil_poly** out) {
  if (any_null(text, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_parse");
  return guarded([&] {
    *out = new exnil_poly{exnil::parse_poly(n, text)};
    return EXNIL_OK;
  });
}

exnil_status exnil_poly_add(const exnil_poly* a, const exnil_poly* b, exnil_poly** out) {
  if (any_null(a, b, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_add");
  return guarded([&] {
    *out = new exnil_poly{a->value + b->value};
    return EXNIL_OK;
  });
}

exnil_status exnil_poly_mul(const exnil_poly* a, const exnil_poly* b, exnil_poly** out) {
  if (any_null(a, b, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_mul");
  return guarded([&] {
    *out = new exnil_poly{a->value * b->value};
    return EXNIL_OK;
  });
}

exnil_status exnil_poly_dd(int i, const exnil_poly* f, exnil_poly** out) {
  if (any_null(f, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_dd");
  return guarded([&] {
    *out = new exnil_poly{exnil::dd(i, f->value)};
    return EXNIL_OK;
  });
}

exnil_status exnil_schubert(int n, const char* perm, exnil_poly** out) {
  if (any_null(perm, out)) return fail(EXNIL_E_NULL, "null argument to exnil_schubert");
  return guarded([&] {
    *out = new exnil_poly{exnil::schubert(exnil::parse_perm(n, perm))};
    return EXNIL_OK;
  });
}

exnil_status exnil_poly_to_string(const exnil_poly* f, char** out) {
  if (any_null(f, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_to_string");
  return guarded([&] {
    *out = dup_string(exnil::to_string(f->value));
    return EXNIL_OK;
  });
}

exnil_status exnil_poly_to_json(const exnil_poly* f, char** out) {
  if (any_null(f, out)) return fail(EXNIL_E_NULL, "null argument to exnil_poly_to_json");
  return guarded([&] {
    *out = dup_string(exnil::to_json(f->value).dump());
    return EXNIL_OK;
  });
}

int exnil_poly_equal(const exnil_poly* a, const exnil_poly* b) {
  if (any_null(a, b)) {
    fail(EXNIL_E_NULL, "null argument to exnil_poly_equal");
    return -1;
  }
  return a->value == b->value ? 1 : 0;
}

void exnil_poly_free(exnil_poly* f) { delete f; }

exnil_status exnil_nh_parse(int n, const char* text, exnil_nh** out) {
  if (any_null(text, out)) return fail(EXNIL_E_NULL, "null argument to exnil_nh_parse");
  return guarded([&] {
    *out = new exnil_nh{exnil::parse_nh(n, text)};
    return EXNIL_OK;
  });
}

exnil_status exnil_nh_from_json(int n, const char* json, exnil_nh** out) {
  if (any_null(json, out)) return fail(EXNIL_E_NULL, "null argument to exnil_nh_from_json");
  return guarded([&] {
    *out = new exnil_nh{exnil::nh_from_json(nlohmann::json::parse(json), n)};
    return EXNIL_OK;
  });
}

exnil_status exnil_nh_mul(const exnil_nh* a, const exnil_nh* b, exnil_nh** out) {
  if (any_null(a, b, out)) return fail(EXNIL_E_NULL, "null argument to exnil_nh_mul");
  return guarded([&] {
    *out = new exnil_nh{a->value * b->value};
    return EXNIL_OK;
  });
}

exnil_status exnil_nh_to_string(const exnil_nh* e, char** out) {
  if (any_null(e, out)) return fail(EXNIL_E_NULL, "null argument to exnil_nh_to_string");
  return guarded([&] {
    *out = dup_string(exnil::to_string(e->value));
    return EXNIL_OK;
  });
}

exnil_status exnil_nh_to_json(const exnil_nh* e, char** out) {
  if (any_null(e, out)) return fail(EXNIL_E_NULL, "null argument to exnil_nh_to_json");
  return guarded([&] {
    *out = dup_string(exnil::to_json(e->value).dump());
    return EXNIL_OK;
  });
}

int exnil_nh_equal(const exnil_nh* a, const exnil_nh* b) {
  if (any_null(a, b)) {
    fail(EXNIL_E_NULL, "null argument to exnil_nh_equal");
    return -1;
  }
  return a->value == b->value ? 1 : 0;
}

void exnil_nh_free(exnil_nh* e) { delete e; }

}  // extern "C"
