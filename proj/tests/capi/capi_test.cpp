// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "exnil/exnil.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out = s;
  exnil_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and commands") {
  CHECK(std::string(exnil_version()) == "0.1.0");
  CHECK(exnil_command_count() == 12);
  CHECK(std::string(exnil_command_name(0)) == "schubert");
  CHECK(exnil_command_name(99) == nullptr);
  CHECK(std::string(exnil_status_name(EXNIL_E_CAP)) == "cap exceeded");
}

TEST_CASE("polynomial handles") {
  exnil_poly *a = nullptr, *b = nullptr, *prod = nullptr, *d = nullptr, *s = nullptr;
  REQUIRE(exnil_poly_parse(2, "x1 + x2", &a) == EXNIL_OK);
  REQUIRE(exnil_poly_parse(2, "x1 - x2", &b) == EXNIL_OK);
  REQUIRE(exnil_poly_mul(a, b, &prod) == EXNIL_OK);
  char* text = nullptr;
  REQUIRE(exnil_poly_to_string(prod, &text) == EXNIL_OK);
  CHECK(take(text) == "x1^2 - x2^2");
  REQUIRE(exnil_poly_dd(1, prod, &d) == EXNIL_OK);
  REQUIRE(exnil_poly_to_string(d, &text) == EXNIL_OK);
  CHECK(take(text) == "2*x1 + 2*x2");
  REQUIRE(exnil_schubert(3, "s2 s1", &s) == EXNIL_OK);
  REQUIRE(exnil_poly_to_json(s, &text) == EXNIL_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j.size() == 1);
  exnil_poly* sum = nullptr;
  REQUIRE(exnil_poly_add(a, b, &sum) == EXNIL_OK);
  exnil_poly* two_x1 = nullptr;
  REQUIRE(exnil_poly_parse(2, "2*x1", &two_x1) == EXNIL_OK);
  CHECK(exnil_poly_equal(sum, two_x1) == 1);
  CHECK(exnil_poly_equal(a, b) == 0);
  CHECK(exnil_poly_equal(a, nullptr) == -1);
  for (exnil_poly* p : {a, b, prod, d, s, sum, two_x1}) exnil_poly_free(p);
}

TEST_CASE("status codes and last error") {
  exnil_poly* p = nullptr;
  CHECK(exnil_poly_parse(2, "x3", &p) == EXNIL_E_PARSE);
  CHECK(std::string(exnil_last_error()).find("outside") != std::string::npos);
  CHECK(exnil_poly_parse(2, nullptr, &p) == EXNIL_E_NULL);
  CHECK(exnil_schubert(3, "[1,1,2]", &p) != EXNIL_OK);
  exnil_poly *x = nullptr, *y = nullptr, *z = nullptr;
  REQUIRE(exnil_poly_parse(2, "x1", &x) == EXNIL_OK);
  REQUIRE(exnil_poly_parse(3, "x1", &y) == EXNIL_OK);
  CHECK(exnil_poly_add(x, y, &z) == EXNIL_E_STRUCTURAL);
  exnil_poly_free(x);
  exnil_poly_free(y);
  exnil_result* r = nullptr;
  CHECK(exnil_run("idempotents", R"({"n": 5})", &r) == EXNIL_E_CAP);
  CHECK(r == nullptr);
  CHECK(exnil_run("schubert", "{not json", &r) == EXNIL_E_PARSE);
  CHECK(exnil_run("schubert", "{}", &r) == EXNIL_E_PRECONDITION);
  CHECK(exnil_run("nope", "{}", &r) == EXNIL_E_PRECONDITION);
  CHECK(exnil_last_error() != nullptr);
  exnil_poly_free(nullptr);
  exnil_result_free(nullptr);
}

TEST_CASE("nilHecke handles") {
  exnil_nh *a = nullptr, *b = nullptr, *c = nullptr, *one = nullptr;
  REQUIRE(exnil_nh_parse(2, "x1", &a) == EXNIL_OK);
  REQUIRE(exnil_nh_parse(2, "d1", &b) == EXNIL_OK);
  REQUIRE(exnil_nh_mul(b, a, &c) == EXNIL_OK);
  char* text = nullptr;
  REQUIRE(exnil_nh_to_string(c, &text) == EXNIL_OK);
  const std::string s = take(text);
  exnil_nh* again = nullptr;
  REQUIRE(exnil_nh_parse(2, s.c_str(), &again) == EXNIL_OK);
  CHECK(exnil_nh_equal(c, again) == 1);
  REQUIRE(exnil_nh_to_json(c, &text) == EXNIL_OK);
  exnil_nh* from_json = nullptr;
  REQUIRE(exnil_nh_from_json(2, take(text).c_str(), &from_json) == EXNIL_OK);
  CHECK(exnil_nh_equal(c, from_json) == 1);
  REQUIRE(exnil_nh_parse(2, "x2*d1 + 1", &one) == EXNIL_OK);
  CHECK(exnil_nh_equal(c, one) == 1);
  for (exnil_nh* e : {a, b, c, one, again, from_json}) exnil_nh_free(e);
}

TEST_CASE("command results") {
  exnil_result* r = nullptr;
  REQUIRE(exnil_run("schubert", R"({"n": 3, "perm": "s1 s2 s1"})", &r) == EXNIL_OK);
  CHECK(std::string(exnil_result_text(r)) == "x1^2*x2\n");
  CHECK(exnil_result_ok(r) == 1);
  CHECK(exnil_result_cap_exceeded(r) == 0);
  const auto j = nlohmann::json::parse(exnil_result_json(r));
  CHECK(j["rows"][0]["perm"] == std::vector<int>{3, 2, 1});
  exnil_result_free(r);
}

TEST_CASE("last error is per thread") {
  exnil_poly* p = nullptr;
  CHECK(exnil_poly_parse(2, "x9", &p) == EXNIL_E_PARSE);
  std::string other;
  std::thread t([&] {
    exnil_poly* q = nullptr;
    exnil_poly_parse(2, "x1", &q);
    other = exnil_last_error();
    exnil_poly_free(q);
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(exnil_last_error()).find("x9") != std::string::npos);
}
