/*
 * Copyright 2026 The pfaffkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Exercises the shared library through its C interface only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "pfaffkit.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pk_string_free(s);
  return out;
}

bool contains(const std::string& s, const char* needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and ids") {
  CHECK(std::strlen(pk_version()) > 0);
  std::string ids = pk_verification_ids();
  CHECK(contains(ids, "pfaffzg"));
  CHECK(contains(ids, "kronecker"));
}

TEST_CASE("verify returns a report") {
  pk_report* rep = nullptr;
  REQUIRE(pk_verify("prop31", R"({"n":4})", &rep) == PK_OK);
  REQUIRE(rep != nullptr);
  CHECK(pk_report_passed(rep) == 1);
  char* json = nullptr;
  REQUIRE(pk_report_json(rep, 0, &json) == PK_OK);
  std::string j = take(json);
  CHECK(contains(j, "\"verdict\":\"pass\""));
  CHECK_FALSE(contains(j, "elapsed_seconds"));
  char* text = nullptr;
  REQUIRE(pk_report_text(rep, 1, &text) == PK_OK);
  CHECK(contains(take(text), "elapsed"));
  pk_report_free(rep);
}

TEST_CASE("failing verification carries its report") {
  pk_report* rep = nullptr;
  CHECK(pk_verify("det-symmetry", R"({"n":2})", &rep) == PK_FAIL);
  REQUIRE(rep != nullptr);
  CHECK(pk_report_passed(rep) == 0);
  pk_report_free(rep);
}

TEST_CASE("errors map to status codes") {
  pk_report* rep = nullptr;
  CHECK(pk_verify("no-such-identity", nullptr, &rep) == PK_EPARAM);
  CHECK(rep == nullptr);
  CHECK(std::strlen(pk_last_error()) > 0);
  CHECK(pk_verify("pfaffzg", R"({"n":3})", &rep) == PK_EPARAM);
  CHECK(pk_verify("pfaffzg", "{not json", &rep) == PK_EPARSE);
  CHECK(pk_verify(nullptr, nullptr, &rep) == PK_EPARAM);
}

TEST_CASE("rational functions") {
  pk_ratfn *f = nullptr, *g = nullptr;
  const char* quotient = R"({"num":{"terms":[{"coeff":"1","monomial":{"x_1":2}},{"coeff":"-1","monomial":{"x_2":2}}]},
                            "den":{"terms":[{"coeff":"1","monomial":{"x_1":1}},{"coeff":"-1","monomial":{"x_2":1}}]}})";
  const char* sum = R"({"terms":[{"coeff":"1","monomial":{"x_1":1}},{"coeff":"1","monomial":{"x_2":1}}]})";
  REQUIRE(pk_ratfn_parse(quotient, &f) == PK_OK);
  REQUIRE(pk_ratfn_parse(sum, &g) == PK_OK);
  int eq = -1;
  REQUIRE(pk_ratfn_equal(f, g, &eq) == PK_OK);
  CHECK(eq == 1);
  char* out = nullptr;
  REQUIRE(pk_ratfn_to_json(g, &out) == PK_OK);
  CHECK(contains(take(out), "x_1"));
  pk_ratfn_free(f);
  pk_ratfn_free(g);
  CHECK(pk_ratfn_parse(R"({"num":1,"den":0})", &f) == PK_EPARAM);
}

TEST_CASE("Pfaffian and hafnian of a JSON matrix") {
  const char* m = R"({"n":4,"entries":[{"i":1,"j":2,"value":1},{"i":3,"j":4,"value":1}]})";
  char* out = nullptr;
  REQUIRE(pk_pfaffian_json(m, &out) == PK_OK);
  std::string s = take(out);
  CHECK(contains(s, "\"pfaffian\""));
  const char* ones = R"({"n":4,"symmetric":true,"entries":[{"i":1,"j":2,"value":1},{"i":1,"j":3,"value":1},
      {"i":1,"j":4,"value":1},{"i":2,"j":3,"value":1},{"i":2,"j":4,"value":1},{"i":3,"j":4,"value":1}]})";
  REQUIRE(pk_pfaffian_json(ones, &out) == PK_OK);
  s = take(out);
  CHECK(contains(s, "\"hafnian\""));
  CHECK(contains(s, "\"3\""));
  CHECK(pk_pfaffian_json(R"({"n":3,"entries":[]})", &out) == PK_EPARAM);
}

TEST_CASE("tableaux and Young basis") {
  char* out = nullptr;
  REQUIRE(pk_tableaux_json("[3,3]", &out) == PK_OK);
  CHECK(contains(take(out), "\"count\":5"));
  REQUIRE(pk_young_basis_json("[2,2]", &out) == PK_OK);
  CHECK(contains(take(out), "-1/2"));
  REQUIRE(pk_young_basis_text("[2,2]", &out) == PK_OK);
  CHECK(contains(take(out), "Y1"));
  CHECK(pk_tableaux_json("[2,3,1]", &out) == PK_EPARAM);
  CHECK(pk_young_basis_json("[5,4]", &out) == PK_EPARAM);
}

}  // TEST_SUITE
