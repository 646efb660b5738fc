/*
   Copyright 2026 The hankellab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exercises the shared-library boundary only: opaque handles, status codes,
// JSON/CSV payloads.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "hankellab/hankellab.h"

using nlohmann::json;

namespace {

struct Owned {
  char* data = nullptr;
  ~Owned() { hl_string_free(data); }
};

hl_symbol* make_scalar(std::initializer_list<double> taylor_real) {
  std::vector<double> interleaved;
  for (double v : taylor_real) {
    interleaved.push_back(v);
    interleaved.push_back(0.0);
  }
  hl_symbol* sym = nullptr;
  REQUIRE(hl_symbol_create(1, static_cast<int>(taylor_real.size()) - 1, interleaved.data(),
                           &sym) == HL_OK);
  return sym;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(hl_version()) == "0.1.0");
  CHECK(std::string(hl_status_name(HL_OK)) == "HL_OK");
  CHECK(std::string(hl_status_name(HL_ERR_PARSE)) == "HL_ERR_PARSE");
}

TEST_CASE("symbol handles: create, shape, json round-trip") {
  hl_symbol* sym = make_scalar({1.0, 0.5, 0.25});
  int dim = 0, degree = 0;
  CHECK(hl_symbol_shape(sym, &dim, &degree) == HL_OK);
  CHECK(dim == 1);
  CHECK(degree == 2);

  Owned text;
  CHECK(hl_symbol_to_json(sym, &text.data) == HL_OK);
  hl_symbol* again = nullptr;
  CHECK(hl_symbol_from_json(text.data, &again) == HL_OK);
  int degree2 = 0;
  CHECK(hl_symbol_shape(again, nullptr, &degree2) == HL_OK);
  CHECK(degree2 == 2);
  hl_symbol_free(again);
  hl_symbol_free(sym);
}

TEST_CASE("error codes and last-error diagnostics") {
  hl_symbol* sym = nullptr;
  CHECK(hl_symbol_from_json(nullptr, &sym) == HL_ERR_NULL_POINTER);
  CHECK(hl_symbol_from_json("{broken", &sym) == HL_ERR_PARSE);
  CHECK(std::string(hl_last_error()).size() > 0);

  hl_symbol* ok = make_scalar({1.0});
  Owned out;
  CHECK(hl_norm_chain(ok, -1.0, 4, &out.data) == HL_ERR_INVALID_ARGUMENT);

  hl_measure* mu = nullptr;
  CHECK(hl_measure_from_json(R"({"atoms": [{"re": 0, "im": 0, "mass": 1}]})", &mu) == HL_OK);
  double value = 0.0;
  CHECK(hl_carleson_intensity(mu, 2, &value) == HL_ERR_INVALID_ARGUMENT);
  CHECK(hl_carleson_intensity(mu, 10, &value) == HL_OK);
  CHECK(value == 0.0);
  hl_measure_free(mu);
  hl_symbol_free(ok);

  CHECK(hl_set_max_threads(-2) == HL_ERR_INVALID_ARGUMENT);
  CHECK(hl_set_max_threads(2) == HL_OK);
}

TEST_CASE("norm chain payload for a constant symbol") {
  hl_symbol* sym = make_scalar({2.0});
  Owned out;
  REQUIRE(hl_norm_chain(sym, 1.0, 8, &out.data) == HL_OK);
  json doc = json::parse(out.data);
  CHECK(doc["schema"] == 1);
  CHECK(doc["values"].size() == 6);
  CHECK(std::abs(doc["values"][0].get<double>() - 2.0) < 1e-12);
  CHECK(std::abs(doc["values"][5].get<double>() - 2.0) < 1e-12);
  CHECK(doc["ratios"].size() == 15);
  hl_symbol_free(sym);
}

TEST_CASE("embedding modes") {
  hl_symbol* sym = make_scalar({1.0, 1.0});
  for (const char* mode : {"anti", "analytic", "weak", "rk"}) {
    Owned out;
    REQUIRE(hl_embedding(sym, mode, 1.0, 8, &out.data) == HL_OK);
    json doc = json::parse(out.data);
    CHECK(doc["value"].get<double>() > 0.0);
  }
  Owned out;
  CHECK(hl_embedding(sym, "nonsense", 1.0, 8, &out.data) == HL_ERR_INVALID_ARGUMENT);
  hl_symbol_free(sym);
}

TEST_CASE("dp1 and dp2 emit csv with the fixed header") {
  int ladder[] = {7, 15};
  Owned csv;
  REQUIRE(hl_dp1(1.0, "default", ladder, 2, &csv.data) == HL_OK);
  std::string text = csv.data;
  CHECK(text.rfind("experiment,alpha,N,value,witness\n", 0) == 0);
  CHECK(text.find("dp1.sigma_XD,1,7,") != std::string::npos);

  int small[] = {4};
  Owned csv2;
  REQUIRE(hl_dp2(1.0, small, 1, "all", 42, &csv2.data) == HL_OK);
  std::string text2 = csv2.data;
  CHECK(text2.find("dp2.lower_bound,1,4,") != std::string::npos);

  // determinism: identical seed gives identical bytes
  Owned csv3;
  REQUIRE(hl_dp2(1.0, small, 1, "all", 42, &csv3.data) == HL_OK);
  CHECK(text2 == std::string(csv3.data));

  Owned bad;
  CHECK(hl_dp1(1.0, "bogus-rule", ladder, 2, &bad.data) == HL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lemma runners") {
  Owned out;
  REQUIRE(hl_lemma_order(nullptr, 1.0, 1, 3, 40, &out.data) == HL_OK);
  json doc = json::parse(out.data);
  CHECK(doc["rows"].size() == 3);

  double alphas[] = {0.5, 1.0};
  Owned out2;
  REQUIRE(hl_lemma_primitive(alphas, 2, 1, 2, 0, 3, &out2.data) == HL_OK);
  json doc2 = json::parse(out2.data);
  CHECK(doc2["rows"].size() == 2 * 2 * 4);
  for (const auto& row : doc2["rows"]) CHECK(row["rel_gap"].get<double>() <= 1e-10);
}

TEST_CASE("bloch through the C surface") {
  hl_symbol* sym = make_scalar({0.0, 1.0});
  double value = 0.0, re = 0.0, im = 0.0;
  REQUIRE(hl_bloch_norm(sym, 64, 128, 2, &value, &re, &im) == HL_OK);
  CHECK(std::abs(value - 4.0 * std::sqrt(3.0) / 9.0) < 1e-6);
  hl_symbol_free(sym);
}
