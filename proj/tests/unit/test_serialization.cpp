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

#include <doctest.h>

#include "core/serialization.hpp"
#include "oracles.hpp"

using namespace hankellab;
using nlohmann::json;

TEST_CASE("symbol documents round-trip with the exact field names") {
  Rng rng(71);
  OperatorSymbol phi = oracles::random_symbol(rng, 3, 4);
  json doc = symbol_to_json(phi);
  CHECK(doc.contains("dim"));
  CHECK(doc.contains("degree"));
  CHECK(doc.contains("coeffs"));

  OperatorSymbol back = symbol_from_json(doc);
  CHECK(back.dim() == 3);
  CHECK(back.degree() == 4);
  for (int n = 0; n <= 4; ++n)
    CHECK((back.coeff(n) - phi.coeff(n)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vector documents round-trip") {
  Rng rng(72);
  VectorPolynomial f = oracles::random_vector_poly(rng, 2, 3);
  VectorPolynomial back = vector_from_json(vector_to_json(f));
  for (int n = 0; n <= 3; ++n)
    CHECK((back.coeff(n) - f.coeff(n)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("measure documents round-trip") {
  GridMeasure mu({{Complex(0.25, -0.5), 2.0}, {Complex(0.0, 0.0), 0.5}});
  GridMeasure back = measure_from_json(measure_to_json(mu));
  REQUIRE(back.atoms.size() == 2);
  CHECK(back.atoms[0].point == mu.atoms[0].point);
  CHECK(back.atoms[1].mass == 0.5);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(symbol_from_json_text("not json at all"), ParseError);
  CHECK_THROWS_AS(symbol_from_json_text(R"({"dim": 1, "coeffs": []})"), ParseError);
  CHECK_THROWS_AS(symbol_from_json_text(R"({"dim": 1, "degree": 1, "coeffs": [[[ [0,0] ]]]})"),
                  ParseError);  // wrong number of coefficients
  CHECK_THROWS_AS(symbol_from_json_text(R"({"dim": 2, "degree": 0, "coeffs": [[[ [0,0] ]]]})"),
                  ParseError);  // wrong row count
  CHECK_THROWS_AS(measure_from_json_text(R"({"atoms": [{"re": 2.0, "im": 0, "mass": 1}]})"),
                  ParseError);  // atom outside the disc
  CHECK_THROWS_AS(vector_from_json_text(R"({"dim": -1, "degree": 0, "coeffs": [[ [0,0] ]]})"),
                  ParseError);
}

TEST_CASE("norm chain report serialises with schema marker") {
  NormChainReport report;
  report.alpha = 1.0;
  report.values = {1, 2, 3, 4, 5, 6};
  report.ratios.push_back({1, 2, 0.5});
  json doc = norm_chain_to_json(report);
  CHECK(doc["schema"] == 1);
  CHECK(doc["values"].size() == 6);
  CHECK(doc["ratios"][0]["ratio"] == 0.5);
}

TEST_CASE("csv tables have the fixed header and deterministic formatting") {
  CsvTable t;
  t.add_row("exp.a", 0.5, 16, 1.25, "w");
  CsvTable u;
  u.add_row("exp.a", 0.5, 16, 1.25, "w");
  CHECK(t.text() == u.text());
  CHECK(t.text().rfind("experiment,alpha,N,value,witness\n", 0) == 0);
  CHECK(t.text().find("exp.a,0.5,16,1.25,w\n") != std::string::npos);
}
