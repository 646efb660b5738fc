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

#ifndef HANKELLAB_CORE_SERIALIZATION_HPP
#define HANKELLAB_CORE_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "core/coefficients.hpp"
#include "core/functionals.hpp"
#include "core/spaces.hpp"

namespace hankellab {

/// Symbol document: {"dim": d, "degree": D, "coeffs": [n][row][col] = [re, im]}.
nlohmann::json symbol_to_json(const OperatorSymbol& phi);
OperatorSymbol symbol_from_json(const nlohmann::json& doc);
OperatorSymbol symbol_from_json_text(const std::string& text);

/// Test-function document: same fields with "coeffs": [n][row] = [re, im].
nlohmann::json vector_to_json(const VectorPolynomial& f);
VectorPolynomial vector_from_json(const nlohmann::json& doc);
VectorPolynomial vector_from_json_text(const std::string& text);

/// Measure document: {"atoms": [{"re": x, "im": y, "mass": m}, ...]}.
nlohmann::json measure_to_json(const GridMeasure& mu);
GridMeasure measure_from_json(const nlohmann::json& doc);
GridMeasure measure_from_json_text(const std::string& text);

/// Norm-chain report: {"schema": 1, alpha, beta, N, d, values, ratios, ...}.
nlohmann::json norm_chain_to_json(const NormChainReport& report);

/// Growth-experiment CSV with the fixed header
/// "experiment,alpha,N,value,witness" and one row per (N, quantity).
class CsvTable {
 public:
  CsvTable();
  void add_row(const std::string& experiment, double alpha, int n, double value,
               const std::string& witness);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

/// Shortest round-trip decimal form of a double; deterministic across runs.
std::string format_double(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hankellab

#endif
