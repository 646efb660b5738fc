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

#include "core/serialization.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hankellab {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::pair<int, int> read_header(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("degree") ||
      !doc.contains("coeffs"))
    throw ParseError("document must contain dim, degree and coeffs");
  if (!doc["dim"].is_number_integer() || !doc["degree"].is_number_integer())
    throw ParseError("dim and degree must be integers");
  int dim = doc["dim"].get<int>();
  int degree = doc["degree"].get<int>();
  if (dim <= 0) throw ParseError("dim must be positive");
  if (degree < 0) throw ParseError("degree must be >= 0");
  const json& coeffs = doc["coeffs"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
    throw ParseError("coeffs must be an array of exactly degree + 1 entries");
  return {dim, degree};
}

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON document");
  return doc;
}

}  // namespace

json symbol_to_json(const OperatorSymbol& phi) {
  json coeffs = json::array();
  for (int n = 0; n <= phi.degree(); ++n) {
    json rows = json::array();
    for (int r = 0; r < phi.dim(); ++r) {
      json cols = json::array();
      for (int c = 0; c < phi.dim(); ++c) cols.push_back(complex_to_json(phi.coeff(n)(r, c)));
      rows.push_back(std::move(cols));
    }
    coeffs.push_back(std::move(rows));
  }
  return json{{"dim", phi.dim()}, {"degree", phi.degree()}, {"coeffs", std::move(coeffs)}};
}

OperatorSymbol symbol_from_json(const json& doc) {
  auto [dim, degree] = read_header(doc);
  std::vector<Matrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (const json& entry : doc["coeffs"]) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != dim)
      throw ParseError("symbol coefficient must have dim rows");
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const json& row = entry[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw ParseError("symbol coefficient row must have dim entries");
      for (int c = 0; c < dim; ++c)
        m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    coeffs.push_back(std::move(m));
  }
  return OperatorSymbol(dim, std::move(coeffs));
}

OperatorSymbol symbol_from_json_text(const std::string& text) {
  return symbol_from_json(parse_text(text));
}

json vector_to_json(const VectorPolynomial& f) {
  json coeffs = json::array();
  for (int n = 0; n <= f.degree(); ++n) {
    json rows = json::array();
    for (int r = 0; r < f.dim(); ++r) rows.push_back(complex_to_json(f.coeff(n)(r)));
    coeffs.push_back(std::move(rows));
  }
  return json{{"dim", f.dim()}, {"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

VectorPolynomial vector_from_json(const json& doc) {
  auto [dim, degree] = read_header(doc);
  std::vector<CVector> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (const json& entry : doc["coeffs"]) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != dim)
      throw ParseError("vector coefficient must have dim rows");
    CVector v(dim);
    for (int r = 0; r < dim; ++r) v(r) = complex_from_json(entry[static_cast<std::size_t>(r)]);
    coeffs.push_back(std::move(v));
  }
  return VectorPolynomial(dim, std::move(coeffs));
}

VectorPolynomial vector_from_json_text(const std::string& text) {
  return vector_from_json(parse_text(text));
}

json measure_to_json(const GridMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back(json{{"re", a.point.real()}, {"im", a.point.imag()}, {"mass", a.mass}});
  return json{{"atoms", std::move(atoms)}};
}

GridMeasure measure_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
    throw ParseError("measure document must contain an atoms array");
  std::vector<GridMeasure::Atom> atoms;
  for (const json& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("re") || !a.contains("im") || !a.contains("mass"))
      throw ParseError("atom must contain re, im and mass");
    if (!a["re"].is_number() || !a["im"].is_number() || !a["mass"].is_number())
      throw ParseError("atom fields must be numbers");
    atoms.push_back({Complex(a["re"].get<double>(), a["im"].get<double>()),
                     a["mass"].get<double>()});
  }
  try {
    return GridMeasure(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GridMeasure measure_from_json_text(const std::string& text) {
  return measure_from_json(parse_text(text));
}

json norm_chain_to_json(const NormChainReport& report) {
  json ratios = json::array();
  for (const PairRatio& r : report.ratios)
    ratios.push_back(json{{"i", r.numerator}, {"j", r.denominator}, {"ratio", r.ratio}});
  return json{{"schema", 1},
              {"alpha", report.alpha},
              {"beta", report.beta},
              {"N", report.n_requested},
              {"N_used", report.n_used},
              {"d", report.dim},
              {"degree", report.degree},
              {"values", report.values},
              {"raw_anti_embedding", report.raw_anti_embedding},
              {"eq2_conversion", report.eq2_conversion},
              {"ratios", std::move(ratios)}};
}

CsvTable::CsvTable() : text_("experiment,alpha,N,value,witness\n") {}

void CsvTable::add_row(const std::string& experiment, double alpha, int n, double value,
                       const std::string& witness) {
  text_ += experiment;
  text_ += ',';
  text_ += format_double(alpha);
  text_ += ',';
  text_ += std::to_string(n);
  text_ += ',';
  text_ += format_double(value);
  text_ += ',';
  text_ += witness;
  text_ += '\n';
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace hankellab
