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

#include "hankellab/hankellab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/counterexamples.hpp"
#include "core/errors.hpp"
#include "core/functionals.hpp"
#include "core/multipliers.hpp"
#include "core/parallel.hpp"
#include "core/serialization.hpp"
#include "core/spaces.hpp"

using nlohmann::json;

struct hl_symbol {
  hankellab::OperatorSymbol value;
};

struct hl_measure {
  hankellab::GridMeasure value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

hl_status fail(hl_status status, const std::string& message) {
  set_error(message);
  return status;
}

/// Runs the body, translating exceptions into status codes.
template <typename Fn>
hl_status guarded(Fn&& body) {
  try {
    set_error("");
    return body();
  } catch (const hankellab::DimensionError& e) {
    return fail(HL_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const hankellab::ParseError& e) {
    return fail(HL_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HL_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hl_status require(bool condition, const char* message) {
  return condition ? HL_OK : fail(HL_ERR_NULL_POINTER, message);
}

std::vector<int> ladder_from(const int* n_ladder, int ladder_len) {
  if (n_ladder == nullptr || ladder_len <= 0)
    throw std::invalid_argument("empty truncation ladder");
  std::vector<int> out(n_ladder, n_ladder + ladder_len);
  for (int n : out)
    if (n < 0) throw std::invalid_argument("truncations must be >= 0");
  return out;
}

hankellab::Dp1Config dp1_config_from(double alpha, const char* beta_rule) {
  hankellab::Dp1Config cfg;
  cfg.alpha = alpha;
  std::string rule = beta_rule == nullptr ? "default" : beta_rule;
  if (rule == "default") {
    cfg.rule = hankellab::Dp1Config::BetaRule::Default;
  } else if (rule == "zero") {
    cfg.rule = hankellab::Dp1Config::BetaRule::Zero;
  } else if (rule.rfind("power=", 0) == 0) {
    cfg.rule = hankellab::Dp1Config::BetaRule::PowerLaw;
    cfg.power_exponent = std::stod(rule.substr(6));
  } else {
    throw std::invalid_argument("unknown beta rule: " + rule);
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

const char* hl_status_name(hl_status status) {
  switch (status) {
    case HL_OK: return "HL_OK";
    case HL_ERR_NULL_POINTER: return "HL_ERR_NULL_POINTER";
    case HL_ERR_INVALID_ARGUMENT: return "HL_ERR_INVALID_ARGUMENT";
    case HL_ERR_DIMENSION_MISMATCH: return "HL_ERR_DIMENSION_MISMATCH";
    case HL_ERR_PARSE: return "HL_ERR_PARSE";
    case HL_ERR_IO: return "HL_ERR_IO";
    case HL_ERR_NO_MEMORY: return "HL_ERR_NO_MEMORY";
    case HL_ERR_INTERNAL: return "HL_ERR_INTERNAL";
  }
  return "HL_ERR_INTERNAL";
}

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* text) { std::free(text); }

hl_status hl_set_max_threads(int threads) {
  return guarded([&]() -> hl_status {
    if (threads < 0) throw std::invalid_argument("thread cap must be >= 0");
    hankellab::set_max_threads(threads);
    return HL_OK;
  });
}

hl_status hl_symbol_create(int dim, int degree, const double* coeffs, hl_symbol** out) {
  if (hl_status s = require(out != nullptr && coeffs != nullptr, "null argument"); s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<hankellab::Matrix> mats;
    mats.reserve(static_cast<std::size_t>(degree) + 1);
    const double* p = coeffs;
    for (int n = 0; n <= degree; ++n) {
      hankellab::Matrix m(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          m(r, c) = hankellab::Complex(p[0], p[1]);
          p += 2;
        }
      mats.push_back(std::move(m));
    }
    *out = new hl_symbol{hankellab::OperatorSymbol(dim, std::move(mats))};
    return HL_OK;
  });
}

hl_status hl_symbol_from_json(const char* text, hl_symbol** out) {
  if (hl_status s = require(text != nullptr && out != nullptr, "null argument"); s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    *out = new hl_symbol{hankellab::symbol_from_json_text(text)};
    return HL_OK;
  });
}

hl_status hl_symbol_to_json(const hl_symbol* symbol, char** json_out) {
  if (hl_status s = require(symbol != nullptr && json_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    *json_out = copy_string(hankellab::symbol_to_json(symbol->value).dump());
    return HL_OK;
  });
}

hl_status hl_symbol_shape(const hl_symbol* symbol, int* dim, int* degree) {
  if (hl_status s = require(symbol != nullptr, "null symbol"); s != HL_OK) return s;
  if (dim != nullptr) *dim = symbol->value.dim();
  if (degree != nullptr) *degree = symbol->value.degree();
  return HL_OK;
}

void hl_symbol_free(hl_symbol* symbol) { delete symbol; }

hl_status hl_measure_from_json(const char* text, hl_measure** out) {
  if (hl_status s = require(text != nullptr && out != nullptr, "null argument"); s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    *out = new hl_measure{hankellab::measure_from_json_text(text)};
    return HL_OK;
  });
}

void hl_measure_free(hl_measure* measure) { delete measure; }

hl_status hl_norm_chain(const hl_symbol* symbol, double alpha, int n_trunc, char** json_out) {
  if (hl_status s = require(symbol != nullptr && json_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    hankellab::NormChainReport report = hankellab::norm_chain(symbol->value, alpha, n_trunc);
    *json_out = copy_string(hankellab::norm_chain_to_json(report).dump(2));
    return HL_OK;
  });
}

hl_status hl_embedding(const hl_symbol* symbol, const char* mode, double alpha, int n_trunc,
                       char** json_out) {
  if (hl_status s =
          require(symbol != nullptr && mode != nullptr && json_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    const std::string m = mode;
    json doc{{"schema", 1}, {"mode", m}, {"alpha", alpha}, {"N", n_trunc}};
    const hankellab::OperatorSymbol& phi = symbol->value;
    if (m == "anti" || m == "analytic") {
      hankellab::OperatorSymbol psi =
          hankellab::apply_D(hankellab::FracOrder(1.0 + alpha), phi);
      doc["value"] = m == "anti" ? hankellab::gram_embedding_value(psi, n_trunc)
                                 : hankellab::analytic_embedding_value(psi, n_trunc);
    } else if (m == "weak") {
      doc["value"] =
          hankellab::weak_bmoa_value(phi, alpha, hankellab::DiscGrid::standard(), n_trunc);
    } else if (m == "rk") {
      hankellab::RkThesisValues values =
          hankellab::rk_thesis_value(phi, alpha, hankellab::DiscGrid::standard(), n_trunc);
      doc["value"] = values.embedding_variant;
      doc["section_value"] = values.section_variant;
    } else {
      throw std::invalid_argument("unknown embedding mode: " + m);
    }
    *json_out = copy_string(doc.dump(2));
    return HL_OK;
  });
}

hl_status hl_dp1(double alpha, const char* beta_rule, const int* n_ladder, int ladder_len,
                 char** csv_out) {
  if (hl_status s = require(csv_out != nullptr, "null output"); s != HL_OK) return s;
  return guarded([&]() -> hl_status {
    std::vector<int> ladder = ladder_from(n_ladder, ladder_len);
    hankellab::Dp1Config cfg = dp1_config_from(alpha, beta_rule);

    std::vector<hankellab::Dp1SectionNorms> sections =
        hankellab::dp1_section_norms(cfg, ladder);

    hankellab::CsvTable csv;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      cfg.n_trunc = ladder[i];
      hankellab::Dp1ClosedForm closed = hankellab::dp1_closed_form(cfg);
      csv.add_row("dp1.sigma_XD", alpha, ladder[i], sections[i].sigma_xd, "section");
      csv.add_row("dp1.sigma_DX", alpha, ladder[i], sections[i].sigma_dx, "section");
      csv.add_row("dp1.closed_right", alpha, ladder[i], closed.right_norm,
                  "n=" + std::to_string(closed.right_argmax));
      csv.add_row("dp1.left_lower", alpha, ladder[i], closed.left_lower,
                  "k=" + std::to_string(closed.left_argmax));
    }
    *csv_out = copy_string(csv.text());
    return HL_OK;
  });
}

hl_status hl_dp2(double alpha, const int* n_ladder, int ladder_len, const char* family,
                 unsigned long long seed, char** csv_out) {
  if (hl_status s = require(csv_out != nullptr, "null output"); s != HL_OK) return s;
  return guarded([&]() -> hl_status {
    std::vector<int> ladder = ladder_from(n_ladder, ladder_len);
    const std::string family_spec = family == nullptr ? "all" : family;

    hankellab::CsvTable csv;
    for (int n : ladder) {
      std::vector<hankellab::SchurWitness> witnesses = hankellab::dp2_witness_family(n, seed);
      if (family_spec != "all") {
        std::vector<hankellab::SchurWitness> kept;
        for (auto& w : witnesses) {
          std::string base = w.id.substr(0, w.id.find('['));
          if (family_spec.find(base) != std::string::npos) kept.push_back(std::move(w));
        }
        if (kept.empty()) throw std::invalid_argument("family selects no witnesses");
        witnesses = std::move(kept);
      }
      hankellab::Matrix b = hankellab::dp2_schur_matrix(alpha, n);
      hankellab::SchurBound bound = hankellab::schur_lower_bound(b, witnesses);
      csv.add_row("dp2.lower_bound", alpha, n, bound.value, bound.witness);
      for (const auto& [id, ratio] : bound.ratios)
        csv.add_row("dp2.ratio." + id, alpha, n, ratio, id);
    }
    *csv_out = copy_string(csv.text());
    return HL_OK;
  });
}

hl_status hl_lemma_order(const hl_symbol* psi, double alpha, int l_min, int l_max, int n_trunc,
                         char** json_out) {
  if (hl_status s = require(json_out != nullptr, "null output"); s != HL_OK) return s;
  return guarded([&]() -> hl_status {
    if (l_min < 1 || l_max < l_min) throw std::invalid_argument("invalid shift-order range");
    hankellab::OperatorSymbol test = psi == nullptr ? hankellab::lacunary_symbol() : psi->value;
    json rows = json::array();
    for (int l = l_min; l <= l_max; ++l) {
      hankellab::OrderControlResult r = hankellab::order_control_ratio(test, alpha, l, n_trunc);
      rows.push_back(json{{"l", l}, {"sigma", r.sigma}, {"bloch", r.bloch}, {"ratio", r.ratio}});
    }
    json doc{{"schema", 1}, {"alpha", alpha}, {"N", n_trunc}, {"rows", std::move(rows)}};
    *json_out = copy_string(doc.dump(2));
    return HL_OK;
  });
}

hl_status hl_lemma_primitive(const double* alphas, int alpha_count, int l_min, int l_max,
                             int nzero_min, int nzero_max, char** json_out) {
  if (hl_status s = require(alphas != nullptr && json_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    if (alpha_count <= 0) throw std::invalid_argument("empty alpha set");
    if (l_min < 1 || l_max < l_min) throw std::invalid_argument("invalid shift-order range");
    if (nzero_min < 0 || nzero_max < nzero_min)
      throw std::invalid_argument("invalid zero-order range");
    json rows = json::array();
    for (int i = 0; i < alpha_count; ++i)
      for (int l = l_min; l <= l_max; ++l)
        for (int nz = nzero_min; nz <= nzero_max; ++nz) {
          hankellab::PrimitiveNormCheck c = hankellab::primitive_norm_check(alphas[i], l, nz);
          rows.push_back(json{{"alpha", alphas[i]},
                              {"l", l},
                              {"n_zero", nz},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"rel_gap", c.rel_gap}});
        }
    json doc{{"schema", 1}, {"rows", std::move(rows)}};
    *json_out = copy_string(doc.dump(2));
    return HL_OK;
  });
}

hl_status hl_carleson_intensity(const hl_measure* measure, int levels, double* value_out) {
  if (hl_status s = require(measure != nullptr && value_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    *value_out = hankellab::carleson_intensity(measure->value, levels);
    return HL_OK;
  });
}

hl_status hl_bloch_norm(const hl_symbol* symbol, int radial, int angular, int refine,
                        double* value_out, double* argmax_re, double* argmax_im) {
  if (hl_status s = require(symbol != nullptr && value_out != nullptr, "null argument");
      s != HL_OK)
    return s;
  return guarded([&]() -> hl_status {
    hankellab::BlochEstimate est = hankellab::bloch_norm(symbol->value, radial, angular, refine);
    *value_out = est.value;
    if (argmax_re != nullptr) *argmax_re = est.argmax.real();
    if (argmax_im != nullptr) *argmax_im = est.argmax.imag();
    return HL_OK;
  });
}

}  // extern "C"
