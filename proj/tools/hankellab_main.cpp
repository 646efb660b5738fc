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

// Batch experiment runner. Talks to the library exclusively through the C
// API in hankellab/hankellab.h; flag parsing and file plumbing live here.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankellab/hankellab.h"

namespace {

// Exit codes: 0 success, 2 usage, 3 file problems, 4 dimension mismatches,
// 5 invalid values, 1 internal failures.
enum ExitCode {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitFile = 3,
  kExitDimension = 4,
  kExitInvalid = 5,
};

int exit_code_for(hl_status status) {
  switch (status) {
    case HL_OK: return kExitOk;
    case HL_ERR_PARSE:
    case HL_ERR_IO: return kExitFile;
    case HL_ERR_DIMENSION_MISMATCH: return kExitDimension;
    case HL_ERR_INVALID_ARGUMENT: return kExitInvalid;
    default: return kExitInternal;
  }
}

[[noreturn]] void die(hl_status status) {
  std::cerr << "hankellab: " << hl_status_name(status) << ": " << hl_last_error() << "\n";
  std::exit(exit_code_for(status));
}

void check(hl_status status) {
  if (status != HL_OK) die(status);
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hankellab: cannot open " << path << "\n";
    std::exit(kExitFile);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "hankellab: cannot write " << out_path << "\n";
    std::exit(kExitFile);
  }
  out << content;
}

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { hl_string_free(data); }
  std::string str() const { return data == nullptr ? std::string() : std::string(data); }
};

struct OwnedSymbol {
  hl_symbol* handle = nullptr;
  ~OwnedSymbol() { hl_symbol_free(handle); }
};

struct OwnedMeasure {
  hl_measure* handle = nullptr;
  ~OwnedMeasure() { hl_measure_free(handle); }
};

void load_symbol(const std::string& path, OwnedSymbol& sym) {
  check(hl_symbol_from_json(read_file_or_die(path).c_str(), &sym.handle));
}

std::vector<int> parse_ladder(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      std::cerr << "hankellab: bad ladder entry '" << item << "'\n";
      std::exit(kExitInvalid);
    }
  }
  if (out.empty()) {
    std::cerr << "hankellab: empty truncation ladder\n";
    std::exit(kExitInvalid);
  }
  return out;
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& spec) {
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(spec);
      return {v, v};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
  } catch (...) {
    std::cerr << "hankellab: bad range '" << spec << "'\n";
    std::exit(kExitInvalid);
  }
}

std::vector<double> parse_doubles(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      std::cerr << "hankellab: bad number '" << item << "'\n";
      std::exit(kExitInvalid);
    }
  }
  return out;
}

std::string timestamped(const std::string& json_text, bool with_timestamp) {
  if (!with_timestamp) return json_text;
  nlohmann::json doc = nlohmann::json::parse(json_text);
  doc["timestamp"] = static_cast<long long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  return doc.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hankellab: finite-truncation experiments for vector-valued Hankel operators"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  unsigned long long seed = 1;
  int threads = 0;
  bool no_timestamp = false;
  app.add_option("--seed", seed, "seed for every randomised experiment");
  app.add_option("--threads", threads, "worker thread cap (default: HANKELLAB_THREADS or hardware)");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from JSON reports");

  // norm-chain
  auto* chain = app.add_subcommand("norm-chain", "six comparable norms of a symbol");
  std::string chain_file, chain_out;
  double chain_alpha = 1.0;
  int chain_n = 32;
  chain->add_option("symbol", chain_file, "symbol JSON file")->required();
  chain->add_option("--alpha", chain_alpha, "fractional order, > 0");
  chain->add_option("--n", chain_n, "truncation order");
  chain->add_option("--out", chain_out, "output path (default stdout)");

  // embedding
  auto* embed = app.add_subcommand("embedding", "Carleson-type embedding functionals");
  std::string embed_file, embed_out, embed_mode = "anti";
  double embed_alpha = 1.0;
  int embed_n = 32;
  embed->add_option("symbol", embed_file, "symbol JSON file")->required();
  embed->add_option("--mode", embed_mode, "analytic|anti|weak|rk");
  embed->add_option("--alpha", embed_alpha, "fractional order");
  embed->add_option("--n", embed_n, "truncation order");
  embed->add_option("--out", embed_out, "output path (default stdout)");

  // dp1
  auto* dp1 = app.add_subcommand("dp1", "one-sided boundedness growth experiment");
  std::string dp1_ladder = "63,255,1023,4095", dp1_rule = "default", dp1_out;
  double dp1_alpha = 1.0;
  dp1->add_option("--alpha", dp1_alpha, "fractional order, > 0");
  dp1->add_option("--n-ladder", dp1_ladder, "comma-separated truncations");
  dp1->add_option("--beta-rule", dp1_rule, "default | power=<q> | zero");
  dp1->add_option("--out", dp1_out, "output CSV path (default stdout)");

  // dp2
  auto* dp2 = app.add_subcommand("dp2", "Schur multiplier lower-bound experiment");
  std::string dp2_ladder = "16,64,256,1024", dp2_family = "all", dp2_out;
  double dp2_alpha = 1.0;
  dp2->add_option("--alpha", dp2_alpha, "fractional order, > 0");
  dp2->add_option("--n-ladder", dp2_ladder, "comma-separated truncations");
  dp2->add_option("--family", dp2_family, "witness family: all or subset");
  dp2->add_option("--out", dp2_out, "output CSV path (default stdout)");

  // lemma-order
  auto* order = app.add_subcommand("lemma-order", "order-control ratios across shift orders");
  std::string order_psi = "lacunary", order_lrange = "1..12", order_out;
  double order_alpha = 1.0;
  int order_n = 512;
  order->add_option("--alpha", order_alpha, "fractional order, > 0");
  order->add_option("--l-range", order_lrange, "shift order range a..b");
  order->add_option("--psi", order_psi, "lacunary or a symbol JSON file");
  order->add_option("--n", order_n, "truncation order");
  order->add_option("--out", order_out, "output path (default stdout)");

  // lemma-primitive
  auto* prim = app.add_subcommand("lemma-primitive", "primitive-bound sharpness checks");
  std::string prim_alphas = "0.5,1,2", prim_lrange = "1..6", prim_nrange = "0..32", prim_out;
  prim->add_option("--alpha-set", prim_alphas, "comma-separated orders, each > 0");
  prim->add_option("--l-range", prim_lrange, "shift order range a..b");
  prim->add_option("--nzero-range", prim_nrange, "zero order range a..b");
  prim->add_option("--out", prim_out, "output path (default stdout)");

  // carleson
  auto* carleson = app.add_subcommand("carleson", "box intensity of an atomic measure");
  std::string carleson_file, carleson_out;
  int carleson_levels = 10;
  carleson->add_option("measure", carleson_file, "measure JSON file")->required();
  carleson->add_option("--levels", carleson_levels, "dyadic arc levels, >= 4");
  carleson->add_option("--out", carleson_out, "output path (default stdout)");

  // bloch
  auto* bloch = app.add_subcommand("bloch", "Bloch norm of a symbol");
  std::string bloch_file, bloch_out;
  int bloch_radial = 64, bloch_angular = 128, bloch_refine = 2;
  bloch->add_option("symbol", bloch_file, "symbol JSON file")->required();
  bloch->add_option("--radial", bloch_radial, "radial grid levels");
  bloch->add_option("--angular", bloch_angular, "angular grid points");
  bloch->add_option("--refine", bloch_refine, "refinement rounds");
  bloch->add_option("--out", bloch_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("HANKELLAB_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) check(hl_set_max_threads(threads));

  if (chain->parsed()) {
    OwnedSymbol sym;
    load_symbol(chain_file, sym);
    OwnedString out;
    check(hl_norm_chain(sym.handle, chain_alpha, chain_n, &out.data));
    emit(chain_out, timestamped(out.str(), !no_timestamp));
  } else if (embed->parsed()) {
    OwnedSymbol sym;
    load_symbol(embed_file, sym);
    OwnedString out;
    check(hl_embedding(sym.handle, embed_mode.c_str(), embed_alpha, embed_n, &out.data));
    emit(embed_out, timestamped(out.str(), !no_timestamp));
  } else if (dp1->parsed()) {
    std::vector<int> ladder = parse_ladder(dp1_ladder);
    OwnedString out;
    check(hl_dp1(dp1_alpha, dp1_rule.c_str(), ladder.data(),
                 static_cast<int>(ladder.size()), &out.data));
    emit(dp1_out, out.str());
  } else if (dp2->parsed()) {
    std::vector<int> ladder = parse_ladder(dp2_ladder);
    OwnedString out;
    check(hl_dp2(dp2_alpha, ladder.data(), static_cast<int>(ladder.size()),
                 dp2_family.c_str(), seed, &out.data));
    emit(dp2_out, out.str());
  } else if (order->parsed()) {
    auto [l_min, l_max] = parse_range(order_lrange);
    OwnedSymbol sym;
    if (order_psi != "lacunary") load_symbol(order_psi, sym);
    OwnedString out;
    check(hl_lemma_order(sym.handle, order_alpha, l_min, l_max, order_n, &out.data));
    emit(order_out, timestamped(out.str(), !no_timestamp));
  } else if (prim->parsed()) {
    std::vector<double> alphas = parse_doubles(prim_alphas);
    auto [l_min, l_max] = parse_range(prim_lrange);
    auto [nz_min, nz_max] = parse_range(prim_nrange);
    OwnedString out;
    check(hl_lemma_primitive(alphas.data(), static_cast<int>(alphas.size()), l_min, l_max,
                             nz_min, nz_max, &out.data));
    emit(prim_out, timestamped(out.str(), !no_timestamp));
  } else if (carleson->parsed()) {
    OwnedMeasure mu;
    check(hl_measure_from_json(read_file_or_die(carleson_file).c_str(), &mu.handle));
    double value = 0.0;
    check(hl_carleson_intensity(mu.handle, carleson_levels, &value));
    nlohmann::json doc{{"schema", 1}, {"levels", carleson_levels}, {"intensity", value}};
    emit(carleson_out, timestamped(doc.dump(2), !no_timestamp));
  } else if (bloch->parsed()) {
    OwnedSymbol sym;
    load_symbol(bloch_file, sym);
    double value = 0.0, re = 0.0, im = 0.0;
    check(hl_bloch_norm(sym.handle, bloch_radial, bloch_angular, bloch_refine, &value, &re, &im));
    nlohmann::json doc{{"schema", 1}, {"value", value}, {"argmax", {{"re", re}, {"im", im}}}};
    emit(bloch_out, timestamped(doc.dump(2), !no_timestamp));
  }
  return kExitOk;
}
