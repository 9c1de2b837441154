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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfaffkit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitParam = 2;
constexpr int kExitInternal = 3;

int exit_code(pk_status s) {
  switch (s) {
  case PK_OK:
    return 0;
  case PK_FAIL:
    return 1;
  case PK_EPARAM:
  case PK_EPARSE:
    return kExitParam;
  default:
    return kExitInternal;
  }
}

int report_error(pk_status s) {
  std::cerr << "pfaffkit: " << pk_last_error() << "\n";
  return exit_code(s);
}

/* Owns a string returned by the library. */
struct LibString {
  char* p = nullptr;
  ~LibString() { pk_string_free(p); }
};

/* "3,3", "3 3" or "[3,3]" -> "[3,3]" */
std::string shape_json(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',')
      c = ' ';
  std::istringstream in(s);
  Json parts = Json::array();
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw CLI::ValidationError("--shape", "bad part '" + tok + "'");
    parts.push_back(v);
  }
  return parts.dump();
}

struct VerifyOptions {
  std::string id;
  std::optional<int> n, m, r, k, p, alpha, beta;
  std::string shape, variant, format = "json";
  std::vector<std::string> producers;
  bool timing = false;
};

int run_verify(const VerifyOptions& o) {
  Json params = Json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v)
      params[key] = *v;
  };
  put("n", o.n);
  put("m", o.m);
  put("r", o.r);
  put("k", o.k);
  put("p", o.p);
  put("alpha", o.alpha);
  put("beta", o.beta);
  if (!o.shape.empty())
    params["shape"] = Json::parse(shape_json(o.shape));
  if (!o.variant.empty())
    params["variant"] = o.variant;
  for (const auto& spec : o.producers) {
    // role=descriptor; a bare descriptor names the z role
    std::string role = "z", desc = spec;
    auto eq = spec.find('=');
    if (spec.front() != '{' && eq != std::string::npos) {
      role = spec.substr(0, eq);
      desc = spec.substr(eq + 1);
    }
    params["producers"][role] = desc.front() == '{' ? Json::parse(desc) : Json(desc);
  }
  pk_report* rep = nullptr;
  pk_status st = pk_verify(o.id.c_str(), params.dump().c_str(), &rep);
  if (st != PK_OK && st != PK_FAIL)
    return report_error(st);
  LibString out;
  pk_status fs = o.format == "text" ? pk_report_text(rep, o.timing, &out.p) : pk_report_json(rep, o.timing, &out.p);
  pk_report_free(rep);
  if (fs != PK_OK)
    return report_error(fs);
  std::cout << out.p << (o.format == "text" ? "" : "\n");
  return exit_code(st);
}

int run_pfaffian(const std::string& file, const std::string& format) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "pfaffkit: cannot read " << file << "\n";
    return kExitParam;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  LibString out;
  pk_status st = pk_pfaffian_json(buf.str().c_str(), &out.p);
  if (st != PK_OK)
    return report_error(st);
  if (format == "json") {
    std::cout << out.p << "\n";
    return 0;
  }
  Json j = Json::parse(out.p);
  std::cout << j["kind"].get<std::string>() << " of order " << j["n"] << ":\n";
  const Json& v = j["value"];
  auto poly_text = [](const Json& p) {
    std::string s;
    for (auto& t : p["terms"]) {
      std::string mono;
      for (auto& [name, e] : t["monomial"].items())
        mono += (mono.empty() ? "" : "*") + name + (e.get<int>() > 1 ? "^" + std::to_string(e.get<int>()) : "");
      std::string c = t["coeff"].get<std::string>();
      if (!s.empty())
        s += c.front() == '-' ? " - " : " + ";
      else if (c.front() == '-')
        s += "-";
      if (c.front() == '-')
        c.erase(0, 1);
      s += mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
    }
    return s.empty() ? std::string("0") : s;
  };
  std::cout << "  " << poly_text(v["num"]);
  std::string den = poly_text(v["den"]);
  if (den != "1")
    std::cout << "\n  / (" << den << ")";
  std::cout << "\n";
  return 0;
}

int run_json_call(pk_status (*fn)(const char*, char**), const std::string& shape) {
  LibString out;
  pk_status st = fn(shape_json(shape).c_str(), &out.p);
  if (st != PK_OK)
    return report_error(st);
  std::cout << out.p << (fn == pk_young_basis_text ? "" : "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pfaffian, determinant and symmetric-group identity checks"};
  app.set_version_flag("--version", std::string(pk_version()));
  app.require_subcommand(1);

  VerifyOptions vo;
  std::string ids = pk_verification_ids();
  auto* verify = app.add_subcommand("verify", "run one verification (ids: " + ids + ")");
  verify->add_option("id", vo.id, "verification id")->required();
  verify->add_option("--n", vo.n, "matrix order");
  verify->add_option("--m", vo.m, "half order");
  verify->add_option("--r", vo.r);
  verify->add_option("--k", vo.k);
  verify->add_option("--p", vo.p, "alphabet size or rectangle height");
  verify->add_option("--alpha", vo.alpha);
  verify->add_option("--beta", vo.beta);
  verify->add_option("--shape", vo.shape, "partition or index vector, e.g. 3,3");
  verify->add_option("--variant", vo.variant, "identity variant (cd: rect|staircase)");
  verify->add_option("--producer", vo.producers, "producer as role=SPEC; repeatable")->take_all();
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", vo.timing, "include elapsed time");

  std::string file, pformat = "json";
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian (or hafnian) of a matrix file");
  pf->add_option("file", file)->required();
  pf->add_option("--format", pformat)->check(CLI::IsMember({"json", "text"}));

  std::string yshape, yformat = "json";
  auto* yb = app.add_subcommand("young-basis", "Young basis of a shape on the Specht basis");
  yb->add_option("--shape", yshape)->required();
  yb->add_option("--format", yformat)->check(CLI::IsMember({"json", "text", "latex-free-text"}));

  std::string tshape;
  auto* tab = app.add_subcommand("tableaux", "standard tableaux of a shape with graph ranks");
  tab->add_option("--shape", tshape)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParam;
  }

  try {
    if (*verify)
      return run_verify(vo);
    if (*pf)
      return run_pfaffian(file, pformat);
    if (*yb)
      return run_json_call(yformat == "json" ? pk_young_basis_json : pk_young_basis_text, yshape);
    if (*tab)
      return run_json_call(pk_tableaux_json, tshape);
  } catch (const std::exception& e) {
    std::cerr << "pfaffkit: " << e.what() << "\n";
    return kExitParam;
  }
  return kExitParam;
}
