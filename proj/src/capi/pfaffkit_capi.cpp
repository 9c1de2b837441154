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

#include "pfaffkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "verify.hpp"

struct pk_report {
  pfaffkit::VerificationReport rep;
};

struct pk_ratfn {
  pfaffkit::RationalFunction f;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p)
    std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

/* Runs f, mapping exceptions to status codes and recording the message. */
template <class F>
pk_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return PK_EPARSE;
  } catch (const pfaffkit::ParameterError& e) {
    last_error = e.what();
    return PK_EPARAM;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PK_EINTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PK_EINTERNAL;
  }
}

pk_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return PK_EPARAM;
}

pfaffkit::Partition parse_shape(const char* shape_json) {
  auto shape = pfaffkit::partition_from_json(pfaffkit::Json::parse(shape_json));
  if (shape.size() > 8)
    throw pfaffkit::ParameterError("shapes are limited to size 8");
  return shape;
}

}  // namespace

extern "C" {

const char* pk_version(void) { return "0.1.0"; }

const char* pk_last_error(void) { return last_error.c_str(); }

void pk_string_free(char* s) { std::free(s); }

const char* pk_verification_ids(void) {
  static const std::string ids = [] {
    std::string s;
    for (auto& id : pfaffkit::verification_ids())
      s += (s.empty() ? "" : " ") + id;
    return s;
  }();
  return ids.c_str();
}

pk_status pk_verify(const char* id, const char* params_json, pk_report** out) {
  if (!id || !out)
    return null_arg("id/out");
  *out = nullptr;
  return guarded([&] {
    pfaffkit::Json j = params_json && *params_json ? pfaffkit::Json::parse(params_json) : pfaffkit::Json::object();
    auto params = pfaffkit::VerifyParams::from_json(j);
    auto* r = new pk_report{pfaffkit::run_verification(id, params)};
    *out = r;
    return r->rep.passed() ? PK_OK : PK_FAIL;
  });
}

int pk_report_passed(const pk_report* rep) { return rep && rep->rep.passed() ? 1 : 0; }

pk_status pk_report_json(const pk_report* rep, int with_timing, char** out) {
  if (!rep || !out)
    return null_arg("report/out");
  return guarded([&] {
    *out = dup(rep->rep.to_json(with_timing != 0).dump());
    return PK_OK;
  });
}

pk_status pk_report_text(const pk_report* rep, int with_timing, char** out) {
  if (!rep || !out)
    return null_arg("report/out");
  return guarded([&] {
    *out = dup(rep->rep.to_text(with_timing != 0));
    return PK_OK;
  });
}

void pk_report_free(pk_report* rep) { delete rep; }

pk_status pk_ratfn_parse(const char* json, pk_ratfn** out) {
  if (!json || !out)
    return null_arg("json/out");
  *out = nullptr;
  return guarded([&] {
    *out = new pk_ratfn{pfaffkit::ratfn_from_json(pfaffkit::Json::parse(json))};
    return PK_OK;
  });
}

pk_status pk_ratfn_equal(const pk_ratfn* f, const pk_ratfn* g, int* equal) {
  if (!f || !g || !equal)
    return null_arg("f/g/equal");
  return guarded([&] {
    *equal = pfaffkit::ratfn_equal(f->f, g->f) ? 1 : 0;
    return PK_OK;
  });
}

pk_status pk_ratfn_to_json(const pk_ratfn* f, char** out) {
  if (!f || !out)
    return null_arg("f/out");
  return guarded([&] {
    *out = dup(pfaffkit::to_json(f->f).dump());
    return PK_OK;
  });
}

void pk_ratfn_free(pk_ratfn* f) { delete f; }

pk_status pk_pfaffian_json(const char* matrix_json, char** out) {
  if (!matrix_json || !out)
    return null_arg("matrix/out");
  return guarded([&] {
    auto m = pfaffkit::matrix_from_json(pfaffkit::Json::parse(matrix_json));
    if (m.n() > 12)
      throw pfaffkit::ParameterError("matrices are limited to order 12");
    pfaffkit::Json j;
    j["kind"] = m.antisymmetric() ? "pfaffian" : "hafnian";
    j["n"] = m.n();
    j["value"] = pfaffkit::to_json(m.antisymmetric() ? pfaffkit::pfaffian_recursive(m) : pfaffkit::hafnian(m));
    *out = dup(j.dump());
    return PK_OK;
  });
}

pk_status pk_tableaux_json(const char* shape_json, char** out) {
  if (!shape_json || !out)
    return null_arg("shape/out");
  return guarded([&] {
    pfaffkit::TableauGraph g(parse_shape(shape_json));
    pfaffkit::Json list = pfaffkit::Json::array();
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      pfaffkit::Json t;
      t["rows"] = pfaffkit::to_json(g.vertices()[v]);
      t["rank"] = g.rank(static_cast<int>(v));
      list.push_back(t);
    }
    pfaffkit::Json edges = pfaffkit::Json::array();
    for (auto& e : g.edges())
      edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}, {"rho", e.rho}});
    pfaffkit::Json j;
    j["shape"] = pfaffkit::to_json(g.shape());
    j["count"] = list.size();
    j["tableaux"] = list;
    j["edges"] = edges;
    *out = dup(j.dump());
    return PK_OK;
  });
}

pk_status pk_young_basis_json(const char* shape_json, char** out) {
  if (!shape_json || !out)
    return null_arg("shape/out");
  return guarded([&] {
    auto shape = parse_shape(shape_json);
    pfaffkit::TableauGraph g(shape);
    auto young = pfaffkit::young_basis(g, pfaffkit::SpechtModel::vandermonde());
    pfaffkit::Json basis = pfaffkit::Json::array();
    for (std::size_t v = 0; v < young.size(); ++v)
      basis.push_back({{"tableau", pfaffkit::to_json(g.vertices()[v])},
                       {"rank", g.rank(static_cast<int>(v))},
                       {"young", pfaffkit::to_json(young[v])}});
    pfaffkit::Json j;
    j["shape"] = pfaffkit::to_json(shape);
    j["basis"] = basis;
    j["change_of_basis"] = pfaffkit::to_json(pfaffkit::change_of_basis(shape));
    *out = dup(j.dump());
    return PK_OK;
  });
}

pk_status pk_young_basis_text(const char* shape_json, char** out) {
  if (!shape_json || !out)
    return null_arg("shape/out");
  return guarded([&] {
    auto cob = pfaffkit::change_of_basis(parse_shape(shape_json));
    std::ostringstream os;
    os << "Young basis of " << cob.shape.to_string() << " over the Specht basis\n";
    for (std::size_t u = 0; u < cob.order.size(); ++u) {
      os << "Y" << u << " = ";
      bool first = true;
      for (std::size_t t = 0; t < cob.order.size(); ++t) {
        const auto& c = cob.entries(u, t);
        if (c == 0)
          continue;
        os << (first ? "" : " + ") << pfaffkit::rational_to_string(c) << " D" << t;
        first = false;
      }
      os << "\n";
    }
    os << "tableaux (rows bottom-up):\n";
    for (std::size_t t = 0; t < cob.order.size(); ++t)
      os << "  " << t << ": " << cob.order[t].to_string() << "\n";
    *out = dup(os.str());
    return PK_OK;
  });
}

}  // extern "C"
