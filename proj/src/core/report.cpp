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

#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace pfaffkit {

bool VerificationReport::passed() const {
  if (checks.empty())
    return false;
  for (auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j;
  j["theorem"] = theorem;
  j["verdict"] = passed() ? "pass" : "fail";
  j["parameters"] = parameters;
  Json cs = Json::array();
  for (auto& c : checks) {
    Json e = {{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}};
    if (!c.pass && !c.witness.empty())
      e["witness"] = c.witness;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (!values.empty())
    j["values"] = values;
  if (!notes.empty())
    j["notes"] = notes;
  if (with_timing && elapsed_seconds)
    j["elapsed_seconds"] = *elapsed_seconds;
  return j;
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream o;
  o << theorem << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  o << "  parameters: " << parameters.dump() << "\n";
  for (auto& c : checks) {
    o << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.witness.empty())
      o << "  (witness " << c.witness << ")";
    o << "\n";
  }
  for (auto& [k, v] : values.items())
    o << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (auto& n : notes)
    o << "  note: " << n << "\n";
  if (with_timing && elapsed_seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *elapsed_seconds);
    o << "  elapsed: " << buf << " s\n";
  }
  return o.str();
}

std::string leading_term_string(const Polynomial& p) {
  if (p.is_zero())
    return "0";
  Polynomial lt = Polynomial::from_terms({p.leading_term()});
  return lt.to_string();
}

Check compare(const std::string& name, const RationalFunction& lhs, const RationalFunction& rhs) {
  Polynomial d = lhs.difference_numerator(rhs);
  Check c{name, d.is_zero(), {}};
  if (!c.pass)
    c.witness = leading_term_string(d);
  return c;
}

Check expect(const std::string& name, bool ok, const std::string& witness) { return Check{name, ok, ok ? "" : witness}; }

}  // namespace pfaffkit
