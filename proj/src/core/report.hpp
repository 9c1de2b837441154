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

#ifndef PFAFFKIT_REPORT_HPP
#define PFAFFKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace pfaffkit {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // leading term of the nonzero difference, on failure
};

struct VerificationReport {
  std::string theorem;
  Json parameters = Json::object();
  std::vector<Check> checks;
  Json values = Json::object();
  std::vector<std::string> notes;
  std::optional<double> elapsed_seconds;

  bool passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  Json to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;
};

/* Passes iff lhs - rhs vanishes; the witness is the leading term of the numerator. */
Check compare(const std::string& name, const RationalFunction& lhs, const RationalFunction& rhs);
Check expect(const std::string& name, bool ok, const std::string& witness = {});
std::string leading_term_string(const Polynomial& p);

}  // namespace pfaffkit

#endif
