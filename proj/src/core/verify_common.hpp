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

#ifndef PFAFFKIT_VERIFY_COMMON_HPP
#define PFAFFKIT_VERIFY_COMMON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace pfaffkit {

struct VerifyParams {
  std::optional<int> n, m, r, k, p, alpha, beta;
  std::optional<std::vector<int>> shape;
  std::optional<std::string> variant;
  std::map<std::string, ProducerSpec> producers;

  static VerifyParams from_json(const Json& j);
  Json to_json() const;

  int get(const std::optional<int>& v, int dflt) const { return v ? *v : dflt; }
  /* n taken from n, or from m as 2m; checked even and within [lo, hi]. */
  int even_order(int dflt, int lo, int hi) const;
  /* m taken from m, or n/2. */
  int half_order(int dflt, int lo, int hi) const;
  ProducerSpec producer(const std::string& role, const ProducerSpec& dflt) const;
};

int bounded(const std::string& name, int v, int lo, int hi);

/* (-1)^(m(m-1)/2) */
int rect_sign(int m);
Rational factorial(int n);

/* Product over i < j of the letters' differences, for the listed letters. */
Polynomial delta_of(const std::vector<int>& letters, const std::string& family = "x", unsigned power = 1);
std::vector<int> range(int from, int to);

/* family_i -> family_i^e */
Substitution power_substitution(const std::string& family, int n, unsigned e);
/* Bracket symbols family[i,j] -> f(i, j), 1 <= i <= j <= n. */
void add_pair_substitution(Substitution& s, const std::string& family, const PairFamily& f);

/* Requires a Plucker producer: antisymmetric and not bare symbols. */
PairFamily plucker_family(const ProducerSpec& spec, int n, const std::string& role);

/* Cross block (e(i, j))_{1 <= i <= m < j <= 2m}. */
RMatrix cross_block(int m, const std::function<RationalFunction(int, int)>& e);

/* num = c * base for a nonzero rational c, if any. */
std::optional<Rational> proportionality(const Polynomial& num, const Polynomial& base);
std::optional<Rational> proportionality(const RationalFunction& num, const RationalFunction& base);

/* Checks invariance of f under s_1..s_{n-1} acting on the listed families. */
Check symmetry_check(const std::string& name, const RationalFunction& f, int n, const FamilyList& families);

}  // namespace pfaffkit

#endif
