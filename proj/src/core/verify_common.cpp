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

#include "verify_common.hpp"

namespace pfaffkit {

namespace {

std::optional<int> int_field(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null())
    return std::nullopt;
  if (!j[key].is_number_integer())
    throw ParameterError(std::string("parameter '") + key + "' must be an integer");
  return j[key].get<int>();
}

}  // namespace

VerifyParams VerifyParams::from_json(const Json& j) {
  if (j.is_null())
    return {};
  if (!j.is_object())
    throw ParameterError("parameters must be a JSON object");
  static const char* known[] = {"n", "m", "r", "k", "p", "alpha", "beta", "shape", "variant", "producers"};
  for (auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto* k : known)
      ok = ok || key == k;
    if (!ok)
      throw ParameterError("unknown parameter '" + key + "'");
  }
  VerifyParams v;
  v.n = int_field(j, "n");
  v.m = int_field(j, "m");
  v.r = int_field(j, "r");
  v.k = int_field(j, "k");
  v.p = int_field(j, "p");
  v.alpha = int_field(j, "alpha");
  v.beta = int_field(j, "beta");
  if (j.contains("shape") && !j["shape"].is_null()) {
    if (!j["shape"].is_array())
      throw ParameterError("parameter 'shape' must be an integer array");
    std::vector<int> s;
    for (auto& e : j["shape"]) {
      if (!e.is_number_integer())
        throw ParameterError("parameter 'shape' must be an integer array");
      s.push_back(e.get<int>());
    }
    v.shape = std::move(s);
  }
  if (j.contains("variant") && !j["variant"].is_null())
    v.variant = j["variant"].get<std::string>();
  if (j.contains("producers")) {
    if (!j["producers"].is_object())
      throw ParameterError("'producers' must map roles to descriptors");
    for (auto& [role, spec] : j["producers"].items())
      v.producers[role] = producer_from_json(spec);
  }
  return v;
}

Json VerifyParams::to_json() const {
  Json j = Json::object();
  auto put = [&](const char* k, const std::optional<int>& x) {
    if (x)
      j[k] = *x;
  };
  put("n", n);
  put("m", m);
  put("r", r);
  put("k", k);
  put("p", p);
  put("alpha", alpha);
  put("beta", beta);
  if (shape)
    j["shape"] = *shape;
  if (variant)
    j["variant"] = *variant;
  if (!producers.empty()) {
    Json ps = Json::object();
    for (auto& [role, s] : producers)
      ps[role] = pfaffkit::to_json(s);
    j["producers"] = std::move(ps);
  }
  return j;
}

int bounded(const std::string& name, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw ParameterError(name + " must be between " + std::to_string(lo) + " and " + std::to_string(hi) +
                         ", got " + std::to_string(v));
  return v;
}

int VerifyParams::even_order(int dflt, int lo, int hi) const {
  if (n && m && *n != 2 * *m)
    throw ParameterError("n must equal 2m");
  int v = n ? *n : (m ? 2 * *m : dflt);
  if (v % 2)
    throw ParameterError("n must be even, got " + std::to_string(v));
  return bounded("n", v, lo, hi);
}

int VerifyParams::half_order(int dflt, int lo, int hi) const {
  if (n && m && *n != 2 * *m)
    throw ParameterError("n must equal 2m");
  if (n && *n % 2)
    throw ParameterError("n must be even, got " + std::to_string(*n));
  int v = m ? *m : (n ? *n / 2 : dflt);
  return bounded("m", v, lo, hi);
}

ProducerSpec VerifyParams::producer(const std::string& role, const ProducerSpec& dflt) const {
  auto it = producers.find(role);
  return it == producers.end() ? dflt : it->second;
}

int rect_sign(int m) { return (m * (m - 1) / 2) % 2 ? -1 : 1; }

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

Polynomial delta_of(const std::vector<int>& letters, const std::string& family, unsigned power) {
  Polynomial p(1L);
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      p *= Polynomial::var(family, {letters[a]}).pow(power) - Polynomial::var(family, {letters[b]}).pow(power);
  return p;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i)
    v.push_back(i);
  return v;
}

Substitution power_substitution(const std::string& family, int n, unsigned e) {
  Substitution s;
  for (int i = 1; i <= n; ++i)
    s.set(Variable{family, {i}}, RationalFunction(Polynomial::var(family, {i}).pow(e)));
  return s;
}

void add_pair_substitution(Substitution& s, const std::string& family, const PairFamily& f) {
  bool symmetric = !f.antisymmetric();
  for (int i = 1; i <= f.n(); ++i)
    for (int j = symmetric ? i : i + 1; j <= f.n(); ++j)
      s.set(Variable{family, {i, j}}, f(i, j));
}

PairFamily plucker_family(const ProducerSpec& spec, int n, const std::string& role) {
  if (spec.kind == ProducerKind::Bracket)
    throw ParameterError("producer for '" + role + "' must satisfy the Plucker relations; bare symbols do not");
  if (!spec.antisymmetric())
    throw ParameterError("producer for '" + role + "' must be antisymmetric, got " + spec.describe());
  return make_plucker(spec, n);
}

RMatrix cross_block(int m, const std::function<RationalFunction(int, int)>& e) {
  RMatrix out(m, std::vector<RationalFunction>(m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      out[i - 1][j - 1] = e(i, m + j);
  return out;
}

std::optional<Rational> proportionality(const Polynomial& num, const Polynomial& base) {
  if (base.is_zero() || num.is_zero())
    return std::nullopt;
  const Term& lt = base.leading_term();
  Rational c = 0;
  for (auto& t : num.terms())
    if (t.mono == lt.mono)
      c = t.coeff / lt.coeff;
  if (c == 0 || num != base.scaled(c))
    return std::nullopt;
  return c;
}

std::optional<Rational> proportionality(const RationalFunction& num, const RationalFunction& base) {
  if (base.is_zero() || num.is_zero())
    return std::nullopt;
  // num / base is constant iff num * den(base) = c * base.num * den(num) over the common factors
  RationalFunction q = num / base;
  RationalFunction inv;
  auto lifted = RationalFunction::over_common_denominator({q, RationalFunction(1L)}, inv);
  return proportionality(lifted[0], lifted[1]);
}

Check symmetry_check(const std::string& name, const RationalFunction& f, int n, const FamilyList& families) {
  for (int i = 1; i < n; ++i) {
    Check c = compare(name, act(Permutation::simple(i, n), f, families), f);
    if (!c.pass) {
      c.witness = "s" + std::to_string(i) + ": " + c.witness;
      return c;
    }
  }
  return Check{name, true, {}};
}

}  // namespace pfaffkit
