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

#include "json_io.hpp"

#include <sstream>

namespace pfaffkit {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array())
    throw ParameterError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (auto& e : j) {
    if (!e.is_number_integer())
      throw ParameterError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string())
    return rational_from_string(j.get<std::string>());
  throw ParameterError("coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const Term* t : p.ordered_terms()) {
    Json mono = Json::object();
    for (std::size_t k = 0; k < t->mono.length(); ++k)
      mono[VariableTable::instance().get(t->mono.var(k)).name()] = t->mono.exp(k);
    terms.push_back({{"coeff", rational_to_string(t->coeff)}, {"monomial", std::move(mono)}});
  }
  return {{"terms", std::move(terms)}};
}

Json to_json(const RationalFunction& f) { return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

Json to_json(const Permutation& p) { return p.images(); }

Json to_json(const GroupAlgebraElement& e) {
  Json out = Json::array();
  for (auto& [p, c] : e.terms())
    out.push_back({{"perm", p.images()}, {"coeff", rational_to_string(c)}});
  return out;
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const StandardTableau& t) { return t.rows(); }

Json to_json(const ChangeOfBasisMatrix& m) {
  Json order = Json::array(), rows = Json::array();
  for (auto& t : m.order)
    order.push_back(to_json(t));
  for (std::size_t u = 0; u < m.entries.rows(); ++u) {
    Json row = Json::array();
    for (std::size_t t = 0; t < m.entries.cols(); ++t)
      row.push_back(rational_to_string(m.entries(u, t)));
    rows.push_back(std::move(row));
  }
  return {{"shape", to_json(m.shape)}, {"order", std::move(order)}, {"matrix", std::move(rows)}};
}

Json to_json(const ProducerSpec& s) {
  Json j;
  switch (s.kind) {
  case ProducerKind::Generic2xN:
    j["kind"] = "generic2xN";
    break;
  case ProducerKind::Differences:
    j["kind"] = "differences";
    j["family"] = s.family;
    break;
  case ProducerKind::Bracket:
    j["kind"] = "symbolic";
    j["family"] = s.family;
    break;
  case ProducerKind::SymmetricSymbol:
    j["kind"] = "symmetric";
    j["family"] = s.family;
    break;
  case ProducerKind::Cauchy:
    j["kind"] = "cauchy";
    j["family"] = s.family;
    break;
  case ProducerKind::PowerQuotient:
    j["kind"] = "power";
    j["family"] = s.family;
    j["k"] = s.k;
    break;
  case ProducerKind::Schur: {
    j["kind"] = "schur";
    j["v"] = s.v;
    Json letters = Json::array();
    for (auto& v : s.alphabet.letters)
      letters.push_back(v.name());
    j["alphabet"] = std::move(letters);
    j["sign"] = s.sign > 0 ? "+" : "-";
    break;
  }
  }
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string())
    return Polynomial(rational_from_json(j));
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParameterError("polynomial must be an object with a \"terms\" array");
  PolyAccumulator acc;
  for (auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff"))
      throw ParameterError("each term needs a \"coeff\"");
    Polynomial term(rational_from_json(t["coeff"]));
    if (t.contains("monomial")) {
      if (!t["monomial"].is_object())
        throw ParameterError("\"monomial\" must map variable names to exponents");
      for (auto& [name, e] : t["monomial"].items()) {
        if (!e.is_number_integer() || e.get<long>() < 1)
          throw ParameterError("exponent of " + name + " must be a positive integer");
        term *= Polynomial::var(Variable::parse(name)).pow(e.get<unsigned>());
      }
    }
    acc.add(term);
  }
  return acc.finish();
}

RationalFunction ratfn_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) {
    Polynomial den = j.contains("den") ? polynomial_from_json(j["den"]) : Polynomial(1L);
    if (den.is_zero())
      throw ParameterError("zero denominator");
    return RationalFunction(polynomial_from_json(j["num"]), den);
  }
  return RationalFunction(polynomial_from_json(j));
}

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(int_list(j, "permutation"));
  } catch (const std::invalid_argument& e) {
    throw ParameterError(e.what());
  }
}

Partition partition_from_json(const Json& j) { return Partition::from_any_order(int_list(j, "shape")); }

StandardTableau tableau_from_json(const Json& j) {
  if (!j.is_array())
    throw ParameterError("tableau must be a list of rows");
  std::vector<std::vector<int>> rows;
  for (auto& r : j)
    rows.push_back(int_list(r, "tableau row"));
  return StandardTableau(std::move(rows));
}

PairMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParameterError("matrix needs an integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 0 || n > 24)
    throw ParameterError("matrix order must be between 0 and 24");
  bool symmetric = j.value("symmetric", false);
  PairMatrix m(n, !symmetric);
  if (j.contains("entries")) {
    if (!j["entries"].is_array())
      throw ParameterError("\"entries\" must be an array");
    for (auto& e : j["entries"]) {
      if (!e.contains("i") || !e.contains("j") || !e.contains("value"))
        throw ParameterError("each entry needs \"i\", \"j\" and \"value\"");
      m.set(e["i"].get<int>(), e["j"].get<int>(), ratfn_from_json(e["value"]));
    }
  }
  return m;
}

ProducerSpec producer_from_json(const Json& j) {
  if (j.is_string())
    return producer_from_string(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParameterError("producer descriptor needs a \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  auto fam = [&](const char* dflt) { return j.value("family", std::string(dflt)); };
  if (kind == "generic2xN")
    return ProducerSpec::generic2xN();
  if (kind == "differences")
    return ProducerSpec::differences(fam("a"));
  if (kind == "symbolic" || kind == "bracket")
    return ProducerSpec::bracket(fam("z"));
  if (kind == "symmetric")
    return ProducerSpec::symmetric_symbol(fam("g"));
  if (kind == "cauchy")
    return ProducerSpec::cauchy(fam("x"));
  if (kind == "power") {
    if (!j.contains("k") || !j["k"].is_number_integer())
      throw ParameterError("power producer needs an integer \"k\"");
    return ProducerSpec::power_quotient(j["k"].get<int>(), fam("x"));
  }
  if (kind == "schur") {
    std::vector<int> v = j.contains("v") ? int_list(j["v"], "v") : std::vector<int>{};
    Alphabet b;
    if (j.contains("alphabet")) {
      if (!j["alphabet"].is_array())
        throw ParameterError("\"alphabet\" must list variable names");
      for (auto& name : j["alphabet"])
        b.letters.push_back(Variable::parse(name.get<std::string>()));
    }
    std::string sign = j.value("sign", std::string("+"));
    if (sign != "+" && sign != "-")
      throw ParameterError("\"sign\" must be \"+\" or \"-\"");
    return ProducerSpec::schur(std::move(v), std::move(b), sign == "+" ? 1 : -1, fam("x"));
  }
  throw ParameterError("unknown producer kind '" + kind + "'");
}

ProducerSpec producer_from_string(const std::string& s) {
  if (!s.empty() && s.front() == '{')
    return producer_from_json(Json::parse(s));
  std::string head = s, tail;
  if (auto c = s.find(':'); c != std::string::npos) {
    head = s.substr(0, c);
    tail = s.substr(c + 1);
  }
  if (head == "generic2xN" && tail.empty())
    return ProducerSpec::generic2xN();
  if (head == "differences")
    return ProducerSpec::differences(tail.empty() ? "a" : tail);
  if (head == "symbolic" || head == "bracket")
    return ProducerSpec::bracket(tail.empty() ? "z" : tail);
  if (head == "symmetric")
    return ProducerSpec::symmetric_symbol(tail.empty() ? "g" : tail);
  if (head == "cauchy" && tail.empty())
    return ProducerSpec::cauchy();
  if (head == "power") {
    try {
      std::size_t used = 0;
      int k = std::stoi(tail, &used);
      if (used == tail.size())
        return ProducerSpec::power_quotient(k);
    } catch (const std::exception&) {
    }
    throw ParameterError("power producer needs power:K");
  }
  if (head == "schur") {
    // schur:1,1/2+ : index, alphabet size, sign
    int sign = 1, p = 1;
    if (!tail.empty() && (tail.back() == '+' || tail.back() == '-')) {
      sign = tail.back() == '+' ? 1 : -1;
      tail.pop_back();
    }
    if (auto slash = tail.find('/'); slash != std::string::npos) {
      try {
        p = std::stoi(tail.substr(slash + 1));
      } catch (const std::exception&) {
        throw ParameterError("bad alphabet size in '" + s + "'");
      }
      tail = tail.substr(0, slash);
    }
    std::vector<int> v;
    std::stringstream ss(tail);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        v.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParameterError("bad Schur index in '" + s + "'");
      }
    }
    if (p < 0 || p > 8)
      throw ParameterError("alphabet size must be between 0 and 8");
    return ProducerSpec::schur(std::move(v), Alphabet::of("B", p), sign);
  }
  throw ParameterError("unknown producer '" + s + "'");
}

}  // namespace pfaffkit
