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

#include "symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pfaffkit {

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v])
      throw ParameterError("not a permutation: " + to_string());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n)
    throw ParameterError("s_" + std::to_string(i) + " does not exist in degree " + std::to_string(n));
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 0; i < n(); ++i)
    v[images_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j])
        ++inv;
  return inv;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n())
    throw ParameterError("degree mismatch in compose");
  std::vector<int> v(s.n());
  for (int i = 1; i <= s.n(); ++i)
    v[i - 1] = s(t(i));
  return Permutation(std::move(v));
}

// ----------------------------------------------------- GroupAlgebraElement

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, const Rational& c) : n_(p.n()) { add(p, c); }

GroupAlgebraElement GroupAlgebraElement::simple_plus(int i, const Rational& c, int n) {
  GroupAlgebraElement e(Permutation::simple(i, n));
  e.add(Permutation::identity(n), c);
  return e;
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
  if (p.n() != n_)
    throw ParameterError("degree mismatch in group algebra");
  if (c == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      coeffs_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  if (o.n_ != n_)
    throw ParameterError("degree mismatch in group algebra");
  GroupAlgebraElement r = *this;
  for (auto& [p, c] : o.coeffs_)
    r.add(p, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  return *this + o.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement r(n_);
  if (c == 0)
    return r;
  for (auto& [p, x] : coeffs_)
    r.coeffs_.emplace(p, x * c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const { return convolve(*this, o); }

std::string GroupAlgebraElement::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : coeffs_) {
    Rational a = c;
    bool neg = a < 0;
    if (neg)
      a = -a;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (a != 1)
      os << a.get_str() << '*';
    os << p.to_string();
  }
  return os.str();
}

GroupAlgebraElement convolve(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  if (u.n() != v.n())
    throw ParameterError("degree mismatch in convolve");
  GroupAlgebraElement r(u.n());
  for (auto& [p, a] : u.terms())
    for (auto& [q, b] : v.terms())
      r.add(compose(q, p), a * b);
  return r;
}

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

}  // namespace

GroupAlgebraElement nabla(int n) {
  if (n < 1)
    throw ParameterError("nabla needs n >= 1");
  GroupAlgebraElement e(n);
  Rational c = 1 / factorial(n);
  for (auto& p : Permutation::all(n))
    e.add(p, p.sign() > 0 ? c : Rational(-c));
  return e;
}

GroupAlgebraElement box(int n) {
  if (n < 1)
    throw ParameterError("box needs n >= 1");
  GroupAlgebraElement e(n);
  Rational c = 1 / factorial(n);
  for (auto& p : Permutation::all(n))
    e.add(p, c);
  return e;
}

GroupAlgebraElement theta(int n) {
  if (n < 2 || n % 2)
    throw ParameterError("theta needs an even degree");
  int m = n / 2;
  GroupAlgebraElement e(n);
  for (auto& blocks : Permutation::all(m)) {
    std::vector<int> v;
    for (int b = 1; b <= m; ++b) {
      v.push_back(2 * blocks(b) - 1);
      v.push_back(2 * blocks(b));
    }
    e.add(Permutation(v), 1);
  }
  return e;
}

GroupAlgebraElement sign_twist(const GroupAlgebraElement& e) {
  GroupAlgebraElement r(e.n());
  for (auto& [p, c] : e.terms())
    r.add(p, p.sign() > 0 ? c : Rational(-c));
  return r;
}

// ------------------------------------------------------------------ action

namespace {

struct MovingVar {
  VarId id;
  bool moves;
  Variable var;
  FamilyKind kind;
};

std::vector<MovingVar> classify(const std::vector<VarId>& vars, const FamilyList& families) {
  auto& table = VariableTable::instance();
  std::vector<MovingVar> out;
  for (VarId v : vars) {
    Variable var = table.get(v);
    bool moves = std::find(families.begin(), families.end(), var.family) != families.end();
    out.push_back({v, moves, var, table.kind(var.family)});
  }
  return out;
}

/* Image of each variable under sigma with the sign picked up by brackets. */
std::vector<std::pair<VarId, int>> images(const std::vector<MovingVar>& vars, const Permutation& sigma) {
  auto& table = VariableTable::instance();
  std::vector<std::pair<VarId, int>> out;
  out.reserve(vars.size());
  for (auto& mv : vars) {
    if (!mv.moves) {
      out.emplace_back(mv.id, 1);
      continue;
    }
    Variable w = mv.var;
    for (int& i : w.indices) {
      if (i < 1 || i > sigma.n())
        throw ParameterError("index " + std::to_string(i) + " of " + mv.var.name() + " out of range for degree " +
                             std::to_string(sigma.n()));
      i = sigma(i);
    }
    int sign = 1;
    if (w.indices.size() == 2 && w.indices[0] > w.indices[1] && mv.kind != FamilyKind::Plain) {
      std::swap(w.indices[0], w.indices[1]);
      if (mv.kind == FamilyKind::Antisymmetric)
        sign = -1;
    }
    out.emplace_back(table.intern(w), sign);
  }
  return out;
}

void relabel_into(const Polynomial& f, const std::vector<VarId>& vars, const std::vector<std::pair<VarId, int>>& img,
                  const Rational& scale, PolyAccumulator& acc) {
  std::vector<std::pair<VarId, unsigned>> pairs;
  Rational c;
  for (auto& t : f.terms()) {
    pairs.clear();
    int sign = 1;
    for (std::size_t k = 0; k < t.mono.length(); ++k) {
      auto pos = std::lower_bound(vars.begin(), vars.end(), t.mono.var(k)) - vars.begin();
      auto [w, s] = img[pos];
      unsigned e = t.mono.exp(k);
      if (s < 0 && (e & 1u))
        sign = -sign;
      pairs.emplace_back(w, e);
    }
    c = t.coeff * scale;
    if (sign < 0)
      c = -c;
    acc.add(Monomial::from_pairs(pairs), c);
  }
}

}  // namespace

Polynomial act(const Permutation& sigma, const Polynomial& f, const FamilyList& families) {
  return act(GroupAlgebraElement(sigma), f, families);
}

Polynomial act(const GroupAlgebraElement& e, const Polynomial& f, const FamilyList& families) {
  std::vector<VarId> vars = f.variables();
  auto info = classify(vars, families);
  PolyAccumulator acc;
  acc.reserve(f.size() * e.size());
  for (auto& [sigma, c] : e.terms())
    relabel_into(f, vars, images(info, sigma), c, acc);
  return acc.finish();
}

RationalFunction act(const Permutation& sigma, const RationalFunction& f, const FamilyList& families) {
  RationalFunction r(act(sigma, f.numerator(), families));
  for (auto& fac : f.den_factors())
    r = r * RationalFunction(Polynomial(1L), act(sigma, fac.poly, families)).pow(fac.exp);
  return r;
}

RationalFunction act(const GroupAlgebraElement& e, const RationalFunction& f, const FamilyList& families) {
  if (f.is_polynomial())
    return RationalFunction(act(e, f.numerator(), families));
  std::vector<RationalFunction> parts;
  for (auto& [sigma, c] : e.terms())
    parts.push_back(act(sigma, f, families).scaled(c));
  return RationalFunction::sum(parts);
}

}  // namespace pfaffkit
