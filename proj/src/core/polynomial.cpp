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

#include "polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pfaffkit {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw ParameterError("bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw ParameterError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational ratio(long p, long q) {
  if (q == 0)
    throw ParameterError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Monomial

std::uint32_t Monomial::pack(VarId v, unsigned e) {
  if (e > kExpMask)
    throw std::overflow_error("exponent too large");
  return (v << kExpBits) | e;
}

Monomial Monomial::of(VarId v, unsigned e) {
  Monomial m;
  if (e)
    m.w_.push_back(pack(v, e));
  return m;
}

unsigned Monomial::exponent_of(VarId v) const {
  for (auto w : w_)
    if ((w >> kExpBits) == v)
      return w & kExpMask;
  return 0;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto w : w_)
    d += w & kExpMask;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.w_.reserve(w_.size() + o.w_.size());
  std::size_t i = 0, j = 0;
  while (i < w_.size() && j < o.w_.size()) {
    VarId a = w_[i] >> kExpBits, b = o.w_[j] >> kExpBits;
    if (a < b)
      r.w_.push_back(w_[i++]);
    else if (b < a)
      r.w_.push_back(o.w_[j++]);
    else {
      r.w_.push_back(pack(a, (w_[i] & kExpMask) + (o.w_[j] & kExpMask)));
      ++i;
      ++j;
    }
  }
  while (i < w_.size())
    r.w_.push_back(w_[i++]);
  while (j < o.w_.size())
    r.w_.push_back(o.w_[j++]);
  return r;
}

Monomial Monomial::from_pairs(std::vector<std::pair<VarId, unsigned>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Monomial m;
  for (std::size_t k = 0; k < pairs.size();) {
    VarId v = pairs[k].first;
    unsigned e = 0;
    while (k < pairs.size() && pairs[k].first == v)
      e += pairs[k++].second;
    if (e)
      m.w_.push_back(pack(v, e));
  }
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db)
    return da > db ? 1 : -1;
  auto& table = VariableTable::instance();
  auto sorted = [&](const Monomial& m) {
    std::vector<std::pair<VarId, unsigned>> v;
    for (std::size_t k = 0; k < m.length(); ++k)
      v.emplace_back(m.var(k), m.exp(k));
    std::sort(v.begin(), v.end(), [&](auto& x, auto& y) { return table.less(x.first, y.first); });
    return v;
  };
  auto va = sorted(a), vb = sorted(b);
  std::size_t n = std::min(va.size(), vb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (va[k].first != vb[k].first)
      return table.less(va[k].first, vb[k].first) ? 1 : -1;
    if (va[k].second != vb[k].second)
      return va[k].second > vb[k].second ? 1 : -1;
  }
  if (va.size() != vb.size())
    return va.size() > vb.size() ? 1 : -1;
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0)
    terms_.push_back({Monomial(), Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0)
    terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::of_id(VarId v) {
  Polynomial p;
  p.terms_.push_back({Monomial::of(v), Rational(1)});
  return p;
}

Polynomial Polynomial::var(const Variable& v) {
  auto& table = VariableTable::instance();
  if (v.indices.size() == 2) {
    FamilyKind kind = table.kind(v.family);
    int i = v.indices[0], j = v.indices[1];
    if (kind == FamilyKind::Antisymmetric) {
      if (i == j)
        return Polynomial();
      if (i > j)
        return -of_id(table.intern({v.family, {j, i}}));
    } else if (kind == FamilyKind::Symmetric && i > j) {
      return of_id(table.intern({v.family, {j, i}}));
    }
  }
  return of_id(table.intern(v));
}

Polynomial Polynomial::var(const std::string& family, std::vector<int> indices) {
  return var(Variable{family, std::move(indices)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  acc.reserve(terms.size());
  for (auto& t : terms)
    acc.add(t.mono, t.coeff);
  return acc.finish();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.is_one())
    return terms_[0].coeff;
  return Rational(0);
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (auto& t : terms_)
    d = std::max(d, t.mono.degree());
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vs;
  for (auto& t : terms_)
    for (std::size_t k = 0; k < t.mono.length(); ++k)
      vs.push_back(t.mono.var(k));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<const Term*> Polynomial::ordered_terms() const {
  std::vector<const Term*> out;
  out.reserve(terms_.size());
  for (auto& t : terms_)
    out.push_back(&t);
  std::sort(out.begin(), out.end(),
            [](const Term* a, const Term* b) { return grlex_compare(a->mono, b->mono) > 0; });
  return out;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::logic_error("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (auto& t : terms_)
    if (grlex_compare(t.mono, best->mono) > 0)
      best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono < b[j].mono)
      r.push_back(a[i++]);
    else if (b[j].mono < a[i].mono) {
      r.push_back(b[j++]);
      if (sign < 0)
        r.back().coeff = -r.back().coeff;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0)
        r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  while (i < a.size())
    r.push_back(a[i++]);
  while (j < b.size()) {
    r.push_back(b[j++]);
    if (sign < 0)
      r.back().coeff = -r.back().coeff;
  }
  return r;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, o.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, o.terms_, -1);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_)
    r.terms_.push_back({t.mono * m, t.coeff * c});
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (terms_.empty() || o.terms_.empty())
    return Polynomial();
  if (terms_.size() == 1)
    return o.times_monomial(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1)
    return times_monomial(o.terms_[0].mono, o.terms_[0].coeff);
  const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
  const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
  PolyAccumulator acc;
  acc.reserve(std::min<std::size_t>(big.size() * small.size(), 1u << 22));
  Rational c;
  for (auto& s : small.terms_)
    for (auto& b : big.terms_) {
      c = s.coeff * b.coeff;
      acc.add(s.mono * b.mono, c);
    }
  return acc.finish();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0)
    return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_)
    t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L), base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coeff != o.terms_[k].coeff)
      return false;
  return true;
}

bool Polynomial::internal_less(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size())
    return terms_.size() < o.terms_.size();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!(terms_[k].mono == o.terms_[k].mono))
      return terms_[k].mono < o.terms_[k].mono;
    if (terms_[k].coeff != o.terms_[k].coeff)
      return terms_[k].coeff < o.terms_[k].coeff;
  }
  return false;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (auto& t : terms_)
    h = h * 1000003u ^ t.mono.hash();
  return h;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  auto& table = VariableTable::instance();
  std::ostringstream os;
  bool first = true;
  for (const Term* t : ordered_terms()) {
    Rational c = t->coeff;
    bool neg = c < 0;
    if (neg)
      c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::pair<VarId, unsigned>> vs;
    for (std::size_t k = 0; k < t->mono.length(); ++k)
      vs.emplace_back(t->mono.var(k), t->mono.exp(k));
    std::sort(vs.begin(), vs.end(), [&](auto& a, auto& b) { return table.less(a.first, b.first); });
    bool wrote = false;
    if (c != 1 || vs.empty()) {
      os << c.get_str();
      wrote = true;
    }
    for (auto& [v, e] : vs) {
      if (wrote)
        os << '*';
      os << table.get(v).name();
      if (e != 1)
        os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// --------------------------------------------------------- PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted)
    it->second += c;
}

void PolyAccumulator::add(const Polynomial& p) {
  for (auto& t : p.terms())
    add(t.mono, t.coeff);
}

void PolyAccumulator::add_scaled(const Polynomial& p, const Rational& c) {
  if (c == 0)
    return;
  Rational tmp;
  for (auto& t : p.terms()) {
    tmp = t.coeff * c;
    add(t.mono, tmp);
  }
}

Polynomial PolyAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (c != 0)
      terms.push_back({m, c});
  map_.clear();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

}  // namespace pfaffkit
