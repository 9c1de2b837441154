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

#include "ratfn.hpp"

#include <algorithm>
#include <deque>

namespace pfaffkit {

namespace {

using Factors = std::vector<RationalFunction::Factor>;

bool same_factors(const Factors& a, const Factors& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].exp != b[k].exp || a[k].poly != b[k].poly)
      return false;
  return true;
}

/* Splits p = c * monic. */
Rational make_monic(Polynomial& p) {
  Rational lc = p.leading_term().coeff;
  if (lc != 1)
    p = p.scaled(1 / lc);
  return lc;
}

/* Least common multiple of factor lists, by literal factor equality. */
Factors lcm(const std::vector<const Factors*>& lists) {
  Factors out;
  for (auto* list : lists)
    for (auto& f : *list) {
      auto it = std::find_if(out.begin(), out.end(), [&](auto& g) { return g.poly == f.poly; });
      if (it == out.end())
        out.push_back(f);
      else
        it->exp = std::max(it->exp, f.exp);
    }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.poly.internal_less(b.poly); });
  return out;
}

int exponent_in(const Factors& list, const Polynomial& p) {
  for (auto& f : list)
    if (f.poly == p)
      return f.exp;
  return 0;
}

class PowerCache {
public:
  const Polynomial& get(const Polynomial& base, int e) {
    for (auto& entry : entries_)
      if (entry.e == e && entry.base == &base)
        return entry.value;
    entries_.push_back({&base, e, base.pow(static_cast<unsigned>(e))});
    return entries_.back().value;
  }

private:
  struct Entry {
    const Polynomial* base;
    int e;
    Polynomial value;
  };
  std::deque<Entry> entries_;
};

/* num * L / den where den divides L factorwise. */
Polynomial lift(const Polynomial& num, const Factors& den, const Factors& L, PowerCache& cache) {
  Polynomial r = num;
  for (auto& f : L) {
    int missing = f.exp - exponent_in(den, f.poly);
    if (missing > 0 && !r.is_zero())
      r *= cache.get(f.poly, missing);
  }
  return r;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, const Polynomial& den) : num_(std::move(num)) {
  if (den.is_zero())
    throw DivisionByZero();
  if (den.is_constant()) {
    num_ = num_.scaled(1 / den.constant_term());
    return;
  }
  if (num_.is_zero())
    return;
  add_factor(den, 1);
}

void RationalFunction::add_factor(Polynomial poly, int exp) {
  if (exp == 0)
    return;
  if (poly.is_zero())
    throw DivisionByZero();
  if (poly.is_constant()) {
    Rational c = poly.constant_term();
    Rational s = 1;
    for (int k = 0; k < std::abs(exp); ++k)
      s *= c;
    num_ = num_.scaled(exp > 0 ? Rational(1 / s) : s);
    return;
  }
  Rational lc = make_monic(poly);
  if (lc != 1) {
    Rational s = 1;
    for (int k = 0; k < std::abs(exp); ++k)
      s *= lc;
    num_ = num_.scaled(exp > 0 ? Rational(1 / s) : s);
  }
  for (auto it = den_.begin(); it != den_.end(); ++it)
    if (it->poly == poly) {
      it->exp += exp;
      if (it->exp <= 0) {
        int over = -it->exp;
        den_.erase(it);
        if (over)
          num_ *= poly.pow(static_cast<unsigned>(over));
      }
      return;
    }
  if (exp < 0) {
    num_ *= poly.pow(static_cast<unsigned>(-exp));
    return;
  }
  den_.push_back({std::move(poly), exp});
  std::sort(den_.begin(), den_.end(), [](auto& a, auto& b) { return a.poly.internal_less(b.poly); });
}

Polynomial RationalFunction::denominator() const {
  Polynomial d(1L);
  for (auto& f : den_)
    d *= f.poly.pow(static_cast<unsigned>(f.exp));
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero())
    r.den_.clear();
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (o.num_.is_zero())
    return *this;
  if (num_.is_zero())
    return o;
  RationalFunction r;
  if (same_factors(den_, o.den_)) {
    r.num_ = num_ + o.num_;
    if (!r.num_.is_zero())
      r.den_ = den_;
    return r;
  }
  Factors L = lcm({&den_, &o.den_});
  PowerCache cache;
  r.num_ = lift(num_, den_, L, cache) + lift(o.num_, o.den_, L, cache);
  if (!r.num_.is_zero())
    r.den_ = std::move(L);
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (num_.is_zero() || o.num_.is_zero())
    return RationalFunction();
  RationalFunction r;
  Polynomial a = num_, b = o.num_;
  Factors fa = den_, fb = o.den_;
  // literal cancellation of a whole numerator against a denominator factor
  auto cancel = [](Polynomial& n, Factors& dens) {
    if (n.is_constant() || dens.empty())
      return;
    Polynomial m = n;
    Rational lc = make_monic(m);
    for (auto it = dens.begin(); it != dens.end(); ++it)
      if (it->poly == m) {
        n = Polynomial(lc);
        if (--it->exp == 0)
          dens.erase(it);
        return;
      }
  };
  cancel(b, fa);
  cancel(a, fb);
  r.num_ = a * b;
  r.den_ = std::move(fa);
  for (auto& f : fb) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](auto& g) { return g.poly == f.poly; });
    if (it == r.den_.end())
      r.den_.push_back(f);
    else
      it->exp += f.exp;
  }
  std::sort(r.den_.begin(), r.den_.end(), [](auto& x, auto& y) { return x.poly.internal_less(y.poly); });
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero())
    throw DivisionByZero();
  RationalFunction r(denominator());
  r.add_factor(num_, 1);
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0)
    return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  if (r.num_.is_zero())
    return r;
  r.den_ = den_;
  for (auto& f : r.den_)
    f.exp *= e;
  r.den_.erase(std::remove_if(r.den_.begin(), r.den_.end(), [](auto& f) { return f.exp == 0; }), r.den_.end());
  return r;
}

RationalFunction RationalFunction::sum(const std::vector<RationalFunction>& terms) {
  // group numerators over identical denominators before lifting
  std::vector<std::pair<Factors, PolyAccumulator>> groups;
  for (auto& t : terms) {
    if (t.num_.is_zero())
      continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](auto& g) { return same_factors(g.first, t.den_); });
    if (it == groups.end()) {
      groups.emplace_back(t.den_, PolyAccumulator());
      it = groups.end() - 1;
    }
    it->second.add(t.num_);
  }
  RationalFunction r;
  if (groups.empty())
    return r;
  std::vector<const Factors*> lists;
  for (auto& g : groups)
    lists.push_back(&g.first);
  Factors L = lcm(lists);
  PowerCache cache;
  PolyAccumulator total;
  for (auto& g : groups)
    total.add(lift(g.second.finish(), g.first, L, cache));
  r.num_ = total.finish();
  if (!r.num_.is_zero())
    r.den_ = std::move(L);
  return r;
}

std::vector<Polynomial> RationalFunction::over_common_denominator(const std::vector<RationalFunction>& fs,
                                                                RationalFunction& inv_l) {
  std::vector<const Factors*> lists;
  for (auto& f : fs)
    if (!f.num_.is_zero())
      lists.push_back(&f.den_);
  Factors L = lcm(lists);
  PowerCache cache;
  std::vector<Polynomial> out;
  for (auto& f : fs)
    out.push_back(f.num_.is_zero() ? Polynomial() : lift(f.num_, f.den_, L, cache));
  inv_l = RationalFunction(1L);
  inv_l.den_ = std::move(L);
  return out;
}

Polynomial RationalFunction::difference_numerator(const RationalFunction& g) const {
  if (same_factors(den_, g.den_))
    return num_ - g.num_;
  Factors L = lcm({&den_, &g.den_});
  PowerCache cache;
  return lift(num_, den_, L, cache) - lift(g.num_, g.den_, L, cache);
}

std::string RationalFunction::to_string() const {
  if (den_.empty())
    return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (auto& f : den_) {
    if (!first)
      s += "*";
    first = false;
    s += "(" + f.poly.to_string() + ")";
    if (f.exp != 1)
      s += "^" + std::to_string(f.exp);
  }
  return s + ")";
}

bool ratfn_equal(const RationalFunction& f, const RationalFunction& g) {
  return f.difference_numerator(g).is_zero();
}

// ------------------------------------------------------------ substitution

void Substitution::set(const Variable& v, RationalFunction image) {
  set(VariableTable::instance().intern(v), std::move(image));
}

const RationalFunction* Substitution::find(VarId v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

RationalFunction substitute(const Polynomial& f, const Substitution& s) {
  struct Slot {
    VarId var;
    const RationalFunction* image;
    unsigned max_exp = 0;
    Polynomial den;  // expanded denominator of the image
    std::vector<Polynomial> num_pow, den_pow;
  };
  std::vector<Slot> slots;
  for (VarId v : f.variables())
    if (auto* img = s.find(v))
      slots.push_back({v, img, 0, Polynomial(), {}, {}});
  if (slots.empty())
    return RationalFunction(f);
  for (auto& t : f.terms())
    for (auto& slot : slots)
      slot.max_exp = std::max(slot.max_exp, t.mono.exponent_of(slot.var));
  for (auto& slot : slots) {
    slot.den = slot.image->denominator();
    slot.num_pow.push_back(Polynomial(1L));
    slot.den_pow.push_back(Polynomial(1L));
    for (unsigned e = 1; e <= slot.max_exp; ++e) {
      slot.num_pow.push_back(slot.num_pow.back() * slot.image->numerator());
      slot.den_pow.push_back(slot.den.is_constant() ? slot.den_pow.back().scaled(slot.den.constant_term())
                                                    : slot.den_pow.back() * slot.den);
    }
  }
  PolyAccumulator acc;
  for (auto& t : f.terms()) {
    std::vector<std::pair<VarId, unsigned>> rest;
    Polynomial prod(t.coeff);
    bool dead = false;
    for (std::size_t k = 0; k < t.mono.length(); ++k) {
      VarId v = t.mono.var(k);
      unsigned e = t.mono.exp(k);
      auto it = std::find_if(slots.begin(), slots.end(), [&](auto& sl) { return sl.var == v; });
      if (it == slots.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      const Polynomial& p = it->num_pow[e];
      if (p.is_zero()) {
        dead = true;
        break;
      }
      prod *= p;
    }
    if (dead)
      continue;
    for (auto& slot : slots) {
      unsigned e = t.mono.exponent_of(slot.var);
      if (!slot.image->is_polynomial() && slot.max_exp > e)
        prod *= slot.den_pow[slot.max_exp - e];
    }
    if (!rest.empty())
      prod = prod.times_monomial(Monomial::from_pairs(std::move(rest)), Rational(1));
    acc.add(prod);
  }
  RationalFunction r(acc.finish());
  if (r.is_zero())
    return r;
  RationalFunction den(1L);
  for (auto& slot : slots)
    if (!slot.image->is_polynomial() && slot.max_exp > 0) {
      RationalFunction q(Polynomial(1L));
      for (auto& fac : slot.image->den_factors())
        q = q * RationalFunction(Polynomial(1L), fac.poly).pow(fac.exp * static_cast<int>(slot.max_exp));
      den = den * q;
    }
  return r * den;
}

RationalFunction substitute(const RationalFunction& f, const Substitution& s) {
  RationalFunction r = substitute(f.numerator(), s);
  for (auto& fac : f.den_factors()) {
    RationalFunction d = substitute(fac.poly, s);
    if (d.is_zero())
      throw DivisionByZero();
    r = r * d.inverse().pow(fac.exp);
  }
  return r;
}

RationalFunction specialize01(const RationalFunction& f, const std::set<int>& S, const std::string& family) {
  auto& table = VariableTable::instance();
  Substitution s;
  auto collect = [&](const Polynomial& p) {
    for (VarId v : p.variables())
      if (table.family_of(v) == family) {
        auto idx = table.indices_of(v);
        if (idx.size() == 1)
          s.set(v, RationalFunction(S.count(idx[0]) ? 1L : 0L));
      }
  };
  collect(f.numerator());
  for (auto& fac : f.den_factors())
    collect(fac.poly);
  return substitute(f, s);
}

Rational constant_value(const RationalFunction& f) {
  if (!f.is_constant())
    throw std::logic_error("expected a constant, got " + f.to_string());
  return f.numerator().constant_term();
}

}  // namespace pfaffkit
