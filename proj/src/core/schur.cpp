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

#include "schur.hpp"

#include <algorithm>

#include "pfaffian.hpp"

namespace pfaffkit {

Alphabet Alphabet::of(const std::string& family, int count, int first) {
  Alphabet a;
  for (int i = 0; i < count; ++i)
    a.letters.push_back({family, {first + i}});
  return a;
}

Alphabet Alphabet::indexed(const std::string& family, const std::vector<int>& indices) {
  Alphabet a;
  for (int i : indices)
    a.letters.push_back({family, {i}});
  return a;
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
  Alphabet a = *this;
  a.letters.insert(a.letters.end(), o.letters.begin(), o.letters.end());
  return a;
}

namespace {

std::vector<VarId> ids(const Alphabet& a) {
  std::vector<VarId> out;
  for (auto& v : a.letters)
    out.push_back(VariableTable::instance().intern(v));
  return out;
}

}  // namespace

Polynomial complete_fn(int k, const Alphabet& plus, const Alphabet& minus) {
  if (k < 0)
    return Polynomial();
  auto vars = ids(plus);
  // h_j(plus) for j <= k, by enumerating exponent vectors
  auto h = [&](int d) {
    if (d == 0)
      return Polynomial(1L);
    std::vector<Term> terms;
    std::vector<std::pair<VarId, unsigned>> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos + 1 == vars.size()) {
        auto m = cur;
        m.emplace_back(vars[pos], left);
        terms.push_back({Monomial::from_pairs(m), Rational(1)});
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur.emplace_back(vars[pos], e);
        rec(pos + 1, left - e);
        cur.pop_back();
      }
    };
    if (!vars.empty())
      rec(0, d);
    return Polynomial::from_terms(std::move(terms));
  };
  Polynomial out;
  for (int j = 0; j <= k && j <= static_cast<int>(minus.size()); ++j) {
    Polynomial e = elementary_fn(j, minus);
    Polynomial term = e * h(k - j);
    out += (j % 2) ? -term : term;
  }
  return out;
}

Polynomial elementary_fn(int k, const Alphabet& plus) {
  if (k < 0 || k > static_cast<int>(plus.size()))
    return Polynomial();
  auto vars = ids(plus);
  std::vector<Term> terms;
  std::vector<std::pair<VarId, unsigned>> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (left == 0) {
      terms.push_back({Monomial::from_pairs(cur), Rational(1)});
      return;
    }
    for (std::size_t p = pos; p + left <= vars.size(); ++p) {
      cur.emplace_back(vars[p], 1);
      rec(p + 1, left - 1);
      cur.pop_back();
    }
  };
  rec(0, k);
  return Polynomial::from_terms(std::move(terms));
}

Polynomial power_sum(int k, const Alphabet& plus) {
  Polynomial p;
  for (auto& l : plus.letters)
    p += Polynomial::var(l).pow(static_cast<unsigned>(k));
  return p;
}

Straightened straighten_jacobi_trudi(const std::vector<int>& v) {
  int r = static_cast<int>(v.size());
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i)
    beta[i] = v[r - 1 - i] + (r - 1 - i);  // w_i + r - i with w = reverse(v)
  for (int b : beta)
    if (b < 0)
      return {0, {}};
  // sort decreasing, tracking the permutation sign
  int sign = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j + 1 < r - i; ++j)
      if (beta[j] < beta[j + 1]) {
        std::swap(beta[j], beta[j + 1]);
        sign = -sign;
      } else if (beta[j] == beta[j + 1]) {
        return {0, {}};
      }
  for (int i = 0; i + 1 < r; ++i)
    if (beta[i] == beta[i + 1])
      return {0, {}};
  std::vector<int> mu;
  for (int i = 0; i < r; ++i)
    if (int part = beta[i] - (r - 1 - i); part > 0)
      mu.push_back(part);
  return {sign, mu};
}

namespace {

/* s_mu(x_1..x_p) by removing horizontal strips for the last letter. */
class Branching {
public:
  explicit Branching(std::vector<Polynomial> letters) : letters_(std::move(letters)) {}

  Polynomial eval(const std::vector<int>& mu, std::size_t p) {
    if (mu.empty())
      return Polynomial(1L);
    if (mu.size() > p)
      return Polynomial();
    auto key = std::make_pair(mu, p);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    int total = 0;
    for (int x : mu)
      total += x;
    PolyAccumulator acc;
    std::vector<int> nu(mu.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == mu.size()) {
        std::vector<int> trimmed;
        int s = 0;
        for (int x : nu)
          if (x > 0) {
            trimmed.push_back(x);
            s += x;
          }
        if (trimmed.size() > p - 1)
          return;
        Polynomial sub = eval(trimmed, p - 1);
        if (sub.is_zero())
          return;
        acc.add(sub * power(p - 1, total - s));
        return;
      }
      int lo = i + 1 < mu.size() ? mu[i + 1] : 0;
      for (int x = mu[i]; x >= lo; --x) {
        nu[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    Polynomial r = acc.finish();
    memo_.emplace(key, r);
    return r;
  }

private:
  std::vector<Polynomial> letters_;
  std::map<std::pair<std::vector<int>, std::size_t>, Polynomial> memo_;
  std::map<std::pair<std::size_t, int>, Polynomial> powers_;

  const Polynomial& power(std::size_t letter, int e) {
    auto key = std::make_pair(letter, e);
    auto it = powers_.find(key);
    if (it == powers_.end())
      it = powers_.emplace(key, letters_[letter].pow(static_cast<unsigned>(e))).first;
    return it->second;
  }
};

}  // namespace

Polynomial schur_fn_jacobi_trudi(const std::vector<int>& v, const Alphabet& plus, const Alphabet& minus) {
  int r = static_cast<int>(v.size());
  if (r == 0)
    return Polynomial(1L);
  std::map<int, Polynomial> cache;
  auto S = [&](int k) -> const Polynomial& {
    auto it = cache.find(k);
    if (it == cache.end())
      it = cache.emplace(k, complete_fn(k, plus, minus)).first;
    return it->second;
  };
  std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      m[i - 1][j - 1] = S(v[j - 1] + j - i);
  return determinant(m);
}

Polynomial schur_fn(const std::vector<int>& v, const Alphabet& plus, const Alphabet& minus) {
  if (!minus.letters.empty())
    return schur_fn_jacobi_trudi(v, plus, minus);
  Straightened s = straighten_jacobi_trudi(v);
  if (s.sign == 0)
    return Polynomial();
  std::vector<Polynomial> letters;
  for (auto& l : plus.letters)
    letters.push_back(Polynomial::var(l));
  Branching b(letters);
  Polynomial r = b.eval(s.partition, letters.size());
  return s.sign > 0 ? r : -r;
}

// --------------------------------------------------------------- producers

ProducerSpec ProducerSpec::power_quotient(int k, const std::string& x) {
  ProducerSpec s = of(ProducerKind::PowerQuotient, x);
  s.k = k;
  return s;
}

ProducerSpec ProducerSpec::schur(std::vector<int> v, Alphabet b, int sign, const std::string& x) {
  ProducerSpec s = of(ProducerKind::Schur, x);
  s.v = std::move(v);
  s.alphabet = std::move(b);
  s.sign = sign;
  return s;
}

bool ProducerSpec::antisymmetric() const {
  switch (kind) {
  case ProducerKind::Generic2xN:
  case ProducerKind::Differences:
  case ProducerKind::Schur:
  case ProducerKind::Bracket:
    return true;
  default:
    return false;
  }
}

FamilyList ProducerSpec::action_families() const {
  if (kind == ProducerKind::Generic2xN)
    return {"X", "Y"};
  return {family};
}

std::string ProducerSpec::describe() const {
  switch (kind) {
  case ProducerKind::Generic2xN:
    return "generic2xN";
  case ProducerKind::Differences:
    return "differences(" + family + ")";
  case ProducerKind::Bracket:
    return "bracket(" + family + ")";
  case ProducerKind::SymmetricSymbol:
    return "symbolic(" + family + ")";
  case ProducerKind::Cauchy:
    return "cauchy";
  case ProducerKind::PowerQuotient:
    return "power:" + std::to_string(k);
  case ProducerKind::Schur: {
    std::string s = "schur[";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    s += "](";
    for (std::size_t i = 0; i < alphabet.letters.size(); ++i)
      s += (i ? "," : "") + alphabet.letters[i].name();
    return s + (sign > 0 ? ")+" : ")-");
  }
  }
  return "?";
}

namespace {

RationalFunction produce(const ProducerSpec& s, int i, int j) {
  auto x = [&](int a) { return Polynomial::var(s.family, {a}); };
  switch (s.kind) {
  case ProducerKind::Generic2xN:
    return Polynomial::var("X", {i}) * Polynomial::var("Y", {j}) - Polynomial::var("X", {j}) * Polynomial::var("Y", {i});
  case ProducerKind::Differences:
    return x(i) - x(j);
  case ProducerKind::Bracket:
  case ProducerKind::SymmetricSymbol:
    return Polynomial::var(s.family, {i, j});
  case ProducerKind::Cauchy:
    return RationalFunction(Polynomial(1L), x(i) + x(j));
  case ProducerKind::PowerQuotient: {
    // h_{k-1}(x_i, x_j)
    if (s.k < 1)
      throw ParameterError("power quotient needs k >= 1");
    Polynomial h;
    for (int e = 0; e < s.k; ++e)
      h += x(i).pow(e) * x(j).pow(s.k - 1 - e);
    return h;
  }
  case ProducerKind::Schur: {
    Alphabet pair{{Variable{s.family, {i}}, Variable{s.family, {j}}}};
    Polynomial S = s.sign > 0 ? schur_fn(s.v, s.alphabet + pair) : schur_fn(s.v, s.alphabet, pair);
    return (x(i) - x(j)) * S;
  }
  }
  throw std::logic_error("unknown producer");
}

}  // namespace

PairFamily::PairFamily(const ProducerSpec& spec, int n) : spec_(spec), n_(n), antisymmetric_(spec.antisymmetric()) {
  if (n < 1)
    throw ParameterError("family size must be positive");
  if (spec.kind == ProducerKind::Bracket)
    VariableTable::instance().declare(spec.family, FamilyKind::Antisymmetric);
  if (spec.kind == ProducerKind::SymmetricSymbol)
    VariableTable::instance().declare(spec.family, FamilyKind::Symmetric);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      upper_.push_back(produce(spec, i, j));
}

std::size_t PairFamily::slot(int i, int j) const {
  // row-major upper triangle without diagonal
  std::size_t before = static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i - 1) * i / 2;
  return before + (j - i - 1);
}

RationalFunction PairFamily::operator()(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw ParameterError("pair index out of range");
  if (i == j) {
    if (antisymmetric_)
      return RationalFunction();
    return produce(spec_, i, i);
  }
  if (i < j)
    return upper_[slot(i, j)];
  return antisymmetric_ ? -upper_[slot(j, i)] : upper_[slot(j, i)];
}

PairFamily PairFamily::with_entry(int i, int j, RationalFunction value) const {
  PairFamily f = *this;
  if (i > j) {
    std::swap(i, j);
    if (antisymmetric_)
      value = -value;
  }
  f.upper_[slot(i, j)] = std::move(value);
  return f;
}

PairFamily make_plucker(const ProducerSpec& spec, int n) {
  if (n < 2)
    throw ParameterError("Plucker family needs n >= 2");
  if (!spec.antisymmetric())
    throw ParameterError("producer " + spec.describe() + " is not antisymmetric");
  return PairFamily(spec, n);
}

bool plucker_check(const PairFamily& f, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          RationalFunction rel = f(i, j) * f(k, l) - f(i, k) * f(j, l) + f(j, k) * f(i, l);
          if (!rel.is_zero())
            return false;
        }
  return true;
}

Polynomial symmetric_minor(const std::vector<int>& rows, const std::vector<int>& cols, const std::string& family) {
  if (rows.size() != cols.size())
    throw ParameterError("minor needs as many rows as columns");
  VariableTable::instance().declare(family, FamilyKind::Symmetric);
  std::vector<std::vector<Polynomial>> m(rows.size(), std::vector<Polynomial>(cols.size()));
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 0; q < cols.size(); ++q)
      m[p][q] = Polynomial::var(family, {rows[p], cols[q]});
  return determinant(m);
}

Polynomial kronecker_sum(int m, const std::string& family) {
  if (m < 1)
    throw ParameterError("Kronecker relation needs m >= 1");
  Polynomial total;
  for (int i = 0; i <= m; ++i) {
    std::vector<int> rows, cols;
    for (int r = 1; r < m; ++r)
      rows.push_back(r);
    rows.push_back(m + i);
    for (int c = m; c <= 2 * m; ++c)
      if (c != m + i)
        cols.push_back(c);
    Polynomial minor = symmetric_minor(rows, cols, family);
    total += (i % 2) ? -minor : minor;
  }
  return total;
}

bool kronecker_check(int m) {
  if (m > 3)
    throw ParameterError("kronecker_check is limited to m <= 3");
  return kronecker_sum(m).is_zero();
}

}  // namespace pfaffkit
