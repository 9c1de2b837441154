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

#include "pfaffian.hpp"

#include <unordered_map>

#include "schur.hpp"

namespace pfaffkit {

// -------------------------------------------------------------- PairMatrix

PairMatrix::PairMatrix(int n, bool antisymmetric) : n_(n), antisymmetric_(antisymmetric) {
  if (n < 0)
    throw ParameterError("negative matrix order");
  upper_.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  if (!antisymmetric)
    diag_.resize(n);
}

PairMatrix PairMatrix::from_function(int n, bool antisymmetric, const std::function<RationalFunction(int, int)>& f) {
  PairMatrix m(n, antisymmetric);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      m.set(i, j, f(i, j));
  return m;
}

PairMatrix PairMatrix::from_family(const PairFamily& f) {
  return from_function(f.n(), f.antisymmetric(), [&](int i, int j) { return f(i, j); });
}

std::size_t PairMatrix::slot(int i, int j) const {
  std::size_t before = static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i - 1) * i / 2;
  return before + (j - i - 1);
}

RationalFunction PairMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw ParameterError("matrix index out of range");
  if (i == j)
    return antisymmetric_ ? RationalFunction() : diag_[i - 1];
  if (i < j)
    return upper_[slot(i, j)];
  return antisymmetric_ ? -upper_[slot(j, i)] : upper_[slot(j, i)];
}

void PairMatrix::set(int i, int j, RationalFunction v) {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw ParameterError("matrix index out of range");
  if (i == j) {
    if (antisymmetric_) {
      if (!v.is_zero())
        throw ParameterError("antisymmetric matrix needs a zero diagonal");
      return;
    }
    diag_[i - 1] = std::move(v);
    return;
  }
  if (i > j) {
    std::swap(i, j);
    if (antisymmetric_)
      v = -v;
  }
  upper_[slot(i, j)] = std::move(v);
}

std::vector<std::vector<RationalFunction>> PairMatrix::dense() const {
  std::vector<std::vector<RationalFunction>> d(n_, std::vector<RationalFunction>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      d[i - 1][j - 1] = at(i, j);
  return d;
}

// ------------------------------------------------------------- pf_formal

namespace {

using Word = std::vector<int>;

/* Pf(v) = sum_i (-1)^(i+1) Pf(v minus {v_i, v_n}) [v_i, v_n] */
std::vector<std::pair<int, Word>> pf_words(const Word& v) {
  if (v.empty())
    return {{1, {}}};
  std::vector<std::pair<int, Word>> out;
  int last = v.back();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Word rest;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (k != i)
        rest.push_back(v[k]);
    int sign = (i % 2) ? -1 : 1;
    for (auto& [s, w] : pf_words(rest)) {
      w.push_back(v[i]);
      w.push_back(last);
      out.emplace_back(s * sign, std::move(w));
    }
  }
  return out;
}

}  // namespace

GroupAlgebraElement pf_formal(int n) {
  if (n < 0 || n % 2)
    throw ParameterError("pf_formal needs an even order");
  Word v;
  for (int i = 1; i <= n; ++i)
    v.push_back(i);
  GroupAlgebraElement e(n);
  if (n == 0)
    return e;
  for (auto& [s, w] : pf_words(v))
    e.add(Permutation(w), s);
  return e;
}

RationalFunction apply_matching_sum(const GroupAlgebraElement& formal, const PairMatrix& m) {
  if (formal.n() != m.n())
    throw ParameterError("matrix order does not match the formal sum");
  if (m.n() == 0)
    return RationalFunction(1L);
  std::vector<RationalFunction> parts;
  parts.reserve(formal.size());
  for (auto& [p, c] : formal.terms()) {
    RationalFunction t(c);
    for (int k = 1; k < p.n() && !t.is_zero(); k += 2)
      t = t * m.at(p(k), p(k + 1));
    parts.push_back(std::move(t));
  }
  return RationalFunction::sum(parts);
}

RationalFunction pfaffian(const PairMatrix& z) {
  if (z.n() % 2)
    throw ParameterError("Pfaffian of odd order");
  if (!z.antisymmetric())
    throw ParameterError("Pfaffian needs an antisymmetric matrix");
  return apply_matching_sum(pf_formal(z.n()), z);
}

RationalFunction hafnian(const PairMatrix& m) {
  if (m.n() % 2)
    throw ParameterError("hafnian of odd order");
  if (m.antisymmetric())
    throw ParameterError("hafnian needs symmetric entries");
  return apply_matching_sum(sign_twist(pf_formal(m.n())), m);
}

RationalFunction pfaffian_recursive(const PairMatrix& z) {
  int n = z.n();
  if (n % 2)
    throw ParameterError("Pfaffian of odd order");
  if (n > 24)
    throw ParameterError("order too large for subset recursion");
  std::unordered_map<std::uint32_t, RationalFunction> memo;
  std::function<RationalFunction(std::uint32_t)> pf = [&](std::uint32_t mask) -> RationalFunction {
    if (mask == 0)
      return RationalFunction(1L);
    if (auto it = memo.find(mask); it != memo.end())
      return it->second;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u)
        s.push_back(i + 1);
    std::vector<RationalFunction> parts;
    for (std::size_t j = 1; j < s.size(); ++j) {
      RationalFunction e = z.at(s[0], s[j]);
      if (e.is_zero())
        continue;
      std::uint32_t rest = mask & ~(1u << (s[0] - 1)) & ~(1u << (s[j] - 1));
      RationalFunction t = e * pf(rest);
      parts.push_back(j % 2 ? t : -t);
    }
    RationalFunction r = RationalFunction::sum(parts);
    memo.emplace(mask, r);
    return r;
  };
  return pf((1u << n) - 1);
}

// ------------------------------------------------------------ determinant

Polynomial determinant(const PMatrix& m) {
  int n = static_cast<int>(m.size());
  for (auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw ParameterError("determinant needs a square matrix");
  if (n == 0)
    return Polynomial(1L);
  if (n > 24)
    throw ParameterError("order too large for minor expansion");
  // D(used) expands the rows popcount(used).. along the unused columns
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t, int)> minor = [&](std::uint32_t used, int row) -> Polynomial {
    if (row == n)
      return Polynomial(1L);
    if (auto it = memo.find(used); it != memo.end())
      return it->second;
    PolyAccumulator acc;
    int free_before = 0;
    for (int j = 0; j < n; ++j) {
      if (used >> j & 1u)
        continue;
      const Polynomial& e = m[row][j];
      if (!e.is_zero()) {
        Polynomial sub = minor(used | (1u << j), row + 1);
        if (!sub.is_zero())
          acc.add_scaled(e * sub, free_before % 2 ? Rational(-1) : Rational(1));
      }
      ++free_before;
    }
    Polynomial r = acc.finish();
    memo.emplace(used, r);
    return r;
  };
  return minor(0, 0);
}

RationalFunction determinant(const RMatrix& m) {
  int n = static_cast<int>(m.size());
  PMatrix p(n);
  RationalFunction scale(1L);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw ParameterError("determinant needs a square matrix");
    RationalFunction inv;
    p[i] = RationalFunction::over_common_denominator(m[i], inv);
    scale = scale * inv;
  }
  return RationalFunction(determinant(p)) * scale;
}

// ---------------------------------------------------------------- Prop31

Prop31Result prop31(int n) {
  if (n < 2 || n % 2)
    throw ParameterError("prop31 needs an even order >= 2");
  if (n > 8)
    throw ParameterError("prop31 is limited to n <= 8");
  Rational fact = 1;
  for (int k = 2; k <= n; ++k)
    fact *= k;
  GroupAlgebraElement lhs = nabla(n).scaled(fact);
  GroupAlgebraElement odd = GroupAlgebraElement::identity(n);
  for (int i = 1; i < n; i += 2)
    odd = odd * (GroupAlgebraElement::identity(n) - GroupAlgebraElement(Permutation::simple(i, n)));
  GroupAlgebraElement th = theta(n), pf = pf_formal(n);
  Prop31Result r;
  r.theta_after = (odd * th * pf) == lhs;
  r.theta_before = (th * odd * pf) == lhs;
  return r;
}

bool prop31_check(int n) { return prop31(n).passed(); }

}  // namespace pfaffkit
