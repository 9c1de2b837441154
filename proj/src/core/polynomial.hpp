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

#ifndef PFAFFKIT_POLYNOMIAL_HPP
#define PFAFFKIT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "variable.hpp"

namespace pfaffkit {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);
/* p/q in lowest terms; mpq_class(p, q) alone is not canonical */
Rational ratio(long p, long q);

/*
 * A monomial is a sorted list of packed (variable, exponent) words.
 * The packing keeps 20 bits for the variable and 12 for the exponent.
 */
class Monomial {
public:
  static constexpr unsigned kExpBits = 12;
  static constexpr std::uint32_t kExpMask = (1u << kExpBits) - 1;

  Monomial() = default;
  static Monomial of(VarId v, unsigned e = 1);

  bool is_one() const { return w_.empty(); }
  std::size_t length() const { return w_.size(); }
  VarId var(std::size_t k) const { return w_[k] >> kExpBits; }
  unsigned exp(std::size_t k) const { return w_[k] & kExpMask; }
  unsigned exponent_of(VarId v) const;
  unsigned degree() const;

  Monomial operator*(const Monomial& o) const;
  /* Build from unsorted (var, exp) pairs; equal variables are merged. */
  static Monomial from_pairs(std::vector<std::pair<VarId, unsigned>> pairs);

  bool operator==(const Monomial& o) const { return w_ == o.w_; }
  bool operator<(const Monomial& o) const { return w_ < o.w_; }
  std::size_t hash() const;

private:
  static std::uint32_t pack(VarId v, unsigned e);
  boost::container::small_vector<std::uint32_t, 6> w_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/* Graded lexicographic comparison over the fixed variable order: <0, 0, >0. */
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long c);
  Polynomial(const Rational& c);

  /* Bracket families apply z[j,i] = -z[i,j], z[i,i] = 0 and g[j,i] = g[i,j]. */
  static Polynomial var(const Variable& v);
  static Polynomial var(const std::string& family, std::vector<int> indices);
  static Polynomial of_id(VarId v);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<VarId> variables() const;

  /* Terms in decreasing graded lexicographic order. */
  std::vector<const Term*> ordered_terms() const;
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  /* Arbitrary but deterministic total order, used to sort factor lists. */
  bool internal_less(const Polynomial& o) const;
  std::size_t hash() const;

  std::string to_string() const;

private:
  friend class PolyAccumulator;
  std::vector<Term> terms_;  // sorted by Monomial::operator<, nonzero coefficients
};

/* Hash-map accumulator for long sums of terms. */
class PolyAccumulator {
public:
  void reserve(std::size_t n) { map_.reserve(n); }
  void add(const Monomial& m, const Rational& c);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const Rational& c);
  Polynomial finish();

private:
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace pfaffkit

#endif
