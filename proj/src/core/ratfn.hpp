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

#ifndef PFAFFKIT_RATFN_HPP
#define PFAFFKIT_RATFN_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace pfaffkit {

/*
 * Quotient of polynomials. The denominator is kept as a list of distinct
 * monic factors with multiplicities, exactly as they were introduced; no gcd
 * is ever computed. Sums use the least common multiple of the factor lists,
 * so adding terms over the same factors stays small.
 */
class RationalFunction {
public:
  struct Factor {
    Polynomial poly;  // nonconstant, leading coefficient 1
    int exp;
  };

  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}
  RationalFunction(const Rational& c) : num_(c) {}
  RationalFunction(Polynomial num) : num_(std::move(num)) {}
  RationalFunction(Polynomial num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  Polynomial denominator() const;
  const std::vector<Factor>& den_factors() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction scaled(const Rational& c) const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  static RationalFunction sum(const std::vector<RationalFunction>& terms);
  /* Numerators of fs over the common multiple L of their denominators; inv_l receives 1/L. */
  static std::vector<Polynomial> over_common_denominator(const std::vector<RationalFunction>& fs,
                                                         RationalFunction& inv_l);

  /* Numerator of f - g over the common multiple of both denominators. */
  Polynomial difference_numerator(const RationalFunction& g) const;

  std::string to_string() const;

private:
  Polynomial num_;
  std::vector<Factor> den_;  // sorted by Polynomial::internal_less

  void add_factor(Polynomial poly, int exp);
};

bool ratfn_equal(const RationalFunction& f, const RationalFunction& g);
inline bool operator==(const RationalFunction& f, const RationalFunction& g) { return ratfn_equal(f, g); }

/* Map from variables to their images; unlisted variables stay fixed. */
class Substitution {
public:
  void set(VarId v, RationalFunction image) { map_[v] = std::move(image); }
  void set(const Variable& v, RationalFunction image);
  const RationalFunction* find(VarId v) const;
  bool empty() const { return map_.empty(); }

private:
  std::map<VarId, RationalFunction> map_;
};

RationalFunction substitute(const Polynomial& f, const Substitution& s);
RationalFunction substitute(const RationalFunction& f, const Substitution& s);

/* family_i goes to 1 for i in S and to 0 otherwise. */
RationalFunction specialize01(const RationalFunction& f, const std::set<int>& S, const std::string& family);

/* Value of a function that must be a constant; throws otherwise. */
Rational constant_value(const RationalFunction& f);

}  // namespace pfaffkit

#endif
