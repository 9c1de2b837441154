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

#ifndef PFAFFKIT_SYMGROUP_HPP
#define PFAFFKIT_SYMGROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "ratfn.hpp"

namespace pfaffkit {

/* One-line notation on {1..n}. */
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /* s_i exchanges i and i+1. */
  static Permutation simple(int i, int n);
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  int sign() const { return length() % 2 ? -1 : 1; }
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/* compose(s, t)(i) = s(t(i)): t is applied first. */
Permutation compose(const Permutation& s, const Permutation& t);

/*
 * Finite rational combination of permutations of one degree. Products are
 * written in the order in which they act on the right of polynomials, so
 * f (u v) = (f u) v and the basis product u v is compose(v, u).
 */
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int n = 0) : n_(n) {}
  GroupAlgebraElement(const Permutation& p, const Rational& c = 1);

  static GroupAlgebraElement identity(int n) { return GroupAlgebraElement(Permutation::identity(n)); }
  /* s_i + c */
  static GroupAlgebraElement simple_plus(int i, const Rational& c, int n);

  int n() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Rational coeff(const Permutation& p) const;
  void add(const Permutation& p, const Rational& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Rational& c) const;
  bool operator==(const GroupAlgebraElement& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  std::string to_string() const;

private:
  int n_;
  std::map<Permutation, Rational> coeffs_;
};

GroupAlgebraElement convolve(const GroupAlgebraElement& u, const GroupAlgebraElement& v);

/* (1/n!) times the signed, resp. unsigned, sum of all permutations. */
GroupAlgebraElement nabla(int n);
GroupAlgebraElement box(int n);
/* Sum of the (n/2)! permutations moving the blocks [1,2],[3,4],... as wholes. */
GroupAlgebraElement theta(int n);
/* sigma -> sign(sigma) sigma */
GroupAlgebraElement sign_twist(const GroupAlgebraElement& e);

using FamilyList = std::vector<std::string>;

/* f^sigma: every index i of the listed families becomes sigma(i). */
Polynomial act(const Permutation& sigma, const Polynomial& f, const FamilyList& families);
Polynomial act(const GroupAlgebraElement& e, const Polynomial& f, const FamilyList& families);
RationalFunction act(const Permutation& sigma, const RationalFunction& f, const FamilyList& families);
RationalFunction act(const GroupAlgebraElement& e, const RationalFunction& f, const FamilyList& families);

}  // namespace pfaffkit

#endif
