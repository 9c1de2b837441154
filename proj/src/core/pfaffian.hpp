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

#ifndef PFAFFKIT_PFAFFIAN_HPP
#define PFAFFKIT_PFAFFIAN_HPP

#include <functional>
#include <vector>

#include "symgroup.hpp"

namespace pfaffkit {

class PairFamily;

/*
 * Upper triangle of an n x n matrix; the lower triangle follows by
 * antisymmetry (M[j][i] = -M[i][j], zero diagonal) or by symmetry.
 */
class PairMatrix {
public:
  PairMatrix() = default;
  PairMatrix(int n, bool antisymmetric);
  static PairMatrix from_function(int n, bool antisymmetric, const std::function<RationalFunction(int, int)>& f);
  static PairMatrix from_family(const PairFamily& f);

  int n() const { return n_; }
  bool antisymmetric() const { return antisymmetric_; }
  RationalFunction at(int i, int j) const;
  void set(int i, int j, RationalFunction v);
  std::vector<std::vector<RationalFunction>> dense() const;

private:
  int n_ = 0;
  bool antisymmetric_ = true;
  std::vector<RationalFunction> upper_;
  std::vector<RationalFunction> diag_;
  std::size_t slot(int i, int j) const;
};

using AntisymmetricMatrix = PairMatrix;

/* Signed sum of the (n-1)!! permutations, by the last-letter recursion. */
GroupAlgebraElement pf_formal(int n);

/* sum over terms c_pi of c_pi * M[pi1,pi2] M[pi3,pi4] ... */
RationalFunction apply_matching_sum(const GroupAlgebraElement& formal, const PairMatrix& m);

RationalFunction pfaffian(const PairMatrix& z);
/* First-row expansion memoized over index subsets. */
RationalFunction pfaffian_recursive(const PairMatrix& z);
RationalFunction hafnian(const PairMatrix& m);

using RMatrix = std::vector<std::vector<RationalFunction>>;
using PMatrix = std::vector<std::vector<Polynomial>>;

/* Minor expansion memoized over column subsets; exact and division free. */
Polynomial determinant(const PMatrix& m);
/* Each row is brought to a common denominator first. */
RationalFunction determinant(const RMatrix& m);

struct Prop31Result {
  bool theta_after = false;   // (1 - s1)(1 - s3).. Theta Pf
  bool theta_before = false;  // Theta (1 - s1)(1 - s3).. Pf
  bool passed() const { return theta_after && theta_before; }
};
Prop31Result prop31(int n);
bool prop31_check(int n);

}  // namespace pfaffkit

#endif
