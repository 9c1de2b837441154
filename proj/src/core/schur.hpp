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

#ifndef PFAFFKIT_SCHUR_HPP
#define PFAFFKIT_SCHUR_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symgroup.hpp"

namespace pfaffkit {

struct Alphabet {
  std::vector<Variable> letters;

  static Alphabet of(const std::string& family, int count, int first = 1);
  /* letters family_i for the listed indices */
  static Alphabet indexed(const std::string& family, const std::vector<int>& indices);
  Alphabet operator+(const Alphabet& o) const;
  std::size_t size() const { return letters.size(); }
};

Polynomial complete_fn(int k, const Alphabet& plus, const Alphabet& minus = {});
Polynomial elementary_fn(int k, const Alphabet& plus);
Polynomial power_sum(int k, const Alphabet& plus);

/*
 * Jacobi-Trudi determinant det(S_{v_j+j-i}(plus - minus)) for any integer
 * vector v, taken verbatim. An increasing vector v gives the Schur function
 * of the reversed partition.
 */
Polynomial schur_fn(const std::vector<int>& v, const Alphabet& plus, const Alphabet& minus = {});
/* Always expands the Jacobi-Trudi determinant, skipping the fast path. */
Polynomial schur_fn_jacobi_trudi(const std::vector<int>& v, const Alphabet& plus, const Alphabet& minus = {});

/* Rewrites det(h_{w_i-i+j}) as sign * s_mu; sign 0 means the determinant vanishes. */
struct Straightened {
  int sign;
  std::vector<int> partition;  // decreasing, zeros dropped
};
Straightened straighten_jacobi_trudi(const std::vector<int>& v);

enum class ProducerKind {
  Generic2xN,      // X_i Y_j - X_j Y_i
  Differences,     // a_i - a_j
  Schur,           // (x_i - x_j) S_v(B +- x_i +- x_j)
  Bracket,         // symbolic z[i,j]
  SymmetricSymbol, // symbolic g[i,j]
  Cauchy,          // 1/(x_i + x_j)
  PowerQuotient,   // (x_i^k - x_j^k)/(x_i - x_j)
};

struct ProducerSpec {
  ProducerKind kind = ProducerKind::Differences;
  std::string family = "a";  // letter family of a, brackets, or x for the x-based kinds
  std::vector<int> v;        // Schur index
  Alphabet alphabet;         // B for the Schur kind
  int sign = 1;
  int k = 0;

  static ProducerSpec of(ProducerKind kind, const std::string& family) {
    ProducerSpec s;
    s.kind = kind;
    s.family = family;
    return s;
  }
  static ProducerSpec generic2xN() { return of(ProducerKind::Generic2xN, "X"); }
  static ProducerSpec differences(const std::string& f = "a") { return of(ProducerKind::Differences, f); }
  static ProducerSpec bracket(const std::string& f = "z") { return of(ProducerKind::Bracket, f); }
  static ProducerSpec symmetric_symbol(const std::string& f = "g") { return of(ProducerKind::SymmetricSymbol, f); }
  static ProducerSpec cauchy(const std::string& x = "x") { return of(ProducerKind::Cauchy, x); }
  static ProducerSpec power_quotient(int k, const std::string& x = "x");
  static ProducerSpec schur(std::vector<int> v, Alphabet b, int sign, const std::string& x = "x");

  bool antisymmetric() const;
  /* Families an index permutation must move to act on the entries. */
  FamilyList action_families() const;
  std::string describe() const;
};

/* Entries p[i,j] for 1 <= i < j <= n; p[j,i] = -p[i,j] or p[i,j] by symmetry. */
class PairFamily {
public:
  PairFamily() = default;
  PairFamily(const ProducerSpec& spec, int n);

  int n() const { return n_; }
  bool antisymmetric() const { return antisymmetric_; }
  const ProducerSpec& spec() const { return spec_; }
  RationalFunction operator()(int i, int j) const;
  /* Family with one entry replaced, e.g. to corrupt a relation on purpose. */
  PairFamily with_entry(int i, int j, RationalFunction value) const;

private:
  ProducerSpec spec_;
  int n_ = 0;
  bool antisymmetric_ = true;
  std::vector<RationalFunction> upper_;
  std::size_t slot(int i, int j) const;
};

PairFamily make_plucker(const ProducerSpec& spec, int n);
/* All three-term relations p[i,j]p[k,l] - p[i,k]p[j,l] + p[j,k]p[i,l] = 0. */
bool plucker_check(const PairFamily& f, int n);

/* Determinant of the submatrix of the symbolic symmetric matrix (g[i,j]). */
Polynomial symmetric_minor(const std::vector<int>& rows, const std::vector<int>& cols, const std::string& family = "g");
/* sum_i (-1)^i g[1..m-1, m+i | m..2m without m+i] */
Polynomial kronecker_sum(int m, const std::string& family = "g");
bool kronecker_check(int m);

}  // namespace pfaffkit

#endif
