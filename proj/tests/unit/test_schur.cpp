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


#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schur.hpp"
#include "symgroup.hpp"

using namespace pfaffkit;

namespace {

Polynomial x(int i) { return Polynomial::var("x", {i}); }
Polynomial g(int i, int j) { return Polynomial::var("g", {i, j}); }

std::vector<Rational> random_point(std::mt19937& rng, int n) {
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i)
    p.push_back(oracle::random_rational(rng) + 17 * i);  // distinct
  return p;
}

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("complete functions") {
  Alphabet A = Alphabet::of("a", 2), B = Alphabet::of("b", 1);
  CHECK(complete_fn(-1, A).is_zero());
  CHECK(complete_fn(0, A, B) == Polynomial(1L));
  CHECK(complete_fn(1, A) == Polynomial::var("a", {1}) + Polynomial::var("a", {2}));
  CHECK(complete_fn(2, {}, B).is_zero());
  CHECK(complete_fn(1, {}, B) == -Polynomial::var("b", {1}));
  Polynomial a1 = Polynomial::var("a", {1}), a2 = Polynomial::var("a", {2});
  CHECK(complete_fn(2, A) == a1 * a1 + a1 * a2 + a2 * a2);
}

TEST_CASE("generating series of a difference") {
  // sum_k S_k(A - B) t^k = prod (1 - t b) / prod (1 - t a): S_k(A-B) = sum_j S_{k-j}(A) S_j(-B)
  Alphabet A = Alphabet::of("a", 2), B = Alphabet::of("b", 2);
  for (int k = 0; k <= 4; ++k) {
    Polynomial expect;
    for (int j = 0; j <= k; ++j)
      expect += complete_fn(k - j, A) * complete_fn(j, {}, B);
    CHECK(complete_fn(k, A, B) == expect);
  }
  // and S_k(-B) is (-1)^k e_k(B)
  for (int k = 0; k <= 3; ++k)
    CHECK(complete_fn(k, {}, B) == elementary_fn(k, B).scaled(k % 2 ? -1 : 1));
}

TEST_CASE("Schur functions") {
  Alphabet X = Alphabet::of("x", 6);
  CHECK(schur_fn({0}, X) == Polynomial(1L));
  CHECK(schur_fn({1, 1, 1}, X) == elementary_fn(3, X));
  CHECK(schur_fn({2}, X) == complete_fn(2, X));
  CHECK(schur_fn({}, X) == Polynomial(1L));
}

TEST_CASE("fast path agrees with the Jacobi-Trudi determinant") {
  Alphabet X = Alphabet::of("x", 3), B = Alphabet::of("B", 2);
  for (auto v : std::vector<std::vector<int>>{{1}, {2, 1}, {1, 2}, {0, 1, 3}, {3, 1, 1}, {2, 0}, {0, 2}, {1, 1}, {-1, 2}}) {
    CHECK(schur_fn(v, X) == schur_fn_jacobi_trudi(v, X));
    CHECK(schur_fn(v, X + B) == schur_fn_jacobi_trudi(v, X + B));
    CHECK(schur_fn(v, X, B) == schur_fn_jacobi_trudi(v, X, B));
  }
}

TEST_CASE("straightening") {
  auto s = straighten_jacobi_trudi({0, 1, 3});
  CHECK(s.sign != 0);
  CHECK(straighten_jacobi_trudi({1, 3}).sign != 0);
  // entries S_{v_j+j-i}: the index is read increasing
  CHECK(straighten_jacobi_trudi({1, 2}).partition == std::vector<int>{2, 1});
  CHECK(straighten_jacobi_trudi({2, 1}).sign == 0);
  CHECK(straighten_jacobi_trudi({0, 2}).partition == std::vector<int>{2});
}

TEST_CASE("bialternant oracle") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 4; ++n)
    for (auto lam : std::vector<std::vector<int>>{{1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}, {3, 2, 1}}) {
      if (static_cast<int>(lam.size()) > n)
        continue;
      auto pt = random_point(rng, n);
      std::vector<int> v(lam.rbegin(), lam.rend());
      Rational got = oracle::eval(RationalFunction(schur_fn(v, Alphabet::of("x", n))), {{"x", pt}});
      CHECK(got == oracle::schur_bialternant(lam, pt));
    }
}

TEST_CASE("increasing index is the reversed partition") {
  std::mt19937 rng(23);
  auto pt = random_point(rng, 4);
  for (auto v : std::vector<std::vector<int>>{{0, 1, 3}, {1, 2}, {0, 1, 3, 4}}) {
    std::vector<int> lam(v.rbegin(), v.rend());
    Rational got = oracle::eval(RationalFunction(schur_fn(v, Alphabet::of("x", 4))), {{"x", pt}});
    CHECK(got == oracle::schur_bialternant(lam, pt));
  }
}

TEST_CASE("Schur functions are symmetric in their letters") {
  Alphabet X = Alphabet::of("x", 4);
  for (auto v : std::vector<std::vector<int>>{{1, 2}, {0, 1, 3}, {2, 2}}) {
    Polynomial s = schur_fn(v, X);
    CHECK_FALSE(s.is_zero());
    for (int i = 1; i < 4; ++i)
      CHECK(act(Permutation::simple(i, 4), s, {"x"}) == s);
  }
}

TEST_CASE("producers") {
  auto gen = make_plucker(ProducerSpec::generic2xN(), 4);
  Polynomial X1 = Polynomial::var("X", {1}), X2 = Polynomial::var("X", {2});
  Polynomial Y1 = Polynomial::var("Y", {1}), Y2 = Polynomial::var("Y", {2});
  CHECK(gen(1, 2) == RationalFunction(X1 * Y2 - X2 * Y1));
  CHECK(gen(2, 1) == -gen(1, 2));
  auto diff = make_plucker(ProducerSpec::differences(), 4);
  CHECK(diff(1, 3) == RationalFunction(Polynomial::var("a", {1}) - Polynomial::var("a", {3})));
  auto sch = make_plucker(ProducerSpec::schur({1}, Alphabet::of("B", 1), 1), 4);
  Polynomial b1 = Polynomial::var("B", {1});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(sch(i, j) == RationalFunction((x(i) - x(j)) * (b1 + x(i) + x(j))));
}

TEST_CASE("three-term relations") {
  CHECK(plucker_check(make_plucker(ProducerSpec::differences(), 4), 4));
  CHECK(plucker_check(make_plucker(ProducerSpec::generic2xN(), 5), 5));
  auto gen = make_plucker(ProducerSpec::generic2xN(), 4);
  CHECK_FALSE(plucker_check(gen.with_entry(1, 2, gen(1, 2) + RationalFunction(1L)), 4));
  CHECK_FALSE(plucker_check(make_plucker(ProducerSpec::bracket(), 4), 4));
  for (int n = 4; n <= 5; ++n)
    for (auto v : std::vector<std::vector<int>>{{1}, {2}, {1, 1}})
      for (int sign : {1, -1})
        CHECK(plucker_check(make_plucker(ProducerSpec::schur(v, Alphabet::of("B", 2), sign), n), n));
}

TEST_CASE("symmetric minors and Kronecker relations") {
  CHECK(symmetric_minor({1}, {2}) == g(1, 2));
  CHECK(symmetric_minor({1, 2}, {3, 4}) == g(1, 3) * g(2, 4) - g(1, 4) * g(2, 3));
  Polynomial rel2 = symmetric_minor({1, 2}, {3, 4}) - symmetric_minor({1, 3}, {2, 4}) + symmetric_minor({1, 4}, {2, 3});
  CHECK(rel2.is_zero());
  Polynomial rel3 = symmetric_minor({1, 2, 3}, {4, 5, 6}) - symmetric_minor({1, 2, 4}, {3, 5, 6}) +
                    symmetric_minor({1, 2, 5}, {3, 4, 6}) - symmetric_minor({1, 2, 6}, {3, 4, 5});
  CHECK(rel3.is_zero());
  for (int m = 1; m <= 3; ++m) {
    CHECK(kronecker_check(m));
    CHECK(kronecker_sum(m).is_zero());
  }
  CHECK_THROWS_AS(kronecker_check(4), ParameterError);
}

}  // TEST_SUITE
