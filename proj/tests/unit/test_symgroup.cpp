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
#include "pfaffian.hpp"
#include "ratfn.hpp"
#include "symgroup.hpp"

using namespace pfaffkit;

namespace {

Polynomial x(int i) { return Polynomial::var("x", {i}); }
Polynomial a(int i) { return Polynomial::var("a", {i}); }
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
GroupAlgebraElement one(int n) { return GroupAlgebraElement::identity(n); }
GroupAlgebraElement s(int i, int n) { return GroupAlgebraElement(Permutation::simple(i, n)); }

Permutation random_perm(std::mt19937& rng, int n) {
  auto all = Permutation::all(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

GroupAlgebraElement random_element(std::mt19937& rng, int n) {
  GroupAlgebraElement e(n);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int k = 0; k < 3; ++k)
    e.add(random_perm(rng, n), c(rng));
  return e;
}

}  // namespace

TEST_SUITE("symgroup") {

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(P({2, 1, 3}), P({1, 3, 2})) == P({2, 3, 1}));
  for (auto& u : Permutation::all(3))
    for (auto& v : Permutation::all(3)) {
      Permutation c = compose(u, v);
      for (int i = 1; i <= 3; ++i)
        CHECK(c(i) == u(v(i)));
    }
}

TEST_CASE("length and sign") {
  CHECK(P({2, 1, 3}).length() == 1);
  CHECK(P({2, 1, 4, 3}).sign() == 1);
  CHECK(P({3, 2, 1}).length() == 3);
  CHECK(P({3, 1, 2}).inverse() == P({2, 3, 1}));
  CHECK_THROWS_AS(P({1, 1, 2}), ParameterError);
}

TEST_CASE("group algebra identities") {
  CHECK(((one(2) - s(1, 2)) * (one(2) + s(1, 2))).size() == 0);
  auto lhs = GroupAlgebraElement::simple_plus(1, ratio(1, 2), 3) * GroupAlgebraElement::simple_plus(1, ratio(-1, 2), 3);
  CHECK(lhs == one(3).scaled(ratio(3, 4)));
  auto th = theta(4);
  CHECK(th.size() == 2);
  CHECK(th * th == th.scaled(2));
}

TEST_CASE("antisymmetrizer and symmetrizer") {
  auto n2 = nabla(2);
  CHECK(n2 == (one(2) - s(1, 2)).scaled(ratio(1, 2)));
  auto n3 = nabla(3);
  CHECK(n3.size() == 6);
  for (auto& [p, c] : n3.terms())
    CHECK(c == ratio(p.sign(), 6));
  CHECK(n3 * n3 == n3);
  CHECK(box(3) * box(3) == box(3));
  CHECK(sign_twist(nabla(4)) == box(4));
  CHECK(sign_twist(sign_twist(pf_formal(6))) == pf_formal(6));
  // s_i nabla = -nabla
  CHECK(s(2, 4) * nabla(4) == nabla(4).scaled(-1));
}

TEST_CASE("action on polynomials") {
  CHECK(act(Permutation::simple(1, 2), x(1) - x(2), {"x"}) == x(2) - x(1));
  Polynomial z12 = Polynomial::var("z", {1, 2});
  CHECK(act(Permutation::simple(1, 2), z12, {"z"}) == -z12);
  // families not listed stay fixed
  CHECK(act(Permutation::simple(1, 2), a(1) * x(1), {"x"}) == a(1) * x(2));
}

TEST_CASE("the action is a right action") {
  std::mt19937 rng(3);
  Polynomial f = x(1) * x(1) * x(2) + x(3).scaled(2) * x(4) - x(1) * x(4).pow(3);
  for (int round = 0; round < 40; ++round) {
    Permutation u = random_perm(rng, 4), v = random_perm(rng, 4);
    GroupAlgebraElement uv = GroupAlgebraElement(u) * GroupAlgebraElement(v);
    CHECK(act(v, act(u, f, {"x"}), {"x"}) == act(uv, f, {"x"}));
  }
}

TEST_CASE("group algebra is associative and distributive") {
  std::mt19937 rng(5);
  for (int round = 0; round < 30; ++round) {
    auto p = random_element(rng, 4), q = random_element(rng, 4), r = random_element(rng, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("braid and commutation relations") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) == 1)
          CHECK(s(i, n) * s(j, n) * s(i, n) == s(j, n) * s(i, n) * s(j, n));
        else if (i != j)
          CHECK(s(i, n) * s(j, n) == s(j, n) * s(i, n));
        else
          CHECK(s(i, n) * s(i, n) == one(n));
      }
}

TEST_CASE("antisymmetrizing one matching gives the Pfaffian over 3") {
  // nabla over S_4 of (a1-a2)(a3-a4)/((x1+x2)(x3+x4)), times 3
  RationalFunction f(Polynomial((a(1) - a(2)) * (a(3) - a(4))), (x(1) + x(2)) * (x(3) + x(4)));
  RationalFunction anti = act(nabla(4), f, {"a", "x"}).scaled(3);
  PairMatrix m = PairMatrix::from_function(4, true, [](int i, int j) {
    return RationalFunction(a(i) - a(j), x(i) + x(j));
  });
  CHECK(anti == pfaffian(m));
}

}  // TEST_SUITE
