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


#include "doctest.h"
#include "schur.hpp"
#include "specht.hpp"

using namespace pfaffkit;

namespace {

using Rows = std::vector<std::vector<int>>;
Polynomial x(int i) { return Polynomial::var("x", {i}); }
Polynomial a(int i) { return Polynomial::var("a", {i}); }
Polynomial z(int i, int j) { return Polynomial::var("z", {i, j}); }

QMatrix rows_of(const std::vector<std::vector<Rational>>& r) { return QMatrix::from_rows(r); }

}  // namespace

TEST_SUITE("specht") {

TEST_CASE("Specht polynomials") {
  StandardTableau t(Rows{{1, 2, 4}, {3, 6}, {5}});
  CHECK(specht_polynomial(t, SpechtModel::vandermonde()) == vandermonde({1, 3, 5}) * vandermonde({2, 6}));
  CHECK(vandermonde({1, 2, 3}) == (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3)));
  CHECK(specht_polynomial(StandardTableau(Rows{{1}, {2}, {3}}), SpechtModel::vandermonde()) == vandermonde({1, 2, 3}));
}

TEST_CASE("bracket model of the top tableau") {
  // m = 2: two columns of a [2,2] shape
  CHECK(specht_polynomial(top_tableau(Partition({2, 2})), SpechtModel::bracket()) == z(1, 2) * z(3, 4));
  // m = 3 with columns of length three
  Polynomial expect = z(1, 2) * z(1, 3) * z(2, 3) * z(4, 5) * z(4, 6) * z(5, 6);
  CHECK(specht_polynomial(top_tableau(Partition({2, 2, 2})), SpechtModel::bracket()) == expect);
  CHECK(specht_polynomial(top_tableau(Partition({3, 3})), SpechtModel::bracket()) == z(1, 2) * z(3, 4) * z(5, 6));
}

TEST_CASE("minor model") {
  auto t = top_tableau(Partition({2, 2, 2}));
  CHECK(specht_polynomial(t, SpechtModel::minor()) == symmetric_minor({1, 2, 3}, {4, 5, 6}));
  CHECK_THROWS_AS(specht_polynomial(top_tableau(Partition({3, 3})), SpechtModel::minor()), ParameterError);
}

TEST_CASE("row specialization") {
  Partition p({2, 2});
  auto aleph = bottom_tableau(p), zeta = top_tableau(p);
  auto model = SpechtModel::vandermonde();
  CHECK(row_specialization(specht_polynomial(aleph, model), aleph) == 1);
  CHECK(row_specialization(specht_polynomial(zeta, model), aleph) == 0);
  CHECK(row_specialization(Polynomial(5L), zeta) == 5);
}

TEST_CASE("bottom coefficient") {
  Partition p({2, 2});
  auto model = SpechtModel::vandermonde();
  CHECK(bottom_coefficient(specht_polynomial(bottom_tableau(p), model), p) == 1);
  // Delta_zeta has no Delta_aleph component
  CHECK(bottom_coefficient(specht_polynomial(top_tableau(p), model), p) == 0);
  Partition q({3, 3});
  TableauGraph g(q);
  auto young = young_basis(g, model);
  auto cob = change_of_basis(q);
  for (std::size_t u = 0; u < young.size(); ++u)
    CHECK(bottom_coefficient(young[u], q) == cob.entries(u, g.index_of(bottom_tableau(q))));
}

TEST_CASE("change of basis") {
  auto m22 = change_of_basis(Partition({2, 2}));
  CHECK(m22.entries == rows_of({{1, 0}, {ratio(-1, 2), 1}}));
  auto m33 = change_of_basis(Partition({3, 3}));
  CHECK(m33.order[0] == top_tableau(Partition({3, 3})));
  CHECK(m33.order[4] == bottom_tableau(Partition({3, 3})));
  std::vector<Rational> second = {ratio(-1, 2), 1, 0, 0, 0}, last = {ratio(2, 3), ratio(-1, 3), ratio(-1, 3), ratio(-1, 3), 1};
  for (std::size_t t = 0; t < 5; ++t) {
    CHECK(m33.entries(1, t) == second[t]);
    CHECK(m33.entries(4, t) == last[t]);
    CHECK(m33.entries(0, t) == (t == 0 ? 1 : 0));
  }
  CHECK_THROWS_AS(change_of_basis(Partition({2, 2}), SpechtModel::bracket()), ParameterError);
}

TEST_CASE("change of basis is unitriangular in rank order") {
  for (auto parts : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}, {3, 2, 1}, {4, 2}}) {
    Partition p(parts);
    TableauGraph g(p);
    auto m = change_of_basis(p);
    for (std::size_t u = 0; u < m.order.size(); ++u)
      for (std::size_t t = 0; t < m.order.size(); ++t) {
        if (u == t)
          CHECK(m.entries(u, t) == 1);
        else if (g.rank(static_cast<int>(t)) >= g.rank(static_cast<int>(u)))
          CHECK(m.entries(u, t) == 0);
      }
  }
}

TEST_CASE("Young polynomials do not depend on the path") {
  for (auto parts : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}}) {
    TableauGraph g{Partition(parts)};
    for (auto model : {SpechtModel::vandermonde(), SpechtModel::bracket()}) {
      int multi = 0;
      for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        auto paths = g.all_paths_to(static_cast<int>(v));
        multi += paths.size() > 1;
        Polynomial first = young_along(paths[0], g, model);
        for (auto& path : paths)
          CHECK(young_along(path, g, model) == first);
      }
      CHECK(multi > 0);
    }
  }
}

TEST_CASE("top Specht polynomial alternates along columns") {
  for (auto parts : std::vector<std::vector<int>>{{3, 3}, {3, 2, 1}, {2, 2, 2}}) {
    auto zeta = top_tableau(Partition(parts));
    Polynomial y = young_polynomial(zeta, SpechtModel::vandermonde());
    CHECK(y == specht_polynomial(zeta, SpechtModel::vandermonde()));
    for (int i = 1; i < zeta.size(); ++i)
      if (zeta.col_of(i) == zeta.col_of(i + 1))
        CHECK(act(Permutation::simple(i, zeta.size()), y, {"x"}) == -y);
  }
}

TEST_CASE("Specht span rank") {
  CHECK(specht_span_rank(Partition({2, 2})) == 2);
  CHECK(specht_span_rank(Partition({3, 3})) == 5);
  CHECK(specht_span_rank(Partition({3, 2, 1})) == 16);
}

TEST_CASE("expansion over [m,m] by 0/1 specializations") {
  Partition p({2, 2});
  auto zeta = top_tableau(p), aleph = bottom_tableau(p);
  auto c = expand_mm(specht_polynomial(aleph, SpechtModel::vandermonde("a")), 2);
  CHECK(c.at(aleph) == 1);
  CHECK(c.at(zeta) == 0);
  // (a1-a4)(a2-a3) = (a1-a3)(a2-a4) - (a1-a2)(a3-a4)
  auto d = expand_mm((a(1) - a(4)) * (a(2) - a(3)), 2);
  CHECK(d.at(aleph) == 1);
  CHECK(d.at(zeta) == -1);
  for (auto& [t, v] : expand_mm(Polynomial(), 3))
    CHECK(v == 0);
  CHECK_THROWS_AS(expand_mm(Polynomial(), 0), ParameterError);
}

TEST_CASE("expansion reconstructs random members of the span") {
  for (int m = 2; m <= 3; ++m) {
    auto verts = enumerate_syt(Partition::rectangle(2, m));
    Polynomial f;
    long k = 0;
    for (auto& t : verts) {
      ++k;
      f += specht_polynomial(t, SpechtModel::vandermonde("a")).scaled(k % 2 ? k : -k);
    }
    Polynomial back;
    for (auto& [t, v] : expand_mm(f, m))
      back += specht_polynomial(t, SpechtModel::vandermonde("a")).scaled(v);
    CHECK(back == f);
  }
}

TEST_CASE("coefficients transport to the bracket model") {
  auto d = expand_mm((a(1) - a(4)) * (a(2) - a(3)), 2);
  PairFamily gen = make_plucker(ProducerSpec::generic2xN(), 4);
  auto bracket_value = [&](const StandardTableau& t) {
    RationalFunction v(1L);
    for (auto& col : t.columns())
      if (col.size() == 2)
        v = v * gen(col[0], col[1]);
    return v;
  };
  RationalFunction sum;
  for (auto& [t, c] : d)
    sum = sum + bracket_value(t).scaled(c);
  CHECK(sum == gen(1, 4) * gen(2, 3));
}

}  // TEST_SUITE
