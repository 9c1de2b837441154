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


#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "tableaux.hpp"

using namespace pfaffkit;

namespace {

using Rows = std::vector<std::vector<int>>;

// exhaustive search over all fillings of the diagram by 1..n
long brute_count(const Partition& p) {
  int n = p.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i + 1;
  long count = 0;
  do {
    Rows rows;
    int k = 0;
    for (int len : p.parts()) {
      rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1])
          ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c])
          ok = false;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("enumeration counts") {
  CHECK(enumerate_syt(Partition({3, 3})).size() == 5);
  CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
  CHECK(enumerate_syt(Partition({1})).size() == 1);
  for (auto parts : std::vector<std::vector<int>>{{3, 2}, {2, 2, 1}, {4, 2}, {3, 2, 1}, {2, 2, 2}}) {
    Partition p(parts);
    auto all = enumerate_syt(p);
    std::set<StandardTableau> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(static_cast<long>(all.size()) == brute_count(p));
    CHECK(count_syt(p) == brute_count(p));
  }
}

TEST_CASE("two-row rectangles give Catalan numbers") {
  const long catalan[] = {1, 2, 5, 14, 42};
  for (int m = 1; m <= 5; ++m)
    CHECK(static_cast<long>(enumerate_syt(Partition::rectangle(2, m)).size()) == catalan[m - 1]);
}

TEST_CASE("partitions") {
  CHECK(Partition::from_any_order({2, 3, 4}) == Partition({4, 3, 2}));
  CHECK(Partition({3, 3}).conjugate() == Partition({2, 2, 2}));
  CHECK_THROWS_AS(Partition({2, 3}), ParameterError);
  CHECK_THROWS_AS(Partition({2, 0}), ParameterError);
}

TEST_CASE("extreme tableaux") {
  Partition p({4, 3, 2});
  CHECK(top_tableau(p).columns() == Rows{{1, 2, 3}, {4, 5, 6}, {7, 8}, {9}});
  CHECK(bottom_tableau(p).rows() == Rows{{1, 2, 3, 4}, {5, 6, 7}, {8, 9}});
  CHECK(top_tableau(Partition({4})) == bottom_tableau(Partition({4})));
  CHECK(top_tableau(Partition({3, 3})).rows() == Rows{{1, 3, 5}, {2, 4, 6}});
}

TEST_CASE("transposition") {
  Partition mm({3, 3});
  CHECK(transpose(bottom_tableau(mm)).rows() == Rows{{1, 4}, {2, 5}, {3, 6}});
  CHECK(transpose(top_tableau(mm)).rows() == top_tableau(mm).columns());
  for (auto& t : enumerate_syt(mm)) {
    CHECK(transpose(transpose(t)) == t);
    CHECK(transpose(t).shape() == Partition({2, 2, 2}));
  }
}

TEST_CASE("axial distance") {
  CHECK(axial_distance(top_tableau(Partition({3, 3})), 2) == 2);
  CHECK(axial_distance(bottom_tableau(Partition({3, 3})), 3) == -3);
  CHECK(axial_distance(StandardTableau(Rows{{1, 2, 3}}), 1) == 1);
}

TEST_CASE("reading permutations") {
  CHECK(reading_permutation(bottom_tableau(Partition({3, 3}))) == Permutation({1, 2, 3, 4, 5, 6}));
  CHECK(reading_permutation(top_tableau(Partition({3, 3}))) == Permutation({1, 3, 5, 2, 4, 6}));
  CHECK(reading_permutation(top_tableau(Partition({2, 2}))) == Permutation({1, 3, 2, 4}));
}

TEST_CASE("tableau graph of [3,3]") {
  TableauGraph g(Partition({3, 3}));
  CHECK(g.vertices().size() == 5);
  CHECK(g.vertices()[g.top()] == top_tableau(Partition({3, 3})));
  int aleph = g.index_of(bottom_tableau(Partition({3, 3})));
  CHECK(g.rank(aleph) == 3);
  std::multiset<int> labels;
  for (auto& e : g.edges())
    labels.insert(e.i);
  CHECK(labels == std::multiset<int>{2, 2, 3, 4, 4});
  CHECK(g.in_edges(g.top()).empty());
  CHECK(g.out_edges(aleph).empty());
}

TEST_CASE("small graphs") {
  TableauGraph g22(Partition({2, 2}));
  REQUIRE(g22.edges().size() == 1);
  CHECK(g22.edges()[0].i == 2);
  CHECK(TableauGraph(Partition({4})).edges().empty());
}

TEST_CASE("graph invariants") {
  for (auto parts : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {4, 4}, {3, 2, 1}, {2, 2, 2}, {4, 2}}) {
    Partition p(parts);
    TableauGraph g(p);
    const auto& v = g.vertices();
    for (auto& e : g.edges()) {
      CHECK(g.rank(e.to) == g.rank(e.from) + 1);
      CHECK(v[e.from].swap_is_standard(e.i));
      CHECK(v[e.from].swapped(e.i) == v[e.to]);
      CHECK(e.rho == axial_distance(v[e.from], e.i));
      CHECK(std::abs(e.rho) >= 2);
    }
    // every vertex but the top is reached
    for (std::size_t k = 1; k < v.size(); ++k)
      CHECK_FALSE(g.in_edges(static_cast<int>(k)).empty());
    // ranks are graph distances: the fixed path has rank length
    for (std::size_t k = 0; k < v.size(); ++k)
      CHECK(static_cast<int>(g.path_to(static_cast<int>(k)).size()) == g.rank(static_cast<int>(k)));
  }
}

TEST_CASE("transposition reverses the graph and negates axial distances") {
  for (auto parts : std::vector<std::vector<int>>{{3, 3}, {3, 2, 1}, {4, 2}}) {
    Partition p(parts);
    TableauGraph g(p), h(p.conjugate());
    CHECK(g.vertices().size() == h.vertices().size());
    CHECK(g.edges().size() == h.edges().size());
    // t -> t s_i in g becomes t~ s_i -> t~ in h with the opposite distance
    for (auto& e : g.edges()) {
      int from = h.index_of(transpose(g.vertices()[e.to]));
      int to = h.index_of(transpose(g.vertices()[e.from]));
      auto out = h.out_edges(from);
      auto it = std::find_if(out.begin(), out.end(), [&](const TableauEdge* f) { return f->to == to && f->i == e.i; });
      REQUIRE(it != out.end());
      // the arrow flips, and so does the swapped tableau's distance
      CHECK((*it)->rho == e.rho);
      CHECK(axial_distance(transpose(g.vertices()[e.from]), e.i) == -e.rho);
    }
  }
}

TEST_CASE("top and bottom are the unique source and sink of [m,m]") {
  for (int m = 2; m <= 4; ++m) {
    TableauGraph g(Partition::rectangle(2, m));
    int sources = 0, sinks = 0;
    for (std::size_t k = 0; k < g.vertices().size(); ++k) {
      sources += g.in_edges(static_cast<int>(k)).empty();
      sinks += g.out_edges(static_cast<int>(k)).empty();
    }
    CHECK(sources == 1);
    CHECK(sinks == 1);
    CHECK(g.out_edges(g.index_of(bottom_tableau(Partition::rectangle(2, m)))).empty());
  }
}

}  // TEST_SUITE
