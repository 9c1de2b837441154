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

#ifndef PFAFFKIT_TABLEAUX_HPP
#define PFAFFKIT_TABLEAUX_HPP

#include <map>
#include <vector>

#include "symgroup.hpp"

namespace pfaffkit {

/* Weakly decreasing positive parts. */
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /* Accepts either weakly increasing or weakly decreasing input. */
  static Partition from_any_order(std::vector<int> parts);
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/*
 * Rows are listed from the bottom row (row 0) upward, each left to right.
 * content = column - row.
 */
class StandardTableau {
public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const { return static_cast<int>(row_of_.size()); }
  int row_of(int letter) const { return row_of_.at(letter - 1); }
  int col_of(int letter) const { return col_of_.at(letter - 1); }
  int content(int letter) const { return col_of(letter) - row_of(letter); }
  std::vector<std::vector<int>> columns() const;

  /* swap the letters i and i+1, without checking standardness */
  StandardTableau swapped(int i) const;
  bool swap_is_standard(int i) const;

  std::string to_string() const;
  auto operator<=>(const StandardTableau& o) const { return rows_ <=> o.rows_; }
  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }

private:
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_, col_of_;
};

std::vector<StandardTableau> enumerate_syt(const Partition& shape);
/* Number of standard tableaux, by the hook length formula. */
long count_syt(const Partition& shape);

StandardTableau top_tableau(const Partition& shape);     // columns of consecutive letters
StandardTableau bottom_tableau(const Partition& shape);  // rows of consecutive letters
StandardTableau transpose(const StandardTableau& t);
int axial_distance(const StandardTableau& t, int i);
Permutation reading_permutation(const StandardTableau& t);

struct TableauEdge {
  int from, to;  // vertex indices
  int i;         // t -> t s_i
  int rho;       // axial_distance(from, i)
};

/*
 * Graph on Tab(shape). An edge goes from t to t s_i when i+1 lies in a lower
 * row than i in t; ranks are distances from the top tableau. Vertices are
 * sorted by decreasing reading permutation, which refines the rank.
 */
class TableauGraph {
public:
  explicit TableauGraph(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<StandardTableau>& vertices() const { return vertices_; }
  const std::vector<TableauEdge>& edges() const { return edges_; }
  int rank(int v) const { return ranks_[v]; }
  int index_of(const StandardTableau& t) const;
  int top() const { return 0; }
  std::vector<const TableauEdge*> in_edges(int v) const;
  std::vector<const TableauEdge*> out_edges(int v) const;
  /* A fixed shortest path from the top tableau, as edge list. */
  std::vector<const TableauEdge*> path_to(int v) const;
  /* Every path from the top tableau (small shapes only). */
  std::vector<std::vector<const TableauEdge*>> all_paths_to(int v) const;

private:
  Partition shape_;
  std::vector<StandardTableau> vertices_;
  std::vector<TableauEdge> edges_;
  std::vector<int> ranks_;
  std::map<StandardTableau, int> index_;
};

}  // namespace pfaffkit

#endif
