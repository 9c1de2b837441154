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

#include "tableaux.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pfaffkit {

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0)
      throw ParameterError("partition parts must be positive");
    if (k && parts_[k] > parts_[k - 1])
      throw ParameterError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_any_order(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  if (std::is_sorted(parts.begin(), parts.end()))
    std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) { return Partition(std::vector<int>(rows, cols)); }

int Partition::size() const {
  int s = 0;
  for (int p : parts_)
    s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty())
    return Partition();
  for (int j = 0; j < parts_[0]; ++j) {
    int len = 0;
    for (int p : parts_)
      if (p > j)
        ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k)
    s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + "]";
}

// --------------------------------------------------------- StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty())
      throw ParameterError("empty tableau row");
    if (r && rows_[r].size() > rows_[r - 1].size())
      throw ParameterError("tableau rows must shrink going up");
    n += static_cast<int>(rows_[r].size());
  }
  row_of_.assign(n, -1);
  col_of_.assign(n, -1);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > n || row_of_[v - 1] >= 0)
        throw ParameterError("tableau entries must be 1..n once each");
      row_of_[v - 1] = static_cast<int>(r);
      col_of_[v - 1] = static_cast<int>(c);
      if (c && rows_[r][c - 1] > v)
        throw ParameterError("tableau rows must increase");
      if (r && rows_[r - 1][c] > v)
        throw ParameterError("tableau columns must increase upward");
    }
}

Partition StandardTableau::shape() const {
  std::vector<int> p;
  for (auto& r : rows_)
    p.push_back(static_cast<int>(r.size()));
  return Partition(p);
}

std::vector<std::vector<int>> StandardTableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
  for (auto& r : rows_)
    for (std::size_t c = 0; c < r.size(); ++c)
      cols[c].push_back(r[c]);
  return cols;
}

StandardTableau StandardTableau::swapped(int i) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r)
      v = v == i ? i + 1 : (v == i + 1 ? i : v);
  StandardTableau t;
  t.rows_ = std::move(rows);
  t.row_of_ = row_of_;
  t.col_of_ = col_of_;
  std::swap(t.row_of_[i - 1], t.row_of_[i]);
  std::swap(t.col_of_[i - 1], t.col_of_[i]);
  return t;
}

bool StandardTableau::swap_is_standard(int i) const {
  return row_of(i) != row_of(i + 1) && col_of(i) != col_of(i + 1);
}

std::string StandardTableau::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      s += (c ? "," : "") + std::to_string(rows_[r][c]);
    s += "]";
  }
  return s + "]";
}

// ------------------------------------------------------------- enumeration

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  const auto& parts = shape.parts();
  int n = shape.size();
  std::vector<std::vector<int>> rows(parts.size());
  std::vector<StandardTableau> out;
  std::function<void(int)> place = [&](int letter) {
    if (letter > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
      std::size_t len = rows[r].size();
      if (static_cast<int>(len) < parts[r] && (r == 0 || rows[r - 1].size() > len)) {
        rows[r].push_back(letter);
        place(letter + 1);
        rows[r].pop_back();
      }
    }
  };
  if (n == 0)
    return out;
  place(1);
  return out;
}

long count_syt(const Partition& shape) {
  Partition conj = shape.conjugate();
  int n = shape.size();
  // n! / prod hooks, computed exactly
  Rational q = 1;
  for (int k = 2; k <= n; ++k)
    q *= k;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.parts()[r]; ++c)
      q /= (shape.parts()[r] - c) + (conj.parts()[c] - r) - 1;
  return q.get_num().get_si();
}

StandardTableau top_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  Partition conj = shape.conjugate();
  int letter = 1;
  for (int len : conj.parts())
    for (int r = 0; r < len; ++r)
      rows[r].push_back(letter++);
  return StandardTableau(rows);
}

StandardTableau bottom_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  int letter = 1;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.parts()[r]; ++c)
      rows[r].push_back(letter++);
  return StandardTableau(rows);
}

StandardTableau transpose(const StandardTableau& t) { return StandardTableau(t.columns()); }

int axial_distance(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size())
    throw ParameterError("axial distance needs 1 <= i < n");
  return t.content(i + 1) - t.content(i);
}

Permutation reading_permutation(const StandardTableau& t) {
  std::vector<int> v;
  for (auto& r : t.rows())
    v.insert(v.end(), r.begin(), r.end());
  return Permutation(v);
}

// ----------------------------------------------------------- TableauGraph

TableauGraph::TableauGraph(const Partition& shape) : shape_(shape) {
  vertices_ = enumerate_syt(shape);
  std::sort(vertices_.begin(), vertices_.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return reading_permutation(b) < reading_permutation(a);
  });
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    index_[vertices_[v]] = static_cast<int>(v);
  int n = shape.size();
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& t = vertices_[v];
    for (int i = 1; i < n; ++i)
      if (t.swap_is_standard(i) && t.row_of(i + 1) < t.row_of(i))
        edges_.push_back({static_cast<int>(v), index_.at(t.swapped(i)), i, axial_distance(t, i)});
  }
  ranks_.assign(vertices_.size(), -1);
  if (vertices_.empty())
    return;
  if (!(vertices_[0] == top_tableau(shape)))
    throw std::logic_error("top tableau is not first in reading order");
  std::deque<int> queue{0};
  ranks_[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto* e : out_edges(v))
      if (ranks_[e->to] < 0) {
        ranks_[e->to] = ranks_[v] + 1;
        queue.push_back(e->to);
      }
  }
}

int TableauGraph::index_of(const StandardTableau& t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    throw ParameterError("tableau not in graph: " + t.to_string());
  return it->second;
}

std::vector<const TableauEdge*> TableauGraph::in_edges(int v) const {
  std::vector<const TableauEdge*> out;
  for (auto& e : edges_)
    if (e.to == v)
      out.push_back(&e);
  return out;
}

std::vector<const TableauEdge*> TableauGraph::out_edges(int v) const {
  std::vector<const TableauEdge*> out;
  for (auto& e : edges_)
    if (e.from == v)
      out.push_back(&e);
  return out;
}

std::vector<const TableauEdge*> TableauGraph::path_to(int v) const {
  std::vector<const TableauEdge*> path;
  while (v != 0) {
    const TableauEdge* best = nullptr;
    for (auto* e : in_edges(v))
      if (ranks_[e->from] == ranks_[v] - 1 && (!best || e->from < best->from))
        best = e;
    if (!best)
      throw std::logic_error("tableau unreachable from the top");
    path.push_back(best);
    v = best->from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<const TableauEdge*>> TableauGraph::all_paths_to(int v) const {
  if (v == 0)
    return {{}};
  std::vector<std::vector<const TableauEdge*>> out;
  for (auto* e : in_edges(v))
    for (auto& p : all_paths_to(e->from)) {
      p.push_back(e);
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace pfaffkit
