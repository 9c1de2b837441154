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

#include "specht.hpp"

#include <random>
#include <stdexcept>

#include "schur.hpp"

namespace pfaffkit {

Polynomial vandermonde(const std::vector<int>& letters, const std::string& family) {
  Polynomial p(1L);
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      p *= Polynomial::var(family, {letters[a]}) - Polynomial::var(family, {letters[b]});
  return p;
}

Polynomial bracket_vandermonde(const std::vector<int>& letters, const std::string& family) {
  VariableTable::instance().declare(family, FamilyKind::Antisymmetric);
  Polynomial p(1L);
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      p *= Polynomial::var(family, {letters[a], letters[b]});
  return p;
}

Polynomial specht_polynomial(const StandardTableau& t, const SpechtModel& model) {
  auto cols = t.columns();
  switch (model.kind) {
  case SpechtModel::Kind::Vandermonde: {
    Polynomial p(1L);
    for (auto& c : cols)
      p *= vandermonde(c, model.family);
    return p;
  }
  case SpechtModel::Kind::Bracket: {
    Polynomial p(1L);
    for (auto& c : cols)
      p *= bracket_vandermonde(c, model.family);
    return p;
  }
  case SpechtModel::Kind::Minor:
    if (cols.size() != 2 || cols[0].size() != cols[1].size())
      throw ParameterError("minor model needs a two-column shape [2^m], got " + t.shape().to_string());
    return symmetric_minor(cols[0], cols[1], model.family);
  }
  throw std::logic_error("unknown Specht model");
}

Rational row_specialization(const RationalFunction& f, const StandardTableau& t, const std::string& family) {
  Substitution s;
  for (int i = 1; i <= t.size(); ++i)
    s.set(Variable{family, {i}}, RationalFunction(static_cast<long>(t.row_of(i))));
  return constant_value(substitute(f, s));
}

Rational bottom_coefficient(const Polynomial& f, const Partition& shape, const std::string& family) {
  StandardTableau aleph = bottom_tableau(shape);
  Polynomial d = specht_polynomial(aleph, SpechtModel::vandermonde(family));
  return row_specialization(f, aleph, family) / row_specialization(d, aleph, family);
}

Polynomial young_step(const Polynomial& f, const TableauEdge& e, const SpechtModel& model, int n) {
  Polynomial moved = act(Permutation::simple(e.i, n), f, model.families());
  return moved - f.scaled(ratio(1, e.rho));
}

Polynomial young_along(const std::vector<const TableauEdge*>& path, const TableauGraph& g, const SpechtModel& model) {
  Polynomial p = specht_polynomial(g.vertices()[g.top()], model);
  int n = g.shape().size();
  for (auto* e : path)
    p = young_step(p, *e, model, n);
  return p;
}

Polynomial young_polynomial(const StandardTableau& t, const SpechtModel& model) {
  TableauGraph g(t.shape());
  return young_along(g.path_to(g.index_of(t)), g, model);
}

std::vector<Polynomial> young_basis(const TableauGraph& g, const SpechtModel& model) {
  std::size_t d = g.vertices().size();
  std::vector<Polynomial> out(d);
  std::vector<char> done(d, 0);
  int n = g.shape().size();
  out[0] = specht_polynomial(g.vertices()[0], model);
  done[0] = 1;
  // vertices are in an order refining rank, so parents come first
  for (std::size_t v = 1; v < d; ++v) {
    auto path = g.path_to(static_cast<int>(v));
    const TableauEdge* last = path.back();
    if (!done[last->from])
      throw std::logic_error("vertex order does not refine rank");
    out[v] = young_step(out[last->from], *last, model, n);
    done[v] = 1;
  }
  return out;
}

namespace {

std::vector<Rational> values_at(const std::vector<Polynomial>& fs, const std::vector<Rational>& point,
                                const std::string& family) {
  Substitution s;
  for (std::size_t i = 0; i < point.size(); ++i)
    s.set(Variable{family, {static_cast<int>(i) + 1}}, RationalFunction(point[i]));
  std::vector<Rational> out;
  for (auto& f : fs)
    out.push_back(constant_value(substitute(f, s)));
  return out;
}

}  // namespace

std::vector<Rational> specht_coordinates(const Polynomial& f, const TableauGraph& g, const std::string& family) {
  const auto& verts = g.vertices();
  std::size_t d = verts.size();
  int n = g.shape().size();
  std::vector<Polynomial> basis;
  for (auto& t : verts)
    basis.push_back(specht_polynomial(t, SpechtModel::vandermonde(family)));

  std::vector<std::vector<Rational>> points;
  for (auto& u : verts) {
    std::vector<Rational> p;
    for (int i = 1; i <= n; ++i)
      p.push_back(u.row_of(i));
    points.push_back(std::move(p));
  }
  // greedily keep points that raise the rank; fall back to small random points
  std::vector<std::vector<Rational>> rows, chosen;
  std::mt19937 rng(20260914u);
  std::uniform_int_distribution<int> dist(-6, 6);
  std::size_t next = 0;
  for (int attempts = 0; rows.size() < d && attempts < 200; ++attempts) {
    std::vector<Rational> point;
    if (next < points.size())
      point = points[next++];
    else
      for (int i = 0; i < n; ++i)
        point.push_back(dist(rng));
    auto vals = values_at(basis, point, family);
    rows.push_back(vals);
    if (QMatrix::from_rows(rows).rank() < rows.size())
      rows.pop_back();
    else
      chosen.push_back(point);
  }
  if (rows.size() < d)
    throw std::runtime_error("Specht expansion failed: singular specialization system");
  QMatrix a = QMatrix::from_rows(rows);
  std::vector<Rational> rhs;
  for (auto& p : chosen)
    rhs.push_back(values_at({f}, p, family)[0]);
  auto c = a.solve(rhs);
  if (!c)
    throw std::runtime_error("Specht expansion failed: singular specialization system");
  PolyAccumulator acc;
  for (std::size_t t = 0; t < d; ++t)
    acc.add_scaled(basis[t], (*c)[t]);
  if (acc.finish() != f)
    throw std::runtime_error("polynomial does not lie in the Specht span of " + g.shape().to_string());
  return *c;
}

ChangeOfBasisMatrix change_of_basis(const Partition& shape, const SpechtModel& model) {
  if (model.kind != SpechtModel::Kind::Vandermonde)
    throw ParameterError("change of basis is implemented for the Vandermonde model only");
  TableauGraph g(shape);
  auto young = young_basis(g, model);
  std::size_t d = young.size();
  ChangeOfBasisMatrix m{shape, g.vertices(), QMatrix(d, d)};
  for (std::size_t u = 0; u < d; ++u) {
    auto c = specht_coordinates(young[u], g, model.family);
    for (std::size_t t = 0; t < d; ++t)
      m.entries(u, t) = c[t];
  }
  return m;
}

std::size_t specht_span_rank(const Partition& shape) {
  auto verts = enumerate_syt(shape);
  std::vector<Polynomial> basis;
  for (auto& t : verts)
    basis.push_back(specht_polynomial(t, SpechtModel::vandermonde()));
  std::vector<std::vector<Rational>> rows;
  for (auto& u : verts) {
    std::vector<Rational> point;
    for (int i = 1; i <= u.size(); ++i)
      point.push_back(u.row_of(i));
    rows.push_back(values_at(basis, point, "x"));
  }
  return QMatrix::from_rows(rows).rank();
}

std::map<StandardTableau, Rational> expand_mm(const Polynomial& f, int m, const std::string& family) {
  if (m < 1)
    throw ParameterError("expand_mm needs m >= 1");
  TableauGraph g(Partition::rectangle(2, m));
  const auto& verts = g.vertices();
  std::size_t d = verts.size();
  std::vector<Polynomial> basis;
  for (auto& t : verts)
    basis.push_back(specht_polynomial(t, SpechtModel::vandermonde(family)));
  QMatrix a(d, d);
  std::vector<Rational> rhs;
  for (std::size_t u = 0; u < d; ++u) {
    const auto& bottom = verts[u].rows()[0];
    std::set<int> S(bottom.begin(), bottom.end());
    for (std::size_t t = 0; t < d; ++t)
      a(u, t) = constant_value(specialize01(basis[t], S, family));
    rhs.push_back(constant_value(specialize01(f, S, family)));
  }
  auto c = a.solve(rhs);
  if (!c)
    throw std::runtime_error("internal error: singular specialization system for shape [m,m]");
  std::map<StandardTableau, Rational> out;
  for (std::size_t t = 0; t < d; ++t)
    out.emplace(verts[t], (*c)[t]);
  return out;
}

}  // namespace pfaffkit
