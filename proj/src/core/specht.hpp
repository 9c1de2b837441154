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

#ifndef PFAFFKIT_SPECHT_HPP
#define PFAFFKIT_SPECHT_HPP

#include <map>
#include <string>
#include <vector>

#include "qmatrix.hpp"
#include "tableaux.hpp"

namespace pfaffkit {

struct SpechtModel {
  enum class Kind { Vandermonde, Bracket, Minor };
  Kind kind = Kind::Vandermonde;
  std::string family = "x";

  static SpechtModel vandermonde(const std::string& f = "x") { return {Kind::Vandermonde, f}; }
  static SpechtModel bracket(const std::string& f = "z") { return {Kind::Bracket, f}; }
  static SpechtModel minor(const std::string& f = "g") { return {Kind::Minor, f}; }
  FamilyList families() const { return {family}; }
};

/* prod_{p<q} (f_{c_p} - f_{c_q}) over the letters as listed */
Polynomial vandermonde(const std::vector<int>& letters, const std::string& family = "x");
/* prod_{p<q} z[c_p, c_q] */
Polynomial bracket_vandermonde(const std::vector<int>& letters, const std::string& family = "z");

Polynomial specht_polynomial(const StandardTableau& t, const SpechtModel& model);
/* Value of f at f_i = row of i in t. */
Rational row_specialization(const RationalFunction& f, const StandardTableau& t, const std::string& family = "x");
Rational bottom_coefficient(const Polynomial& f, const Partition& shape, const std::string& family = "x");

/*
 * Young polynomials: Y(top) is the Specht polynomial of the top tableau and
 * Y(t s_i) = Y(t) (s_i - 1/rho) along each graph edge t -> t s_i, with rho the
 * axial distance of i in t.
 */
Polynomial young_step(const Polynomial& f, const TableauEdge& e, const SpechtModel& model, int n);
Polynomial young_along(const std::vector<const TableauEdge*>& path, const TableauGraph& g, const SpechtModel& model);
Polynomial young_polynomial(const StandardTableau& t, const SpechtModel& model);
/* Young polynomials of every vertex, in vertex order. */
std::vector<Polynomial> young_basis(const TableauGraph& g, const SpechtModel& model);

struct ChangeOfBasisMatrix {
  Partition shape;
  std::vector<StandardTableau> order;
  QMatrix entries;  // Y(order[u]) = sum_t entries(u, t) Delta(order[t])
};

/* Coordinates of f on the Specht basis of the shape, vertex order of its graph. */
std::vector<Rational> specht_coordinates(const Polynomial& f, const TableauGraph& g, const std::string& family = "x");
ChangeOfBasisMatrix change_of_basis(const Partition& shape, const SpechtModel& model = SpechtModel::vandermonde());

/* Rank of the matrix (Delta_t at the row specialization of u). */
std::size_t specht_span_rank(const Partition& shape);

/* Coefficients of f in the basis Delta^family_t, t in Tab([m,m]), from 0/1 specializations. */
std::map<StandardTableau, Rational> expand_mm(const Polynomial& f, int m, const std::string& family = "a");

}  // namespace pfaffkit

#endif
