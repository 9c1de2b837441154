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

#include "verify.hpp"

namespace pfaffkit {

VerificationReport verify_prop31(const VerifyParams& p) {
  int n = p.even_order(4, 2, 8);
  VerificationReport rep;
  Prop31Result r = prop31(n);
  rep.add(expect("n! nabla = (1-s1)(1-s3).. Theta Pf", r.theta_after));
  rep.add(expect("n! nabla = Theta (1-s1)(1-s3).. Pf", r.theta_before));
  rep.values["pf_terms"] = pf_formal(n).size();
  rep.values["theta_terms"] = theta(n).size();
  return rep;
}

namespace {

GroupAlgebraElement sp(int i, const Rational& c, int n) { return GroupAlgebraElement::simple_plus(i, c, n); }

}  // namespace

VerificationReport verify_yang_baxter(const VerifyParams& p) {
  std::vector<int> sizes = p.n ? std::vector<int>{bounded("n", *p.n, 3, 6)} : std::vector<int>{3, 4};
  std::vector<std::pair<int, int>> pairs;
  if (p.alpha || p.beta) {
    if (!p.alpha || !p.beta)
      throw ParameterError("give both alpha and beta");
    pairs.emplace_back(*p.alpha, *p.beta);
  } else {
    pairs = {{2, 3}, {3, 2}, {2, 2}, {5, 7}};
  }
  for (auto [a, b] : pairs)
    if (a == 0 || b == 0 || a + b == 0)
      throw ParameterError("alpha, beta and alpha+beta must be nonzero");

  VerificationReport rep;
  for (int n : sizes)
    for (auto [a, b] : pairs) {
      Rational ia = ratio(1, a), ib = ratio(1, b), iab = ratio(1, a + b);
      std::string tag = " n=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      bool braid = true;
      for (int i = 1; i + 1 < n; ++i) {
        auto lhs = sp(i, ia, n) * sp(i + 1, iab, n) * sp(i, ib, n);
        auto rhs = sp(i + 1, ib, n) * sp(i, iab, n) * sp(i + 1, ia, n);
        braid = braid && lhs == rhs;
      }
      rep.add(expect("braid relation" + tag, braid));
      bool commute = true;
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
          commute = commute && sp(i, ia, n) * sp(j, ib, n) == sp(j, ib, n) * sp(i, ia, n);
      rep.add(expect("far commutation" + tag, commute));
    }
  bool unitary = true;
  for (int rho : {2, 3, -2, 5}) {
    Rational c = ratio(1, rho);
    unitary = unitary && sp(1, c, 3) * sp(1, -c, 3) == GroupAlgebraElement::identity(3).scaled(Rational(1 - c * c));
  }
  rep.add(expect("(s_i + 1/rho)(s_i - 1/rho) = 1 - 1/rho^2", unitary));
  return rep;
}

namespace {

// Young basis of [3,3] over the Specht basis, and the printed inverse
const std::vector<std::vector<std::string>> kPrinted33 = {
    {"1", "0", "0", "0", "0"},          {"-1/2", "1", "0", "0", "0"},      {"-1/2", "0", "1", "0", "0"},
    {"1/4", "-1/2", "-1/2", "1", "0"}, {"2/3", "-1/3", "-1/3", "-1/3", "1"}};
const std::vector<std::vector<std::string>> kPrinted33Inverse = {
    {"1", "0", "0", "0", "0"},        {"1/2", "1", "0", "0", "0"},     {"1/2", "0", "1", "0", "0"},
    {"1/4", "1/2", "1/2", "1", "0"}, {"-1/4", "1/2", "1/2", "1/3", "1"}};

QMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (auto& s : row)
      r.back().push_back(rational_from_string(s));
  }
  return QMatrix::from_rows(r);
}

}  // namespace

VerificationReport verify_change_of_basis(const VerifyParams& p) {
  Partition shape = Partition::from_any_order(p.shape ? *p.shape : std::vector<int>{3, 3});
  bounded("shape size", shape.size(), 1, 8);
  VerificationReport rep;
  TableauGraph g(shape);
  auto m = change_of_basis(shape);
  std::size_t d = m.order.size();

  bool tri = true;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t t = u; t < d; ++t)
      tri = tri && m.entries(u, t) == (t == u ? 1 : 0);
  rep.add(expect("lower unitriangular in rank order", tri));

  auto model = SpechtModel::vandermonde();
  bool paths = true;
  int multi = 0;
  for (std::size_t v = 0; v < d; ++v) {
    auto all = g.all_paths_to(static_cast<int>(v));
    if (all.size() < 2)
      continue;
    ++multi;
    Polynomial first = young_along(all[0], g, model);
    for (std::size_t k = 1; k < all.size(); ++k)
      paths = paths && young_along(all[k], g, model) == first;
  }
  rep.add(expect("Young polynomials independent of the path", paths));
  rep.values["vertices_with_several_paths"] = multi;

  Polynomial top = specht_polynomial(g.vertices()[0], model);
  const auto& zeta = g.vertices()[0];
  bool anti = true;
  for (int i = 1; i < shape.size(); ++i)
    if (zeta.col_of(i) == zeta.col_of(i + 1))
      anti = anti && act(Permutation::simple(i, shape.size()), top, {"x"}) == -top;
  rep.add(expect("top Specht polynomial alternates along its columns", anti));
  rep.add(expect("Specht span rank equals the number of tableaux", specht_span_rank(shape) == d));

  if (shape == Partition({3, 3})) {
    rep.add(expect("[3,3] matrix matches the printed matrix", m.entries == matrix_of(kPrinted33)));
    auto inv = m.entries.inverse();
    rep.add(expect("[3,3] inverse matches the printed inverse", inv && *inv == matrix_of(kPrinted33Inverse)));
  }
  rep.values["change_of_basis"] = to_json(m);
  return rep;
}

VerificationReport verify_plucker(const VerifyParams& p) {
  int n = bounded("n", p.get(p.n, 5), 2, 7);
  std::vector<ProducerSpec> specs;
  if (p.producers.count("z"))
    specs.push_back(p.producers.at("z"));
  else
    specs = {ProducerSpec::generic2xN(), ProducerSpec::differences("a"),
             ProducerSpec::schur({1}, Alphabet::of("B", 1), 1)};
  VerificationReport rep;
  for (auto& s : specs) {
    PairFamily f = make_plucker(s, n);
    rep.add(expect("three-term relations for " + s.describe(), plucker_check(f, n)));
  }
  if (!p.producers.count("z") && n >= 4) {
    PairFamily f = make_plucker(ProducerSpec::generic2xN(), n);
    PairFamily bad = f.with_entry(1, 2, f(1, 2) + RationalFunction(1L));
    rep.add(expect("perturbed generic family violates a relation", !plucker_check(bad, n)));
  }
  return rep;
}

VerificationReport verify_kronecker(const VerifyParams& p) {
  std::vector<int> ms = p.m ? std::vector<int>{bounded("m", *p.m, 1, 3)} : std::vector<int>{1, 2, 3};
  VerificationReport rep;
  for (int m : ms) {
    Polynomial s = kronecker_sum(m);
    rep.add(Check{"Kronecker relation m=" + std::to_string(m), s.is_zero(), leading_term_string(s)});
  }
  return rep;
}

}  // namespace pfaffkit
