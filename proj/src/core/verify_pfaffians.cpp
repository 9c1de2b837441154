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

namespace {

Polynomial xv(int i, const std::string& f = "x") { return Polynomial::var(f, {i}); }

RationalFunction inv(const Polynomial& p) { return RationalFunction(Polynomial(1L), p); }

/* 1 / prod_{i<j} e(i, j) with every factor kept separate */
RationalFunction inverse_product(int n, const std::function<Polynomial(int, int)>& e) {
  RationalFunction r(1L);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r = r * inv(e(i, j));
  return r;
}

Polynomial nabla_of(const Polynomial& f, int n, const FamilyList& fams) { return act(nabla(n), f, fams); }

void sign_values(VerificationReport& rep, int m) {
  rep.values["d"] = count_syt(Partition::rectangle(2, m));
  rep.values["sign_correction"] = rect_sign(m);
}

}  // namespace

VerificationReport verify_pfaffzg(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6), m = n / 2;
  ProducerSpec zs = p.producer("z", ProducerSpec::differences("a"));
  ProducerSpec gs = p.producer("g", ProducerSpec::symmetric_symbol("g"));
  PairFamily z = plucker_family(zs, n, "z");
  if (gs.antisymmetric())
    throw ParameterError("producer for 'g' must be symmetric, got " + gs.describe());
  PairFamily g(gs, n);
  VariableTable::instance().declare("z", FamilyKind::Antisymmetric);
  VariableTable::instance().declare("g", FamilyKind::Symmetric);

  VerificationReport rep;
  PairMatrix mat = PairMatrix::from_function(n, true, [&](int i, int j) { return z(i, j) * g(i, j); });
  RationalFunction lhs = pfaffian(mat);
  rep.add(compare("matching sum agrees with the subset recursion", lhs, pfaffian_recursive(mat)));

  Partition shape = Partition::rectangle(2, m);
  TableauGraph graph(shape);
  auto zmodel = SpechtModel::bracket("z");
  auto gmodel = SpechtModel::minor("g");
  Substitution sub;
  add_pair_substitution(sub, "z", z);
  add_pair_substitution(sub, "g", g);

  PolyAccumulator sum;
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
    const auto& t = graph.vertices()[v];
    Polynomial term = young_polynomial(t, zmodel) * young_polynomial(transpose(t), gmodel);
    sum.add_scaled(term, graph.rank(v) % 2 ? Rational(-1) : Rational(1));
  }
  rep.add(compare("Pfaffian equals the rank-signed Young sum", lhs, substitute(sum.finish(), sub)));

  StandardTableau aleph = bottom_tableau(shape);
  Rational scale = Rational(count_syt(shape)) * rect_sign(m);
  Polynomial young_form = nabla_of(young_polynomial(aleph, zmodel) * young_polynomial(transpose(aleph), gmodel), n,
                                   {"z", "g"});
  rep.add(compare("Pfaffian equals sign d nabla(Y(aleph) Y(aleph~))", lhs,
                  substitute(young_form.scaled(scale), sub)));
  Polynomial specht_form = nabla_of(
      specht_polynomial(aleph, zmodel) * specht_polynomial(transpose(aleph), gmodel), n, {"z", "g"});
  rep.add(compare("Pfaffian equals sign d nabla(Delta(aleph) Delta(aleph~))", lhs,
                  substitute(specht_form.scaled(scale), sub)));
  sign_values(rep, m);
  rep.values["printed_sign_holds"] = rect_sign(m) == 1;
  if (rect_sign(m) != 1)
    rep.notes.push_back("the antisymmetrized forms carry the extra sign (-1)^(m(m-1)/2)");

  if (n == 6 && gs.kind == ProducerKind::PowerQuotient && gs.k == 4) {
    const std::string& x = gs.family;
    Alphabet all = Alphabet::of(x, 6);
    Polynomial s111 = schur_fn({1, 1, 1}, all);
    Polynomial minor = substitute(symmetric_minor({1, 2, 3}, {4, 5, 6}, "g"), sub).numerator();
    Polynomial dd = delta_of({1, 2, 3}, x) * delta_of({4, 5, 6}, x);
    // the minor comes out as minus the product: the sign of Delta(123) from Cauchy-Binet is odd
    rep.add(compare("g[123|456] = -Delta(123) Delta(456) S111", minor, -(dd * s111)));
    rep.values["minor_printed_sign_holds"] = minor == dd * s111;
    Polynomial base = substitute(nabla_of(specht_polynomial(aleph, zmodel) * dd, n, {"z", x}), sub).numerator();
    auto c = proportionality(lhs, RationalFunction(base * s111));
    rep.add(expect("Pfaffian is a nonzero multiple of Delta(aleph) Delta(123) Delta(456) nabla S111", c.has_value()));
    if (c)
      rep.values["s111_scalar"] = rational_to_string(*c);
  }
  return rep;
}

VerificationReport verify_pfaffabz(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6), m = n / 2;
  PairFamily a = plucker_family(p.producer("a", ProducerSpec::differences("a")), n, "a");
  PairFamily b = plucker_family(p.producer("b", ProducerSpec::differences("b")), n, "b");
  PairFamily z = plucker_family(p.producer("z", ProducerSpec::generic2xN()), n, "z");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (z(i, j).is_zero())
        throw ParameterError("producer for 'z' has a vanishing entry");
  for (const char* f : {"za", "zb", "z"})
    VariableTable::instance().declare(f, FamilyKind::Antisymmetric);

  VerificationReport rep;
  PairMatrix mat = PairMatrix::from_function(n, true, [&](int i, int j) { return a(i, j) * b(i, j) / z(i, j); });
  RationalFunction lhs = pfaffian(mat);

  Partition shape = Partition::rectangle(2, m);
  StandardTableau aleph = bottom_tableau(shape);
  StandardTableau zeta = top_tableau(Partition::rectangle(m, 2));
  Polynomial yz = young_polynomial(zeta, SpechtModel::bracket("z"));
  Substitution sub;
  add_pair_substitution(sub, "za", a);
  add_pair_substitution(sub, "zb", b);
  add_pair_substitution(sub, "z", z);
  auto factor = [&](const std::string& fam) {
    Polynomial y = young_polynomial(aleph, SpechtModel::bracket(fam));
    return substitute(nabla_of(y * yz, n, {fam, "z"}), sub);
  };
  RationalFunction zprod(1L);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      zprod = zprod / z(i, j);
  Rational d = count_syt(shape);
  RationalFunction rhs = factor("za") * factor("zb") * zprod.scaled(d * d);
  rep.add(compare("Pfaffian equals d^2 (Y^a(aleph) Y^z(zeta) nabla)(Y^b(aleph) Y^z(zeta) nabla) / prod z", lhs, rhs));
  rep.values["d"] = d.get_num().get_si();
  return rep;
}

VerificationReport verify_okada_split(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6);
  PairFamily a = plucker_family(p.producer("a", ProducerSpec::differences("a")), n, "a");
  PairFamily b = plucker_family(p.producer("b", ProducerSpec::differences("b")), n, "b");
  VerificationReport rep;
  auto lhs = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) {
    return a(i, j) * b(i, j) * inv(xv(i) - xv(j)) * inv(xv(i) + xv(j));
  }));
  auto pa = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) { return a(i, j) * inv(xv(i) + xv(j)); }));
  auto pb = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) { return b(i, j) * inv(xv(i) + xv(j)); }));
  RationalFunction ratio(1L);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      ratio = ratio * RationalFunction(xv(i) + xv(j)) * inv(xv(i) - xv(j));
  rep.add(compare("Pf(ab/(x_i^2-x_j^2)) = prod (x_i+x_j)/(x_i-x_j) Pf(a/(x_i+x_j)) Pf(b/(x_i+x_j))", lhs,
                  ratio * pa * pb));
  return rep;
}

namespace {

/* |a_i x_i^0, a_i x_i^k, .., x_i^0, x_i^k, ..| */
Polynomial u_determinant(int n, unsigned k) {
  int m = n / 2;
  PMatrix u(n, std::vector<Polynomial>(n));
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < m; ++c) {
      Polynomial pw = xv(i).pow(k * c);
      u[i - 1][c] = xv(i, "a") * pw;
      u[i - 1][m + c] = pw;
    }
  return determinant(u);
}

Polynomial diffs(const std::vector<std::pair<int, int>>& pairs, const std::string& f) {
  Polynomial r(1L);
  for (auto [i, j] : pairs)
    r *= xv(i, f) - xv(j, f);
  return r;
}

}  // namespace

VerificationReport verify_sundquist(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6), m = n / 2;
  VerificationReport rep;
  auto lhs = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) {
    return RationalFunction(xv(i, "a") - xv(j, "a")) * inv(xv(i) + xv(j));
  }));
  RationalFunction den = inverse_product(n, [&](int i, int j) { return xv(i) + xv(j); });
  int eps = rect_sign(m);
  Polynomial u = u_determinant(n, 2);
  rep.add(compare("Pfaffian equals sign U(a,x^2) / prod (x_i+x_j)", lhs, den * RationalFunction(u.scaled(eps))));

  std::vector<std::pair<int, int>> cross;
  for (int i = 1; i <= m; ++i)
    cross.emplace_back(i, m + i);
  Polynomial seed = diffs(cross, "a") * delta_of(range(1, m), "x", 2) * delta_of(range(m + 1, n), "x", 2);
  Rational d = count_syt(Partition::rectangle(2, m));
  Polynomial middle = nabla_of(seed, n, {"a", "x"}).scaled(d * eps);
  rep.add(compare("Pfaffian equals sign d/n! sum sign(s) (seed)^s / prod (x_i+x_j)", lhs, den * RationalFunction(middle)));

  if (n == 4) {
    Polynomial printed = diffs({{1, 2}, {3, 4}}, "a") * (xv(1).pow(2) - xv(3).pow(2)) * (xv(2).pow(2) - xv(4).pow(2)) -
                         diffs({{1, 3}, {2, 4}}, "a") * (xv(1).pow(2) - xv(2).pow(2)) * (xv(3).pow(2) - xv(4).pow(2));
    rep.add(compare("printed two-term Specht expansion", lhs, den * RationalFunction(printed)));
  }
  if (n == 6) {
    Polynomial a3 = diffs({{1, 2}, {3, 4}, {5, 6}}, "a");
    Polynomial first = a3 * delta_of({1, 3, 5}, "x", 2) * delta_of({2, 4, 6}, "x", 2);
    auto S = [](int i) { return GroupAlgebraElement(Permutation::simple(i, 6)); };
    GroupAlgebraElement op = GroupAlgebraElement::identity(6) - S(2) - S(4) + S(2) * S(4) - S(2) * S(4) * S(3);
    Polynomial printed = act(op, first, {"a", "x"}) - a3 * delta_of({1, 2, 3}, "x", 2) * delta_of({4, 5, 6}, "x", 2);
    rep.add(compare("printed six-term Specht expansion", lhs, den * RationalFunction(printed)));
    // the displayed 6x6 determinant, column by column
    PMatrix shown(6, std::vector<Polynomial>(6));
    for (int i = 1; i <= 6; ++i) {
      Polynomial a = xv(i, "a"), x2 = xv(i).pow(2), x4 = xv(i).pow(4);
      shown[i - 1] = {a, a * x2, a * x4, Polynomial(1L), x2, x4};
    }
    rep.add(compare("printed 6x6 determinant equals U(a,x^2)", determinant(shown), u));
  }
  sign_values(rep, m);
  rep.values["printed_sign_holds"] = eps == 1;
  if (eps != 1)
    rep.notes.push_back("Pfaffian * prod (x_i+x_j) = -U(a,x^2) at this order: the sign (-1)^(m(m-1)/2) is required");
  return rep;
}

VerificationReport verify_powers(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6), m = n / 2;
  int r = bounded("r", p.get(p.r, 1), 1, 6);
  int k = bounded("k", p.get(p.k, 1), 1, 6);
  int q = 2 * (k - 1);
  std::vector<int> lambda;
  for (int c = 0; c < m; ++c) {
    lambda.push_back(c * q);
    lambda.push_back(c * q + r);
  }
  VerificationReport rep;
  auto lhs = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) {
    return RationalFunction(xv(i).pow(r + 1) - xv(j).pow(r + 1)) * inv(xv(i).pow(k) + xv(j).pow(k));
  }));
  Polynomial s = schur_fn(lambda, Alphabet::of("x", n));
  RationalFunction rhs = RationalFunction(delta_of(range(1, n)) * s) *
                         inverse_product(n, [&](int i, int j) { return xv(i).pow(k) + xv(j).pow(k); });
  rep.add(compare("Pfaffian equals Delta(1..n) S_lambda / prod (x_i^k + x_j^k)", lhs, rhs));
  rep.values["lambda"] = lambda;
  rep.values["schur_vanishes"] = s.is_zero();
  return rep;
}

VerificationReport verify_factor_out(const VerifyParams& p) {
  int n = p.even_order(4, 2, 6), m = n / 2;
  std::vector<int> lambda = p.shape ? *p.shape : std::vector<int>{1};
  for (int e : lambda)
    bounded("shape part", e, 0, 4);
  int k = bounded("k", p.get(p.k, 2), 1, 6);
  int b = bounded("p", p.get(p.p, 1), 0, 2);
  Alphabet B = Alphabet::of("B", b);
  auto h = [&](int i, int j) {
    Polynomial s;
    for (int e = 0; e < k; ++e)
      s += xv(i).pow(e) * xv(j).pow(k - 1 - e);
    return s;
  };
  // (x_i - x_j)/(x_i^k - x_j^k) = 1/h_{k-1}(x_i, x_j)
  auto w = [&](int i, int j) { return inv(h(i, j)); };
  auto S = [&](int i, int j) {
    Alphabet pair{{Variable{"x", {i}}, Variable{"x", {j}}}};
    return RationalFunction(schur_fn(lambda, B + pair));
  };
  RationalFunction base_det = determinant(cross_block(m, w));
  if (base_det.is_zero())
    throw ParameterError("the base determinant det((x_i-x_j)/(x_i^k-x_j^k)) vanishes for k=" + std::to_string(k) +
                         ", so the factor is undefined");
  RationalFunction f = determinant(cross_block(m, [&](int i, int j) { return S(i, j) * w(i, j); })) / base_det;

  VerificationReport rep;
  auto lhs = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) {
    return RationalFunction(xv(i, "a") - xv(j, "a")) * S(i, j) * w(i, j);
  }));
  auto base = pfaffian(PairMatrix::from_function(n, true, [&](int i, int j) {
    return RationalFunction(xv(i, "a") - xv(j, "a")) * w(i, j);
  }));
  rep.add(compare("Pfaffian equals f(x) times the base Pfaffian", lhs, f * base));
  rep.add(symmetry_check("factor f(x) is symmetric in x", f, n, {"x"}));
  return rep;
}

}  // namespace pfaffkit
