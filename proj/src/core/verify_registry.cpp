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

#include <chrono>
#include <functional>
#include <utility>

#include "verify.hpp"

namespace pfaffkit {

namespace {

using Runner = VerificationReport (*)(const VerifyParams&);

struct Entry {
  const char* id;
  const char* theorem;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"pfaffzg", "Pfaffian of z[i,j] g[i,j] through Young and Specht polynomials", verify_pfaffzg},
      {"pfaffabz", "Pfaffian of a[i,j] b[i,j] / z[i,j] for two Plucker families", verify_pfaffabz},
      {"okada-split", "Pfaffian of (a_i - a_j)(b_i - b_j) / ((x_i - x_j)(x_i + x_j))", verify_okada_split},
      {"sundquist", "Pfaffian of (x_i - x_j)/(x_i + x_j) times Schur quotients", verify_sundquist},
      {"powers", "Pfaffian of (x_i^r - x_j^r)/(x_i^k - x_j^k) as a Schur function", verify_powers},
      {"factor-out", "Factoring a symmetric function out of a Pfaffian with w = 1/h_{k-1}", verify_factor_out},
      {"det-symmetry", "Determinant of z[i,j]/(x_i - x_j) over the cross block", verify_det_symmetry},
      {"schur-det", "Symmetry of cross-block determinants of S_lambda(B + x_i + x_j)", verify_schur_det},
      {"cd", "Cross-block determinants of rectangular and staircase Schur functions", verify_cd},
      {"powers-det", "Cross-block determinant of (x_i^r - x_j^r)/(x_i^k - x_j^k)", verify_powers_det},
      {"detaz", "Cross-block determinant of a[i,j]/z[i,j]", verify_detaz},
      {"prop31", "nabla as an ordered product times the Pfaffian sum", verify_prop31},
      {"yang-baxter", "Yang-Baxter relations for s_i + 1/rho", verify_yang_baxter},
      {"change-of-basis", "Young polynomials on the Specht basis", verify_change_of_basis},
      {"plucker", "Plucker relations of the producer families", verify_plucker},
      {"kronecker", "Vanishing alternating sum of symmetric minors", verify_kronecker},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verification_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto& e : entries())
      v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

VerificationReport run_verification(const std::string& id, const VerifyParams& p) {
  for (auto& e : entries()) {
    if (id != e.id)
      continue;
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep = e.run(p);
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.theorem = e.id;
    rep.parameters = p.to_json();
    rep.notes.insert(rep.notes.begin(), e.theorem);
    return rep;
  }
  throw ParameterError("unknown verification id '" + id + "'");
}

}  // namespace pfaffkit
