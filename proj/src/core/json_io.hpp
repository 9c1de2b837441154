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

#ifndef PFAFFKIT_JSON_IO_HPP
#define PFAFFKIT_JSON_IO_HPP

#include "json.hpp"

#include "pfaffian.hpp"
#include "schur.hpp"
#include "specht.hpp"

namespace pfaffkit {

using Json = nlohmann::ordered_json;

/* {"terms":[{"coeff":"p/q","monomial":{"x_1":2}}]}, terms in decreasing grlex order. */
Json to_json(const Polynomial& p);
/* {"num":..., "den":...} with the expanded denominator. */
Json to_json(const RationalFunction& f);
Json to_json(const Permutation& p);
Json to_json(const GroupAlgebraElement& e);
Json to_json(const Partition& p);
Json to_json(const StandardTableau& t);
Json to_json(const ChangeOfBasisMatrix& m);
Json to_json(const ProducerSpec& s);

/* Accepts a term object, a bare number or a rational string. */
Polynomial polynomial_from_json(const Json& j);
/* Accepts {"num","den"} or anything polynomial_from_json takes. */
RationalFunction ratfn_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
/* Either order of parts; stored decreasing. */
Partition partition_from_json(const Json& j);
StandardTableau tableau_from_json(const Json& j);
/* {"n":4, "entries":[{"i":1,"j":2,"value":...}], "symmetric":false} */
PairMatrix matrix_from_json(const Json& j);

/*
 * Producer descriptors. Objects follow
 * {"kind":"schur","v":[1],"alphabet":["B_1"],"sign":"+"}; strings are the
 * shorthands generic2xN, differences[:fam], symbolic[:fam], symmetric[:fam],
 * cauchy, power:k and schur:v1,v2[/p][+|-].
 */
ProducerSpec producer_from_json(const Json& j);
ProducerSpec producer_from_string(const std::string& s);

}  // namespace pfaffkit

#endif
