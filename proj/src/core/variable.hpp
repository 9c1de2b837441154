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

#ifndef PFAFFKIT_VARIABLE_HPP
#define PFAFFKIT_VARIABLE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfaffkit {

class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

/* How a family with two indices treats swapped brackets. */
enum class FamilyKind { Plain, Antisymmetric, Symmetric };

struct Variable {
  std::string family;
  std::vector<int> indices;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;

  /* x_3, z_1_4, B_2 */
  std::string name() const;
  static Variable parse(const std::string& name);
};

using VarId = std::uint32_t;

/*
 * Process-wide interning of variables. Append-only; lookups and inserts are
 * guarded so independent computations may run on several threads.
 *
 * Families z, za, zb, zc are antisymmetric brackets and g is a symmetric
 * bracket unless declared otherwise before first use.
 */
class VariableTable {
public:
  static VariableTable& instance();

  VarId intern(const Variable& v);
  Variable get(VarId id) const;
  const std::string& family_of(VarId id) const;
  std::vector<int> indices_of(VarId id) const;
  std::uint32_t family_id(const std::string& family);
  std::uint32_t family_id_of(VarId id) const;

  FamilyKind kind(const std::string& family) const;
  /* Throws ParameterError when the family is already used with another kind. */
  void declare(const std::string& family, FamilyKind kind);

  /* Strict weak order (family, indices) independent of interning order. */
  bool less(VarId a, VarId b) const;

private:
  VariableTable();
  struct Impl;
  Impl* impl_;
};

}  // namespace pfaffkit

#endif
