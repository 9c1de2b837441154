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

#include "variable.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace pfaffkit {

std::string Variable::name() const {
  std::string s = family;
  for (int i : indices) {
    s += '_';
    s += std::to_string(i);
  }
  return s;
}

Variable Variable::parse(const std::string& name) {
  Variable v;
  std::size_t pos = name.find('_');
  v.family = name.substr(0, pos);
  if (v.family.empty())
    throw ParameterError("bad variable name '" + name + "'");
  while (pos != std::string::npos) {
    std::size_t next = name.find('_', pos + 1);
    std::string part = name.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    if (part.empty())
      throw ParameterError("bad variable name '" + name + "'");
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParameterError("bad variable index in '" + name + "'");
    v.indices.push_back(std::stoi(part));
    pos = next;
  }
  return v;
}

struct VariableTable::Impl {
  struct Record {
    Variable var;
    std::uint32_t family;
  };
  mutable std::shared_mutex mutex;
  std::deque<Record> records;
  std::map<Variable, VarId> ids;
  std::map<std::string, std::uint32_t> family_ids;
  std::deque<std::string> family_names;
  std::map<std::string, FamilyKind> kinds;
  std::map<std::string, bool> used;

  std::uint32_t family_id_locked(const std::string& f) {
    auto it = family_ids.find(f);
    if (it != family_ids.end())
      return it->second;
    auto id = static_cast<std::uint32_t>(family_names.size());
    family_names.push_back(f);
    family_ids.emplace(f, id);
    return id;
  }
};

VariableTable::VariableTable() : impl_(new Impl) {
  for (const char* f : {"z", "za", "zb", "zc"})
    impl_->kinds[f] = FamilyKind::Antisymmetric;
  impl_->kinds["g"] = FamilyKind::Symmetric;
}

VariableTable& VariableTable::instance() {
  static VariableTable table;
  return table;
}

VarId VariableTable::intern(const Variable& v) {
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->ids.find(v);
    if (it != impl_->ids.end())
      return it->second;
  }
  std::unique_lock lock(impl_->mutex);
  auto it = impl_->ids.find(v);
  if (it != impl_->ids.end())
    return it->second;
  auto id = static_cast<VarId>(impl_->records.size());
  if (id >= (1u << 20))
    throw std::length_error("too many variables");
  impl_->records.push_back({v, impl_->family_id_locked(v.family)});
  impl_->ids.emplace(v, id);
  impl_->used[v.family] = true;
  return id;
}

Variable VariableTable::get(VarId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->records.at(id).var;
}

const std::string& VariableTable::family_of(VarId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->family_names[impl_->records.at(id).family];
}

std::vector<int> VariableTable::indices_of(VarId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->records.at(id).var.indices;
}

std::uint32_t VariableTable::family_id(const std::string& family) {
  std::unique_lock lock(impl_->mutex);
  return impl_->family_id_locked(family);
}

std::uint32_t VariableTable::family_id_of(VarId id) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->records.at(id).family;
}

FamilyKind VariableTable::kind(const std::string& family) const {
  std::shared_lock lock(impl_->mutex);
  auto it = impl_->kinds.find(family);
  return it == impl_->kinds.end() ? FamilyKind::Plain : it->second;
}

void VariableTable::declare(const std::string& family, FamilyKind kind) {
  std::unique_lock lock(impl_->mutex);
  auto it = impl_->kinds.find(family);
  FamilyKind current = it == impl_->kinds.end() ? FamilyKind::Plain : it->second;
  if (current == kind)
    return;
  if (impl_->used.count(family))
    throw ParameterError("family '" + family + "' already in use with another bracket kind");
  impl_->kinds[family] = kind;
}

bool VariableTable::less(VarId a, VarId b) const {
  if (a == b)
    return false;
  std::shared_lock lock(impl_->mutex);
  return impl_->records.at(a).var < impl_->records.at(b).var;
}

}  // namespace pfaffkit
