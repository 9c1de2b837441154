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

#ifndef PFAFFKIT_QMATRIX_HPP
#define PFAFFKIT_QMATRIX_HPP

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace pfaffkit {

/* Dense matrix over Q, row-major. */
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;

  std::size_t rank() const;
  /* nullopt when singular */
  std::optional<QMatrix> inverse() const;
  /* Solves A x = b for square invertible A. */
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace pfaffkit

#endif
