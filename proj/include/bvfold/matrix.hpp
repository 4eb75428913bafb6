/*
   Copyright 2026 The bvfold Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <vector>

#include "bvfold/rational.hpp"

namespace bvfold {

/// Small dense matrix over the rationals, row-major. Only what the node and
/// lattice checks need: rank, determinant, right kernel.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  /// Requires a square matrix.
  Rational determinant() const;
  /// Basis of { v : M v = 0 }, one vector per free column.
  std::vector<std::vector<Rational>> kernel() const;

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace bvfold
