/*
 *  Copyright 2026 The spn authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spn/field.hpp"
#include "spn/poly.hpp"

namespace spn {

/// Dense matrix over a Field, entries stored row-major as element codes.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, uint32_t rows, uint32_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(uint64_t(rows) * cols, 0) {}

  static Mat identity(const Field& f, uint32_t n);
  static Mat from_rows(const Field& f,
                       const std::vector<std::vector<uint32_t>>& rows);
  static Mat companion(const Poly& monic);

  const Field& field() const { return f_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  uint32_t at(uint32_t i, uint32_t j) const { return a_[uint64_t(i) * cols_ + j]; }
  void set(uint32_t i, uint32_t j, uint32_t v) { a_[uint64_t(i) * cols_ + j] = v; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool is_identity() const;

  std::vector<uint32_t> mul_vec(const std::vector<uint32_t>& v) const;

  Mat pow(uint64_t e) const;

  /// Least k >= 1 with A^k = I; throws OrderCapExceeded past the cap.
  uint64_t multiplicative_order(uint64_t cap) const;

  std::optional<Mat> inverse() const;
  bool invertible() const { return inverse().has_value(); }

  uint32_t rank() const;
  uint32_t nullity() const { return cols_ - rank(); }

  /// Reduced row echelon form (zero rows dropped); canonical per subspace.
  Mat rref() const;

  /// Rows form a basis of the kernel (RREF-derived, deterministic).
  Mat nullspace_basis() const;

  /// Characteristic polynomial via Hessenberg reduction; works over any
  /// coefficient field.
  Poly charpoly() const;

 private:
  Field f_;
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

/// True when v lies in the row space of the RREF basis.
bool in_row_span(const Mat& rref_basis, const std::vector<uint32_t>& v);

/// Incremental echelon basis; add() returns true when the vector
/// enlarged the span.
class EchelonBuilder {
 public:
  EchelonBuilder(Field f, uint32_t width) : f_(std::move(f)), width_(width) {}
  bool add(std::vector<uint32_t> v);
  bool contains(std::vector<uint32_t> v) const;
  uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
  /// Canonical RREF matrix of the accumulated span.
  Mat basis() const;

 private:
  Field f_;
  uint32_t width_;
  std::vector<std::vector<uint32_t>> rows_;  // echelon, pivot-sorted
  std::vector<uint32_t> pivots_;
  bool reduce(std::vector<uint32_t>& v) const;  // true if v becomes zero
};

/// Visits every subspace of F^dim (including {0} and the full space) as
/// a canonical RREF basis. Exhaustive: callers must guard the field/dim.
void enumerate_subspaces(const Field& f, uint32_t dim,
                         const std::function<void(const Mat&)>& visit);

}  // namespace spn
