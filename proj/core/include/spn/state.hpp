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
#include <vector>

#include "spn/field.hpp"
#include "spn/numbers.hpp"

namespace spn {

/// Default enumeration cap (number of states), overridable through the
/// SPN_MAX_STATES environment variable or per-call parameters.
uint64_t enumeration_cap();

/// Shape of the state space: m x n matrices over a field.
struct StateShape {
  Field field;
  uint32_t m = 0;
  uint32_t n = 0;

  uint32_t entries() const { return m * n; }
  bigint space_size() const { return big_pow(bigint(field.order()), entries()); }
  bool enumerable(uint64_t cap) const { return space_size() <= cap; }
  /// Number of states as uint64; throws TooLarge above the cap.
  uint64_t space_size_u64(uint64_t cap) const;

  bool operator==(const StateShape& o) const {
    return field == o.field && m == o.m && n == o.n;
  }
};

/// An element of M_{m,n}(GF(p^r)); entries stored row-major as codes.
class StateMatrix {
 public:
  StateMatrix() = default;
  explicit StateMatrix(StateShape shape)
      : shape_(std::move(shape)), v_(shape_.entries(), 0) {}
  StateMatrix(StateShape shape, std::vector<uint32_t> codes);

  const StateShape& shape() const { return shape_; }
  uint32_t at(uint32_t i, uint32_t j) const { return v_[i * shape_.n + j]; }
  void set(uint32_t i, uint32_t j, uint32_t code) { v_[i * shape_.n + j] = code; }
  uint32_t entry(uint32_t flat) const { return v_[flat]; }
  void set_entry(uint32_t flat, uint32_t code) { v_[flat] = code; }
  const std::vector<uint32_t>& codes() const { return v_; }
  bool is_zero() const;

  bool operator==(const StateMatrix& o) const {
    return shape_ == o.shape_ && v_ == o.v_;
  }

 private:
  StateShape shape_;
  std::vector<uint32_t> v_;
};

/// The index law b_{ij} = a_{n*i + j}: wraps a length-mn vector into the
/// matrix, row-major. Throws LengthMismatch.
StateMatrix flatten(const StateShape& shape, const std::vector<uint32_t>& vec);
std::vector<uint32_t> unflatten(const StateMatrix& s);

/// Canonical ranking: entries row-major, each element code a base-p
/// digit group, least significant first. Bijective with [0, p^{rmn}).
uint64_t rank_state(const StateMatrix& s);
StateMatrix unrank_state(uint64_t index, const StateShape& shape);

/// Visits all states in rank order; throws TooLarge past the cap.
void for_each_state(const StateShape& shape,
                    const std::function<void(uint64_t, const StateMatrix&)>& fn,
                    uint64_t cap = enumeration_cap());

/// Materialized list variant of the enumeration.
std::vector<StateMatrix> enumerate_states(const StateShape& shape,
                                          uint64_t cap = enumeration_cap());

}  // namespace spn
