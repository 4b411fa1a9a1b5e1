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
#include <map>
#include <vector>

#include "spn/state.hpp"

namespace spn {

enum class Parity { even, odd };

inline Parity parity_xor(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}
inline const char* parity_name(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

/// Explicit permutation over canonically indexed states: images[i] is
/// the rank of the image of unrank(i). Bijectivity is verified at
/// construction.
class DensePermutation {
 public:
  DensePermutation() = default;
  explicit DensePermutation(std::vector<uint32_t> images, bool verify = true);
  static DensePermutation identity(uint64_t n);

  uint64_t size() const { return img_.size(); }
  uint32_t operator()(uint32_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }

  bool is_identity() const;
  bool operator==(const DensePermutation& o) const { return img_ == o.img_; }

  DensePermutation inverse() const;

 private:
  std::vector<uint32_t> img_;
};

/// (a o b)[i] = a[b[i]]: b applied first.
DensePermutation compose(const DensePermutation& a, const DensePermutation& b);

struct CycleDecomposition {
  std::vector<std::vector<uint32_t>> cycles;      ///< disjoint, cover all points
  std::vector<std::pair<uint64_t, uint64_t>> type;  ///< (length, count), ascending
  uint64_t even_length_cycle_count = 0;
  Parity parity = Parity::even;
};

CycleDecomposition cycle_decomposition(const DensePermutation& p);

/// Parity from the cycle type without storing cycles: odd iff the number
/// of even-length cycles is odd.
Parity permutation_parity(const DensePermutation& p);

/// Materializes a state map as an explicit permutation, checking
/// bijectivity (NotBijective carries the first collision witness).
DensePermutation materialize(
    const StateShape& shape,
    const std::function<StateMatrix(const StateMatrix&)>& map,
    uint64_t cap = enumeration_cap());

}  // namespace spn
