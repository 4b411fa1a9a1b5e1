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

#include "spn/state.hpp"

#include <algorithm>
#include <cstdlib>

namespace spn {

uint64_t enumeration_cap() {
  static const uint64_t cap = [] {
    if (const char* env = std::getenv("SPN_MAX_STATES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return uint64_t(1) << 20;
  }();
  return cap;
}

uint64_t StateShape::space_size_u64(uint64_t cap) const {
  bigint sz = space_size();
  if (sz > cap)
    fail(errc::too_large, "state space of " + sz.str() +
                              " states exceeds the cap " + std::to_string(cap));
  return static_cast<uint64_t>(sz);
}

StateMatrix::StateMatrix(StateShape shape, std::vector<uint32_t> codes)
    : shape_(std::move(shape)), v_(std::move(codes)) {
  if (v_.size() != shape_.entries())
    fail(errc::length_mismatch,
         "state entry count " + std::to_string(v_.size()) + " != m*n = " +
             std::to_string(shape_.entries()));
}

bool StateMatrix::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](uint32_t c) { return c == 0; });
}

StateMatrix flatten(const StateShape& shape, const std::vector<uint32_t>& vec) {
  if (vec.size() != shape.entries())
    fail(errc::length_mismatch, "flatten needs a vector of length m*n");
  return StateMatrix(shape, vec);  // b_{ij} = a_{n*i+j} is row-major order
}

std::vector<uint32_t> unflatten(const StateMatrix& s) { return s.codes(); }

uint64_t rank_state(const StateMatrix& s) {
  const uint64_t q = s.shape().field.order();
  uint64_t idx = 0;
  const auto& v = s.codes();
  for (size_t t = v.size(); t-- > 0;) idx = idx * q + v[t];
  return idx;
}

StateMatrix unrank_state(uint64_t index, const StateShape& shape) {
  const uint64_t q = shape.field.order();
  std::vector<uint32_t> v(shape.entries());
  for (uint32_t t = 0; t < shape.entries(); ++t) {
    v[t] = static_cast<uint32_t>(index % q);
    index /= q;
  }
  if (index != 0)
    fail(errc::index_out_of_range, "state index exceeds p^(r*m*n)");
  return StateMatrix(shape, std::move(v));
}

void for_each_state(const StateShape& shape,
                    const std::function<void(uint64_t, const StateMatrix&)>& fn,
                    uint64_t cap) {
  const uint64_t total = shape.space_size_u64(cap);
  const uint64_t q = shape.field.order();
  StateMatrix s(shape);
  for (uint64_t idx = 0; idx < total; ++idx) {
    fn(idx, s);
    // odometer step keeps enumeration O(1) amortized per state
    for (uint32_t t = 0; t < shape.entries(); ++t) {
      uint32_t c = s.entry(t) + 1;
      if (c < q) {
        s.set_entry(t, c);
        break;
      }
      s.set_entry(t, 0);
    }
  }
}

std::vector<StateMatrix> enumerate_states(const StateShape& shape, uint64_t cap) {
  std::vector<StateMatrix> out;
  out.reserve(shape.space_size_u64(cap));
  for_each_state(shape, [&](uint64_t, const StateMatrix& s) { out.push_back(s); },
                 cap);
  return out;
}

}  // namespace spn
